#include "qmod/prime_field.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "qmod/quiver.hpp"

namespace qmod {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_congruent_one(std::uint64_t m, std::uint64_t lower_bound) {
  if (m == 0) throw Error("modulus of congruence must be positive");
  std::uint64_t l = lower_bound + 1;
  l += (m + 1 - l % m) % m;  // first l > lower_bound with l ≡ 1 (mod m)
  if (m == 1) l = lower_bound + 1;
  while (!is_prime(l)) l += m;
  return l;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (1ULL << 31)) throw Error("field modulus must be below 2^31");
  if (!is_prime(modulus)) throw Error("field modulus " + std::to_string(modulus) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error("division by zero in prime field");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p_ - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p_; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors) {
      if (pow(g, (p_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

std::uint64_t PrimeField::root_of_unity(std::uint64_t order) const {
  if (order == 0 || (p_ - 1) % order != 0) {
    throw Error("F_" + std::to_string(p_) + " has no element of multiplicative order " + std::to_string(order));
  }
  return pow(primitive_root(), (p_ - 1) / order);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

FpMatrix FpMatrix::identity(int n) {
  FpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::random(const PrimeField& field, SplitMix64& rng, int rows, int cols) {
  FpMatrix m(rows, cols);
  for (auto& x : m.data_) x = rng.uniform(field.modulus());
  return m;
}

FpMatrix multiply(const PrimeField& field, const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
  const std::uint64_t p = field.modulus();
  FpMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(k, j)) % p;
    }
  }
  return c;
}

namespace {

// Reduced row echelon form in place; returns the rank.
int row_reduce(const PrimeField& f, FpMatrix& m, FpMatrix* companion) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    auto swap_rows = [](FpMatrix& x, int i, int j) {
      for (int k = 0; k < x.cols(); ++k) std::swap(x(i, k), x(j, k));
    };
    swap_rows(m, r, piv);
    if (companion) swap_rows(*companion, r, piv);
    const std::uint64_t s = f.inv(m(r, c));
    for (int k = 0; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), s);
    if (companion) {
      for (int k = 0; k < companion->cols(); ++k) (*companion)(r, k) = f.mul((*companion)(r, k), s);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t t = m(i, c);
      for (int k = 0; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(t, m(r, k)));
      if (companion) {
        for (int k = 0; k < companion->cols(); ++k) {
          (*companion)(i, k) = f.sub((*companion)(i, k), f.mul(t, (*companion)(r, k)));
        }
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::optional<FpMatrix> inverse(const PrimeField& field, const FpMatrix& a) {
  if (a.rows() != a.cols()) throw Error("inverse of a non-square matrix");
  FpMatrix work = a;
  FpMatrix inv = FpMatrix::identity(a.rows());
  if (row_reduce(field, work, &inv) != a.rows()) return std::nullopt;
  return inv;
}

int rank(const PrimeField& field, const FpMatrix& a) {
  FpMatrix work = a;
  return row_reduce(field, work, nullptr);
}

bool SpanBasis::insert(std::vector<std::uint64_t> v) {
  if (v.size() != dim_) throw Error("vector length does not match span ambient dimension");
  const PrimeField& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint64_t t = v[pivots_[r]];
    if (t == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (row[k]) v[k] = f.sub(v[k], f.mul(t, row[k]));
    }
  }
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const std::uint64_t s = f.inv(v[piv]);
  for (auto& x : v) x = f.mul(x, s);
  // Keep the basis fully reduced: clear the new pivot column elsewhere.
  for (auto& row : rows_) {
    const std::uint64_t t = row[piv];
    if (t == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k]) row[k] = f.sub(row[k], f.mul(t, v[k]));
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

namespace {

std::vector<std::uint64_t> flatten(const FpMatrix& m) { return {m.data().begin(), m.data().end()}; }

}  // namespace

SpanClosure span_closure(const PrimeField& field, int n, std::span<const FpMatrix> generators) {
  if (n <= 0) throw Error("span closure needs n >= 1");
  for (const FpMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n) throw Error("generator is not n×n");
  }
  const auto full = static_cast<std::size_t>(n) * n;
  SpanBasis basis(field, full);
  std::vector<FpMatrix> frontier;
  auto add = [&](const FpMatrix& m, std::vector<FpMatrix>& into) {
    if (basis.size() < full && basis.insert(flatten(m))) into.push_back(m);
  };
  add(FpMatrix::identity(n), frontier);
  for (const FpMatrix& g : generators) add(g, frontier);

  SpanClosure out;
  out.round_dims.push_back(static_cast<int>(basis.size()));
  while (!frontier.empty() && basis.size() < full) {
    std::vector<FpMatrix> next;
    for (const FpMatrix& b : frontier) {
      for (const FpMatrix& g : generators) {
        add(multiply(field, g, b), next);
        add(multiply(field, b, g), next);
      }
    }
    frontier = std::move(next);
    out.round_dims.push_back(static_cast<int>(basis.size()));
  }
  out.dimension = static_cast<int>(basis.size());
  return out;
}

}  // namespace qmod
