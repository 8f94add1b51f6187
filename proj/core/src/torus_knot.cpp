#include "qmod/torus_knot.hpp"

#include <algorithm>
#include <numeric>

#include "qmod/simples.hpp"

namespace qmod {

TorusKnotDims::TorusKnotDims(std::vector<int> a, std::vector<int> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || b_.empty()) throw Error("torus knot margins need p, q >= 1");
  auto nonneg = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
  };
  if (!nonneg(a_) || !nonneg(b_)) throw Error("torus knot margins must be nonnegative");
  const int sa = std::accumulate(a_.begin(), a_.end(), 0);
  const int sb = std::accumulate(b_.begin(), b_.end(), 0);
  if (sa != sb) {
    throw Error("margins disagree: sum(a) = " + std::to_string(sa) + " but sum(b) = " + std::to_string(sb));
  }
  if (sa == 0) throw Error("torus knot margins must have total dimension n >= 1");
  n_ = sa;
}

DimVector TorusKnotDims::as_dim_vector() const {
  std::vector<int> c(a_);
  c.insert(c.end(), b_.begin(), b_.end());
  return DimVector(std::move(c));
}

std::pair<Quiver, Weight> torus_knot_setting(int p, int q) {
  Quiver quiver = bipartite(p, q);
  std::vector<int> theta(static_cast<std::size_t>(p), -1);
  theta.insert(theta.end(), static_cast<std::size_t>(q), 1);
  return {std::move(quiver), Weight(std::move(theta))};
}

std::optional<MarginViolation> torus_knot_violation(const TorusKnotDims& d) {
  if (d.n() == 1) return std::nullopt;
  std::optional<MarginViolation> worst;
  for (int i = 0; i < d.p(); ++i) {
    for (int j = 0; j < d.q(); ++j) {
      const int s = d.a()[i] + d.b()[j];
      if (s > d.n() && (!worst || s > worst->sum)) worst = MarginViolation{i, j, s, d.n()};
    }
  }
  return worst;
}

bool torus_knot_stable(const TorusKnotDims& d) { return !torus_knot_violation(d).has_value(); }

Quiver build_gamma(int p, int q) {
  if (p <= 0 || q <= 0) throw Error("gamma quiver needs p, q >= 1");
  std::vector<Arrow> arrows;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int k = 0; k < p; ++k) {
        for (int l = 0; l < q; ++l) {
          if (i != k && j != l) arrows.emplace_back(gamma_index(i, j, q), gamma_index(k, l, q));
        }
      }
    }
  }
  return Quiver(p * q, arrows);
}

CountMatrix::CountMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw Error("ragged count matrix");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

std::vector<int> CountMatrix::row_sums() const {
  std::vector<int> s(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
  }
  return s;
}

std::vector<int> CountMatrix::col_sums() const {
  std::vector<int> s(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
  }
  return s;
}

bool torus_knot_stable_via_gamma(const TorusKnotDims& d, const CountMatrix& m) {
  if (m.rows() != d.p() || m.cols() != d.q()) throw Error("decomposition matrix must be p×q");
  if (std::any_of(m.entries().begin(), m.entries().end(), [](int x) { return x < 0; })) {
    throw Error("decomposition matrix has a negative entry");
  }
  if (m.row_sums() != d.a() || m.col_sums() != d.b()) {
    throw Error("decomposition matrix margins do not match (a; b)");
  }
  return is_simple_dim(build_gamma(d.p(), d.q()), DimVector(m.entries()));
}

std::optional<CountMatrix> find_decomposition(const TorusKnotDims& d) {
  std::vector<int> row(d.a());
  std::vector<int> col(d.b());
  CountMatrix m(d.p(), d.q());
  int i = 0;
  int j = 0;
  while (i < d.p() && j < d.q()) {
    const int x = std::min(row[i], col[j]);
    m(i, j) = x;
    row[i] -= x;
    col[j] -= x;
    if (row[i] == 0) {
      ++i;
    } else {
      ++j;
    }
  }
  if (m.row_sums() != d.a() || m.col_sums() != d.b()) return std::nullopt;
  return m;
}

namespace {

// Fills cells in row-major order, bounded by remaining row and column sums.
bool fill_cells(const TorusKnotDims& d, CountMatrix& m, std::vector<int>& row, std::vector<int>& col,
                int cell, const std::function<bool(const CountMatrix&)>& visit) {
  const int p = d.p();
  const int q = d.q();
  if (cell == p * q) return visit(m);
  const int i = cell / q;
  const int j = cell % q;
  // The last cell of a row or column is forced.
  int lo = 0;
  int hi = std::min(row[i], col[j]);
  if (j == q - 1) {
    lo = std::max(lo, row[i]);
    hi = std::min(hi, row[i]);
  }
  if (i == p - 1) {
    lo = std::max(lo, col[j]);
    hi = std::min(hi, col[j]);
  }
  for (int x = lo; x <= hi; ++x) {
    m(i, j) = x;
    row[i] -= x;
    col[j] -= x;
    const bool go_on = fill_cells(d, m, row, col, cell + 1, visit);
    row[i] += x;
    col[j] += x;
    if (!go_on) return false;
  }
  m(i, j) = 0;
  return true;
}

}  // namespace

void for_each_decomposition(const TorusKnotDims& d, const std::function<bool(const CountMatrix&)>& visit) {
  CountMatrix m(d.p(), d.q());
  std::vector<int> row(d.a());
  std::vector<int> col(d.b());
  fill_cells(d, m, row, col, 0, visit);
}

std::optional<bool> gamma_route_stable(const TorusKnotDims& d, int exhaustive_limit) {
  if (const auto nw = find_decomposition(d); nw && torus_knot_stable_via_gamma(d, *nw)) return true;
  if (d.n() > exhaustive_limit) return std::nullopt;
  const Quiver gamma = build_gamma(d.p(), d.q());
  bool found = false;
  for_each_decomposition(d, [&](const CountMatrix& m) {
    found = is_simple_dim(gamma, DimVector(m.entries()));
    return !found;
  });
  return found;
}

}  // namespace qmod
