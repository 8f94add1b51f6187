#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qmod {

bool is_prime(std::uint64_t n);

/// Smallest prime ℓ > lower_bound with ℓ ≡ 1 (mod m).
std::uint64_t smallest_prime_congruent_one(std::uint64_t m, std::uint64_t lower_bound);

/// Arithmetic in F_ℓ for a prime ℓ < 2^31, elements stored reduced in [0, ℓ).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inv(std::uint64_t a) const;

  /// A generator of the multiplicative group.
  std::uint64_t primitive_root() const;
  /// An element of exact multiplicative order `order`; throws if order ∤ ℓ−1.
  std::uint64_t root_of_unity(std::uint64_t order) const;

 private:
  std::uint64_t p_;
};

/// SplitMix64: the fixed 64-bit mixing generator used for every sample.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Dense matrix over F_ℓ, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FpMatrix identity(int n);
  static FpMatrix random(const PrimeField& field, SplitMix64& rng, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::uint64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<const std::uint64_t> data() const { return data_; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

FpMatrix multiply(const PrimeField& field, const FpMatrix& a, const FpMatrix& b);
/// Gauss–Jordan inverse; nullopt for singular input.
std::optional<FpMatrix> inverse(const PrimeField& field, const FpMatrix& a);
int rank(const PrimeField& field, const FpMatrix& a);

/// Incrementally maintained fully reduced row basis of a subspace of F_ℓ^d.
class SpanBasis {
 public:
  SpanBasis(const PrimeField& field, std::size_t dim) : field_(&field), dim_(dim) {}

  /// Adds v to the span; returns true iff the dimension grew.
  bool insert(std::vector<std::uint64_t> v);
  std::size_t size() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  const PrimeField* field_;
  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

struct SpanClosure {
  int dimension = 0;
  /// Span dimension after seeding and after each multiplication round.
  std::vector<int> round_dims;
};

/// Linear span of the unital algebra generated by n×n matrices: seeds with the
/// identity and the generators, then multiplies each newly added basis element
/// by every generator on both sides until nothing new appears or the span
/// reaches n².
SpanClosure span_closure(const PrimeField& field, int n, std::span<const FpMatrix> generators);

}  // namespace qmod
