#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod {

/// Eigenspace multiplicities of an n-dimensional Z_p ∗ Z_q representation:
/// a_i for the p-th roots of unity, b_j for the q-th roots, Σa = Σb = n ≥ 1.
class TorusKnotDims {
 public:
  TorusKnotDims(std::vector<int> a, std::vector<int> b);

  int p() const { return static_cast<int>(a_.size()); }
  int q() const { return static_cast<int>(b_.size()); }
  int n() const { return n_; }
  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }

  /// (a_1,…,a_p; b_1,…,b_q) as a dimension vector of bipartite(p,q).
  DimVector as_dim_vector() const;

 private:
  std::vector<int> a_;
  std::vector<int> b_;
  int n_ = 0;
};

/// bipartite(p,q) with θ = (−1,…,−1; 1,…,1).
std::pair<Quiver, Weight> torus_knot_setting(int p, int q);

/// A pair (i,j), 0-based, with a_i + b_j > n.
struct MarginViolation {
  int i = 0;
  int j = 0;
  int sum = 0;
  int n = 0;
};

/// The largest violation a_i + b_j > n (first in row-major order), if any.
/// Always empty when n = 1.
std::optional<MarginViolation> torus_knot_violation(const TorusKnotDims& d);

/// n = 1, or a_i + b_j ≤ n for all i, j.
bool torus_knot_stable(const TorusKnotDims& d);

/// Quiver Γ on p·q vertices v_ij (index i·q + j, 0-based) with one arrow
/// v_ij → v_kl exactly when i ≠ k and j ≠ l.
Quiver build_gamma(int p, int q);

inline int gamma_index(int i, int j, int q) { return i * q + j; }

/// A p×q matrix of nonnegative integers, row-major.
class CountMatrix {
 public:
  CountMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {}
  CountMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

/// Decides via Γ: flatten(m) must be a simple dimension vector of build_gamma(p,q).
/// m must have row sums a and column sums b.
bool torus_knot_stable_via_gamma(const TorusKnotDims& d, const CountMatrix& m);

/// Northwest-corner filling with row sums a and column sums b.
std::optional<CountMatrix> find_decomposition(const TorusKnotDims& d);

/// Calls visit on every nonnegative integer matrix with the margins of d, in a
/// fixed order, until visit returns false.
void for_each_decomposition(const TorusKnotDims& d, const std::function<bool(const CountMatrix&)>& visit);

/// ∃ m with the margins of d such that the Γ route succeeds. Tries the
/// northwest-corner m first; if it fails and n ≤ exhaustive_limit, searches all
/// m. Returns nullopt when the northwest corner fails above the limit.
std::optional<bool> gamma_route_stable(const TorusKnotDims& d, int exhaustive_limit = 4);

}  // namespace qmod
