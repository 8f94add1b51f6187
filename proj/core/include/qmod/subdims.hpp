#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod {

inline constexpr std::size_t kDefaultLatticeBudget = 1'000'000;

/// Memoized Schofield recursion for generic subrepresentation dimension vectors.
///
/// β ↪ α holds when a general α-dimensional representation has a
/// subrepresentation of dimension β. The recursion runs over β:
///
///   β ↪ α  iff  max { −χ(γ, α−β) : γ ↪ β } = 0,
///
/// with 0 ↪ α and α ↪ α always. Since γ = 0 contributes 0 to the max, the test
/// reduces to χ(γ, α−β) ≥ 0 for every γ ↪ β. Every box [0,α] is filled in
/// order of increasing total dimension so all S_β needed are already stored.
///
/// Not thread-safe; use one table per thread.
class SubdimTable {
 public:
  explicit SubdimTable(Quiver q, std::size_t lattice_budget = kDefaultLatticeBudget);

  /// S_a, sorted lexicographically. The reference stays valid for the
  /// lifetime of the table.
  const std::vector<DimVector>& subdims(const DimVector& a);

  /// b ↪ a. Vectors with b ≰ a are rejected before any recursion.
  bool embeds(const DimVector& b, const DimVector& a);

  const Quiver& quiver() const { return quiver_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  void check(const DimVector& a) const;
  bool passes(const DimVector& beta, const DimVector& a) const;
  void fill_box(const DimVector& a);

  Quiver quiver_;
  EulerMatrix chi_;
  std::size_t budget_;
  std::unordered_map<DimVector, std::vector<DimVector>> memo_;
};

/// Number of lattice points in the box [0,a], saturating at SIZE_MAX.
std::size_t box_size(const DimVector& a);

/// All β with 0 ≤ β ≤ a, in lexicographic order.
std::vector<DimVector> box_points(const DimVector& a);

std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& a,
                                       std::size_t lattice_budget = kDefaultLatticeBudget);

bool is_generic_subdim(const Quiver& q, const DimVector& b, const DimVector& a,
                       std::size_t lattice_budget = kDefaultLatticeBudget);

}  // namespace qmod
