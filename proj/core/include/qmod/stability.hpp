#pragma once

#include <cstddef>
#include <vector>

#include "qmod/quiver.hpp"
#include "qmod/subdims.hpp"

namespace qmod {

/// One summand type (m, β) of a semistable representation type.
struct Part {
  int multiplicity = 0;
  DimVector dim;

  friend bool operator==(const Part&, const Part&) = default;
};

/// τ = (m_1,β_1; …; m_l,β_l). Repeated β_i are allowed: distinct stable
/// summands may share a dimension vector.
class DecompositionType {
 public:
  explicit DecompositionType(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t dim_size() const { return parts_.front().dim.size(); }

  /// Σ m_i β_i.
  DimVector composite() const;

 private:
  std::vector<Part> parts_;
};

/// Local quiver Q′ together with the multiplicity vector α′ = (m_1,…,m_l).
struct LocalQuiverSetting {
  Quiver quiver;
  DimVector dims;
};

/// θ(a) = 0 and θ(β) ≥ 0 for every β ↪ a. A nonzero θ(a) gives false.
bool is_theta_semistable_dim(const Quiver& q, const Weight& theta, const DimVector& a,
                             std::size_t lattice_budget = kDefaultLatticeBudget);
bool is_theta_semistable_dim(SubdimTable& table, const Weight& theta, const DimVector& a);

/// θ(a) = 0 and θ(β) > 0 for every β ↪ a other than 0 and a. Throws on a = 0.
bool is_theta_stable_dim(const Quiver& q, const Weight& theta, const DimVector& a,
                         std::size_t lattice_budget = kDefaultLatticeBudget);
bool is_theta_stable_dim(SubdimTable& table, const Weight& theta, const DimVector& a);

/// Quiver on one vertex per part with δ_ij − χ(β_i, β_j) arrows from w_i to w_j.
/// A negative count means the β_i cannot be a family of distinct stables and
/// raises an error naming the pair.
LocalQuiverSetting local_quiver(const Quiver& q, const DecompositionType& tau);

struct StableViaLocalOptions {
  /// Skip the per-part stability precondition.
  bool assume_parts_stable = false;
  std::size_t lattice_budget = kDefaultLatticeBudget;
};

/// Decides stability of Σ m_i β_i as simplicity of α′ on the local quiver.
/// Every β_i must itself be θ-stable.
bool stable_via_local(const Quiver& q, const Weight& theta, const DecompositionType& tau,
                      const StableViaLocalOptions& options = {});
bool stable_via_local(SubdimTable& table, const Weight& theta, const DecompositionType& tau,
                      bool assume_parts_stable = false);

/// 1 − χ(a,a), the dimension of the moduli space at a stable point. Refuses
/// anything that is not a stable dimension vector.
std::int64_t moduli_dimension(const Quiver& q, const Weight& theta, const DimVector& a,
                              std::size_t lattice_budget = kDefaultLatticeBudget);

/// All a with 0 < Σa ≤ max_total, θ(a) = 0 and a θ-stable, in lexicographic order.
std::vector<DimVector> enumerate_stable_dims(const Quiver& q, const Weight& theta, int max_total,
                                             std::size_t lattice_budget = kDefaultLatticeBudget);

/// All dimension vectors of the given length with total dimension in [lo, hi],
/// in lexicographic order.
std::vector<DimVector> dims_with_total(std::size_t size, int lo, int hi);

}  // namespace qmod
