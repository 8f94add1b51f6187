#include "qmod/stability.hpp"

#include <algorithm>

#include "qmod/simples.hpp"

namespace qmod {

DecompositionType::DecompositionType(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error("decomposition type needs at least one part");
  const std::size_t k = parts_.front().dim.size();
  for (const Part& p : parts_) {
    if (p.multiplicity <= 0) throw Error("part multiplicities must be positive");
    check_same_size(k, p.dim.size(), "part dimension vector");
    if (p.dim.is_zero()) throw Error("part dimension vectors must be nonzero");
  }
}

DimVector DecompositionType::composite() const {
  DimVector sum = DimVector::zero(dim_size());
  for (const Part& p : parts_) sum = sum + p.dim.scaled(p.multiplicity);
  return sum;
}

bool is_theta_semistable_dim(SubdimTable& table, const Weight& theta, const DimVector& a) {
  check_same_size(static_cast<std::size_t>(table.quiver().num_vertices()), theta.size(), "weight");
  check_same_size(theta.size(), a.size(), "dimension vector");
  if (theta_pairing(theta, a) != 0) return false;
  const auto& subs = table.subdims(a);
  return std::all_of(subs.begin(), subs.end(),
                     [&](const DimVector& b) { return theta_pairing(theta, b) >= 0; });
}

bool is_theta_semistable_dim(const Quiver& q, const Weight& theta, const DimVector& a,
                             std::size_t lattice_budget) {
  SubdimTable table(q, lattice_budget);
  return is_theta_semistable_dim(table, theta, a);
}

bool is_theta_stable_dim(SubdimTable& table, const Weight& theta, const DimVector& a) {
  check_same_size(static_cast<std::size_t>(table.quiver().num_vertices()), theta.size(), "weight");
  check_same_size(theta.size(), a.size(), "dimension vector");
  if (a.is_zero()) throw Error("stability is undefined for the zero dimension vector");
  if (theta_pairing(theta, a) != 0) return false;
  const auto& subs = table.subdims(a);
  return std::all_of(subs.begin(), subs.end(), [&](const DimVector& b) {
    return b.is_zero() || b == a || theta_pairing(theta, b) > 0;
  });
}

bool is_theta_stable_dim(const Quiver& q, const Weight& theta, const DimVector& a,
                         std::size_t lattice_budget) {
  SubdimTable table(q, lattice_budget);
  return is_theta_stable_dim(table, theta, a);
}

LocalQuiverSetting local_quiver(const Quiver& q, const DecompositionType& tau) {
  check_same_size(static_cast<std::size_t>(q.num_vertices()), tau.dim_size(), "part dimension vector");
  const EulerMatrix chi = euler_form(q);
  const auto& parts = tau.parts();
  const int l = static_cast<int>(parts.size());
  std::vector<int> counts(static_cast<std::size_t>(l) * l);
  std::vector<int> mult;
  for (int i = 0; i < l; ++i) {
    mult.push_back(parts[i].multiplicity);
    for (int j = 0; j < l; ++j) {
      const std::int64_t n = (i == j ? 1 : 0) - euler_pairing(chi, parts[i].dim, parts[j].dim);
      if (n < 0) {
        throw Error("negative arrow count " + std::to_string(n) + " from part " + std::to_string(i) +
                    " " + to_string(parts[i].dim) + " to part " + std::to_string(j) + " " +
                    to_string(parts[j].dim) + "; these cannot be distinct stable summands");
      }
      counts[static_cast<std::size_t>(i) * l + j] = static_cast<int>(n);
    }
  }
  return {Quiver::from_counts(l, std::move(counts)), DimVector(std::move(mult))};
}

bool stable_via_local(SubdimTable& table, const Weight& theta, const DecompositionType& tau,
                      bool assume_parts_stable) {
  if (!assume_parts_stable) {
    for (const Part& p : tau.parts()) {
      if (!is_theta_stable_dim(table, theta, p.dim)) {
        throw Error("part " + to_string(p.dim) + " is not a θ-stable dimension vector");
      }
    }
  }
  const LocalQuiverSetting local = local_quiver(table.quiver(), tau);
  return is_simple_dim(local.quiver, local.dims);
}

bool stable_via_local(const Quiver& q, const Weight& theta, const DecompositionType& tau,
                      const StableViaLocalOptions& options) {
  SubdimTable table(q, options.lattice_budget);
  return stable_via_local(table, theta, tau, options.assume_parts_stable);
}

std::int64_t moduli_dimension(const Quiver& q, const Weight& theta, const DimVector& a,
                              std::size_t lattice_budget) {
  if (!is_theta_stable_dim(q, theta, a, lattice_budget)) {
    throw Error(to_string(a) + " is not a θ-stable dimension vector; moduli dimension is only "
                "defined here at stable points");
  }
  return 1 - euler_pairing(q, a, a);
}

namespace {

void fill_totals(std::vector<int>& cur, std::size_t pos, int remaining_lo, int remaining_hi,
                 std::vector<DimVector>& out) {
  if (pos + 1 == cur.size()) {
    for (int c = std::max(remaining_lo, 0); c <= remaining_hi; ++c) {
      cur[pos] = c;
      out.emplace_back(cur);
    }
    return;
  }
  for (int c = 0; c <= remaining_hi; ++c) {
    cur[pos] = c;
    fill_totals(cur, pos + 1, remaining_lo - c, remaining_hi - c, out);
  }
}

}  // namespace

std::vector<DimVector> dims_with_total(std::size_t size, int lo, int hi) {
  std::vector<DimVector> out;
  if (size == 0 || hi < 0 || hi < lo) return out;
  std::vector<int> cur(size, 0);
  fill_totals(cur, 0, lo, hi, out);
  return out;
}

std::vector<DimVector> enumerate_stable_dims(const Quiver& q, const Weight& theta, int max_total,
                                             std::size_t lattice_budget) {
  const auto k = static_cast<std::size_t>(q.num_vertices());
  check_same_size(k, theta.size(), "weight");
  if (max_total <= 0) throw Error("max_total must be positive");
  // Number of candidates is C(max_total + k, k).
  double candidates = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    candidates = candidates * static_cast<double>(max_total + static_cast<int>(i)) / static_cast<double>(i);
  }
  if (candidates > static_cast<double>(lattice_budget)) {
    throw BudgetExceeded("enumeration would visit about " + std::to_string(static_cast<long long>(candidates)) +
                         " candidates, over the budget of " + std::to_string(lattice_budget));
  }
  SubdimTable table(q, lattice_budget);
  std::vector<DimVector> out;
  for (const DimVector& a : dims_with_total(k, 1, max_total)) {
    if (theta_pairing(theta, a) != 0) continue;
    if (is_theta_stable_dim(table, theta, a)) out.push_back(a);
  }
  return out;
}

}  // namespace qmod
