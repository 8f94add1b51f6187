#include "qmod/subdims.hpp"

#include <algorithm>
#include <limits>

namespace qmod {

std::size_t box_size(const DimVector& a) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t n = 1;
  for (int c : a.coords()) {
    const auto f = static_cast<std::size_t>(c) + 1;
    if (n > kMax / f) return kMax;
    n *= f;
  }
  return n;
}

std::vector<DimVector> box_points(const DimVector& a) {
  std::vector<DimVector> out;
  out.reserve(box_size(a));
  std::vector<int> cur(a.size(), 0);
  while (true) {
    out.emplace_back(cur);
    // odometer, last coordinate fastest
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (cur[i] < a[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (a.size() == 0) return out;
  }
}

SubdimTable::SubdimTable(Quiver q, std::size_t lattice_budget)
    : quiver_(std::move(q)), chi_(euler_form(quiver_)), budget_(lattice_budget) {}

void SubdimTable::check(const DimVector& a) const {
  check_same_size(static_cast<std::size_t>(quiver_.num_vertices()), a.size(), "dimension vector");
  const std::size_t n = box_size(a);
  if (n > budget_) {
    throw BudgetExceeded("dimension vector " + to_string(a) + " spans " + std::to_string(n) +
                         " lattice points, over the budget of " + std::to_string(budget_));
  }
}

bool SubdimTable::passes(const DimVector& beta, const DimVector& a) const {
  if (beta.is_zero() || beta == a) return true;
  const DimVector rest = a - beta;
  for (const DimVector& gamma : memo_.at(beta)) {
    if (euler_pairing(chi_, gamma, rest) < 0) return false;
  }
  return true;
}

void SubdimTable::fill_box(const DimVector& a) {
  std::vector<DimVector> pts = box_points(a);
  std::stable_sort(pts.begin(), pts.end(), [](const DimVector& x, const DimVector& y) {
    return x.total() < y.total();
  });
  for (const DimVector& c : pts) {
    if (memo_.contains(c)) continue;
    std::vector<DimVector> s;
    for (DimVector& beta : box_points(c)) {
      if (passes(beta, c)) s.push_back(std::move(beta));
    }
    memo_.emplace(c, std::move(s));
  }
}

const std::vector<DimVector>& SubdimTable::subdims(const DimVector& a) {
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  check(a);
  fill_box(a);
  return memo_.at(a);
}

bool SubdimTable::embeds(const DimVector& b, const DimVector& a) {
  check_same_size(static_cast<std::size_t>(quiver_.num_vertices()), a.size(), "dimension vector");
  check_same_size(a.size(), b.size(), "dimension vector");
  if (!b.leq(a)) return false;
  if (b.is_zero() || b == a) return true;
  subdims(b);
  return passes(b, a);
}

std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& a,
                                       std::size_t lattice_budget) {
  SubdimTable table(q, lattice_budget);
  return table.subdims(a);
}

bool is_generic_subdim(const Quiver& q, const DimVector& b, const DimVector& a,
                       std::size_t lattice_budget) {
  SubdimTable table(q, lattice_budget);
  return table.embeds(b, a);
}

}  // namespace qmod
