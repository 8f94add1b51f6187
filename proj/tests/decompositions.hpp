#pragma once

#include <functional>
#include <vector>

#include "qmod/stability.hpp"

namespace qmod::testing {

/// Every multiset of parts (m, β) with β drawn from `stables` (repetition
/// allowed) and Σ m·|β| ≤ max_total, passed to visit one at a time.
inline void for_each_decomposition_type(const std::vector<DimVector>& stables, int max_total,
                                        const std::function<void(const DecompositionType&)>& visit) {
  struct Cand {
    int m;
    const DimVector* dim;
    int weight;
  };
  std::vector<Cand> cands;
  for (const DimVector& b : stables) {
    for (int m = 1; m * b.total() <= max_total; ++m) cands.push_back({m, &b, m * b.total()});
  }
  std::vector<Part> chosen;
  auto rec = [&](auto& self, std::size_t idx, int left) -> void {
    if (idx == cands.size()) {
      if (!chosen.empty()) visit(DecompositionType(chosen));
      return;
    }
    const Cand& c = cands[idx];
    int copies = 0;
    for (; copies * c.weight <= left; ++copies) {
      self(self, idx + 1, left - copies * c.weight);
      chosen.push_back({c.m, *c.dim});
    }
    chosen.resize(chosen.size() - copies);
  };
  rec(rec, 0, max_total);
}

}  // namespace qmod::testing
