#pragma once

#include <random>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod::testing {

/// Random quiver with k vertices and exactly `arrows` arrows (loops allowed).
inline Quiver random_quiver(std::mt19937& rng, int k, int arrows) {
  std::uniform_int_distribution<int> v(0, k - 1);
  std::vector<Arrow> list;
  for (int i = 0; i < arrows; ++i) list.emplace_back(v(rng), v(rng));
  return Quiver(k, list);
}

/// Every quiver on k vertices whose arrow multiset has at most max_arrows elements.
inline std::vector<Quiver> all_quivers(int k, int max_arrows) {
  std::vector<Quiver> out;
  const int cells = k * k;
  std::vector<int> counts(cells, 0);
  auto rec = [&](auto& self, int cell, int left) -> void {
    if (cell == cells) {
      out.push_back(Quiver::from_counts(k, counts));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[cell] = c;
      self(self, cell + 1, left - c);
    }
    counts[cell] = 0;
  };
  rec(rec, 0, max_arrows);
  return out;
}

/// All compositions of n into `parts` nonnegative parts.
inline std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int left) -> void {
    if (static_cast<int>(cur.size()) == parts - 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur.push_back(x);
      self(self, left - x);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace qmod::testing
