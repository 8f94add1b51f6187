#include "qmod/simples.hpp"

#include <algorithm>

namespace qmod {

bool is_simple_dim(const Quiver& q, const DimVector& a) {
  check_same_size(static_cast<std::size_t>(q.num_vertices()), a.size(), "dimension vector");
  const VertexSet supp = support(a);
  if (supp.empty()) return false;
  if (supp.size() == 1 && a[supp[0]] == 1) return true;
  if (!is_strongly_connected(q, supp)) return false;

  if (is_cyclic_type(q, supp)) {
    return std::all_of(supp.begin(), supp.end(), [&](int v) { return a[v] == 1; });
  }

  const Quiver sub = q.subquiver(supp);
  const EulerMatrix chi = euler_form(sub);
  const int k = sub.num_vertices();
  std::vector<int> restricted(k);
  for (int i = 0; i < k; ++i) restricted[i] = a[supp[i]];
  const DimVector local(std::move(restricted));
  for (int v = 0; v < k; ++v) {
    const DimVector e = DimVector::unit(k, v);
    if (euler_pairing(chi, e, local) > 0 || euler_pairing(chi, local, e) > 0) return false;
  }
  return true;
}

}  // namespace qmod
