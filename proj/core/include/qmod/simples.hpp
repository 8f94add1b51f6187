#pragma once

#include "qmod/quiver.hpp"

namespace qmod {

/// Whether some representation of dimension vector a is simple.
///
/// True iff a is a vertex vector ε_v, or the support of a is strongly
/// connected and either
///   - the support is an oriented cycle and a is 1 on it, or
///   - the support is not an oriented cycle and χ(ε_v, a) ≤ 0, χ(a, ε_v) ≤ 0
///     for every support vertex v (computed in the subquiver on the support).
///
/// Returns false for a = 0.
bool is_simple_dim(const Quiver& q, const DimVector& a);

}  // namespace qmod
