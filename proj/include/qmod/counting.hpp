#pragma once

#include "qmod/poly.hpp"
#include "qmod/q_analogs.hpp"
#include "qmod/quiver.hpp"
#include "qmod/rational_function.hpp"

namespace qmod {

/// |R_d(Q)(F_q)| = q^{sum_{a: i -> j} d_i d_j}
inline Poly r_points(const Quiver& q, const DimensionVector& d) {
  q.check_vector(d);
  long e = 0;
  for (const auto& a : q.arrows()) e += static_cast<long>(d[a.source]) * d[a.target];
  return Poly::q_power(static_cast<std::size_t>(e));
}

/// |G_d(F_q)| = prod_i |GL_{d_i}(F_q)|
inline Poly gauge_group_order(const DimensionVector& d) {
  Poly g = 1;
  for (int x : d.entries()) g *= gl_order(static_cast<unsigned>(x));
  return g;
}

/// |R_d(Q)(F_q)| / |G_d(F_q)|, reduced.
inline RationalFunction gauge_ratio(const Quiver& q, const DimensionVector& d) {
  return RationalFunction(r_points(q, d), gauge_group_order(d));
}

}  // namespace qmod
