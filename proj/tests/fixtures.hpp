#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/qmod.hpp"

namespace fixtures {

using qmod::DimensionVector;
using qmod::Poly;
using qmod::Quiver;
using qmod::Rational;
using qmod::RationalFunction;
using qmod::Stability;

inline Quiver kronecker(int m) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows(static_cast<std::size_t>(m), {0, 1});
  return Quiver({"i", "j"}, arrows);
}

/// a and b with one arrow each way, named as in the cell tables.
inline Quiver two_cycle() { return Quiver({"a", "b"}, {{0, 1}, {1, 0}}, {"α", "β"}); }

inline Quiver loops(int m) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows(static_cast<std::size_t>(m), {0, 0});
  return Quiver({"1"}, arrows);
}

/// Loop at i and an arrow i -> j.
inline Quiver loop_and_arrow() { return Quiver({"i", "j"}, {{0, 0}, {0, 1}}); }

/// Vertex 0 receives one arrow from each of 1..r.
inline Quiver subspace(int r) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (int i = 1; i <= r; ++i) arrows.emplace_back(static_cast<std::size_t>(i), 0);
  return Quiver::from_arrows(static_cast<std::size_t>(r) + 1, arrows);
}

inline Stability weights(std::vector<long> w) {
  std::vector<Rational> r;
  for (long x : w) r.emplace_back(x);
  return Stability(std::move(r));
}

inline DimensionVector vec(std::vector<int> v) { return DimensionVector(std::move(v)); }

inline RationalFunction rq(long k) { return RationalFunction::q_power(k); }
inline RationalFunction rf(const Poly& p) { return RationalFunction(p); }

inline const Poly& table1_poincare() {
  static const Poly p = Poly{0, 0, 2, 4, 7, 6, 5, 2, 1};
  return p;
}

}  // namespace fixtures
