#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/poly.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// One partition per vertex, each with exactly d_i (weakly decreasing,
/// possibly zero) parts.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < 0) throw InputError("partition parts must be non-negative");
        if (k && p[k] > p[k - 1]) throw InputError("partition parts must be weakly decreasing");
        weight_ += p[k];
      }
    }
  }

  std::size_t vertex_count() const noexcept { return parts_.size(); }
  const std::vector<int>& at(std::size_t vertex) const { return parts_.at(vertex); }
  const std::vector<std::vector<int>>& parts() const noexcept { return parts_; }
  /// lambda^i_m for 1 <= m <= d_i.
  int part(std::size_t vertex, std::size_t m) const { return parts_.at(vertex).at(m - 1); }
  long weight() const noexcept { return weight_; }
  /// The dimension vector (number of parts per vertex).
  DimensionVector shape() const {
    std::vector<int> d;
    for (const auto& p : parts_) d.push_back(static_cast<int>(p.size()));
    return DimensionVector(std::move(d));
  }

  friend bool operator==(const Multipartition& a, const Multipartition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::vector<int>> parts_;
  long weight_ = 0;
};

/// "(0,0 | 1,0)": partitions in vertex order separated by bars.
inline std::string to_string(const Multipartition& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    if (i) out += " | ";
    const auto& p = m.at(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(p[k]);
    }
  }
  return out + ")";
}

/// <e, delta_i> = e_i - sum_{a: j -> i} e_j
inline long euler_with_vertex(const Quiver& q, const DimensionVector& e, std::size_t i) {
  long s = e[i];
  for (const auto& a : q.arrows())
    if (a.target == i) s -= e[a.source];
  return s;
}

/// Non-emptiness of the Hilbert scheme: n_i >= <d, delta_i> for every i, and
/// every vertex of supp(d) is reached from a framed vertex inside supp(d).
inline bool hilb_nonempty(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  q.check_vector(d);
  q.check_vector(n);
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (n[i] - euler_with_vertex(q, d, i) < 0) return false;
  const auto reach = support_reachable(q, d, n);
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (d[i] != 0 && !reach[i]) return false;
  return true;
}

/// lambda^i_1 <= n_i - <d, delta_i> - a_ii for d_i > 0: the condition for
/// e = d - delta_i can only be witnessed at i.
inline long hilb_part_bound(const Quiver& q, const DimensionVector& d, const DimensionVector& n, std::size_t i) {
  return n[i] - euler_with_vertex(q, d, i) - q.arrows_between(i, i);
}

/// S_{d,n}: multipartitions with d_i parts at i such that every 0 <= e < d has
/// a vertex i with lambda^i_{d_i - e_i} < n_i - <e, delta_i>; the virtual part
/// lambda^i_0 never witnesses.  Sorted by vertex order, then parts.
inline std::vector<Multipartition> multipartitions(const Quiver& q, const DimensionVector& d,
                                                   const DimensionVector& n) {
  q.check_vector(d);
  q.check_vector(n);
  const std::size_t nv = q.vertex_count();
  const Box box(d);
  const std::vector<DimensionVector> all = box.elements();
  // bound[k][i] = n_i - <e, delta_i> for the k-th e of the box
  std::vector<std::vector<long>> bound(all.size(), std::vector<long>(nv));
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t i = 0; i < nv; ++i) bound[k][i] = n[i] - euler_with_vertex(q, all[k], i);

  std::vector<long> cap(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    if (d[i] == 0) continue;
    cap[i] = hilb_part_bound(q, d, n, i);
    if (cap[i] < 0) return {};
  }

  // Conditions whose witnesses can only come from vertices 0..v: e_j = d_j for j > v.
  std::vector<std::vector<std::size_t>> checks(nv);
  for (std::size_t k = 0; k + 1 < all.size(); ++k) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (all[k][i] != d[i]) last = i;
    checks[last].push_back(k);
  }

  std::vector<std::vector<int>> current(nv);
  std::vector<Multipartition> out;
  std::function<void(std::size_t)> assign = [&](std::size_t v) {
    if (v == nv) {
      out.emplace_back(current);
      return;
    }
    const auto ok = [&]() {
      for (std::size_t k : checks[v]) {
        bool witnessed = false;
        for (std::size_t i = 0; i <= v && !witnessed; ++i) {
          const int m = d[i] - all[k][i];
          witnessed = m > 0 && current[i][static_cast<std::size_t>(m - 1)] < bound[k][i];
        }
        if (!witnessed) return false;
      }
      return true;
    };
    if (d[v] == 0) {
      current[v].clear();
      if (ok()) assign(v + 1);
      return;
    }
    // weakly decreasing tuples with d_v parts, each at most cap[v]
    std::vector<int>& p = current[v];
    p.assign(static_cast<std::size_t>(d[v]), 0);
    while (true) {
      if (ok()) assign(v + 1);
      std::size_t k = p.size();
      while (k-- > 0) {
        const long limit = k == 0 ? cap[v] : p[k - 1];
        if (p[k] < limit) break;
      }
      if (k == static_cast<std::size_t>(-1)) break;
      ++p[k];
      for (std::size_t j = k + 1; j < p.size(); ++j) p[j] = 0;
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  for (const auto& m : out)
    for (std::size_t i = 0; i < nv; ++i)
      if (d[i] > 0 && m.part(i, 1) > cap[i]) throw ConsistencyError("multipartition violates the part bound");
  return out;
}

/// q^{n.d - <d,d>} sum_{lambda in S_{d,n}} q^{-|lambda|}
inline Poly hilb_poincare_multipartitions(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  const auto s = multipartitions(q, d, n);
  if (s.empty()) return {};
  const long dim = dot(n, d) - euler_form(q, d, d);
  std::vector<Integer> c(static_cast<std::size_t>(std::max(dim, 0L)) + 1, Integer(0));
  for (const auto& m : s) {
    if (m.weight() > dim)
      throw ConsistencyError("multipartition weight " + std::to_string(m.weight()) + " exceeds the dimension " +
                             std::to_string(dim));
    c[static_cast<std::size_t>(dim - m.weight())] += 1;
  }
  return Poly::from_coefficients(std::move(c));
}

}  // namespace qmod
