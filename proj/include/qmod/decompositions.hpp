#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// Ordered tuple (d^1, ..., d^s) of non-zero dimension vectors together with
/// its partial sums d^1 + ... + d^k.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<DimensionVector> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) return;
    DimensionVector sum(parts_.front().size());
    for (const auto& p : parts_) {
      if (p.is_zero()) throw InputError("decomposition parts must be non-zero");
      sum = sum + p;
      prefix_.push_back(sum);
    }
  }

  std::size_t size() const noexcept { return parts_.size(); }
  const DimensionVector& operator[](std::size_t k) const { return parts_[k]; }
  const std::vector<DimensionVector>& parts() const noexcept { return parts_; }
  /// d^1 + ... + d^(k+1)
  const DimensionVector& prefix(std::size_t k) const { return prefix_[k]; }
  const DimensionVector& total() const { return prefix_.back(); }

  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<DimensionVector> parts_;
  std::vector<DimensionVector> prefix_;
};

namespace detail {

/// Depth-first enumeration of ordered decompositions of d.  `keep(prefix)`
/// decides whether a proper partial sum may be extended; parts are tried in
/// increasing box order of the vectors.
inline void for_each_decomposition(const DimensionVector& d,
                                   const std::function<bool(const DimensionVector&)>& keep_proper_prefix,
                                   const std::function<void(const Decomposition&)>& emit) {
  const Box box(d);
  const std::vector<DimensionVector> all = box.elements();
  std::vector<DimensionVector> parts;
  std::function<void(const DimensionVector&)> rec = [&](const DimensionVector& prefix) {
    const DimensionVector rest = d - prefix;
    for (std::size_t k = 1; k < all.size(); ++k) {
      const DimensionVector& part = all[k];
      if (!componentwise_le(part, rest)) continue;
      const DimensionVector next = prefix + part;
      parts.push_back(part);
      if (next == d) {
        emit(Decomposition(parts));
      } else if (keep_proper_prefix(next)) {
        rec(next);
      }
      parts.pop_back();
    }
  };
  rec(DimensionVector(d.size()));
}

}  // namespace detail

/// Calls `emit` for every mu-admissible decomposition of d: every proper
/// partial sum has slope strictly greater than mu(d).
inline void for_each_admissible_decomposition(const Quiver& q, const Stability& theta, const DimensionVector& d,
                                              const std::function<void(const Decomposition&)>& emit) {
  q.check_vector(d);
  if (d.is_zero()) throw UndefinedSlopeError();
  detail::for_each_decomposition(
      d, [&](const DimensionVector& prefix) { return compare_slopes(theta, prefix, d) > 0; }, emit);
}

/// Calls `emit(decomposition, k0)` for every semi-admissible decomposition of
/// d (all partial sums have slope >= mu(d)); k0 is the 1-based index of the
/// first partial sum with slope exactly mu(d).
inline void for_each_semi_admissible_decomposition(
    const Quiver& q, const Stability& theta, const DimensionVector& d,
    const std::function<void(const Decomposition&, std::size_t)>& emit) {
  q.check_vector(d);
  if (d.is_zero()) throw UndefinedSlopeError();
  detail::for_each_decomposition(
      d, [&](const DimensionVector& prefix) { return compare_slopes(theta, prefix, d) >= 0; },
      [&](const Decomposition& dec) {
        std::size_t k0 = 1;
        while (compare_slopes(theta, dec.prefix(k0 - 1), d) != 0) ++k0;
        emit(dec, k0);
      });
}

inline std::vector<Decomposition> admissible_decompositions(const Quiver& q, const Stability& theta,
                                                            const DimensionVector& d) {
  std::vector<Decomposition> out;
  for_each_admissible_decomposition(q, theta, d, [&](const Decomposition& dec) { out.push_back(dec); });
  return out;
}

inline std::vector<std::pair<Decomposition, std::size_t>> semi_admissible_decompositions(const Quiver& q,
                                                                                         const Stability& theta,
                                                                                         const DimensionVector& d) {
  std::vector<std::pair<Decomposition, std::size_t>> out;
  for_each_semi_admissible_decomposition(
      q, theta, d, [&](const Decomposition& dec, std::size_t k0) { out.emplace_back(dec, k0); });
  return out;
}

}  // namespace qmod
