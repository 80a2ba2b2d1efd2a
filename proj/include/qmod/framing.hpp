#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// The framed datum (Q^, d^, Theta^) attached to (Q, d, Theta) and a framing n.
///
/// Q^ adds a vertex "∞" (placed last) with n_i arrows ∞ -> i.  The extended
/// stability is kept symbolic: every slope comparison against d^ is answered
/// from the sign of the normalized Theta (integral, vanishing on d), which is
/// what the comparisons reduce to for every sufficiently small epsilon.
class FramedDatum {
 public:
  FramedDatum(Quiver base, DimensionVector d, Stability theta, DimensionVector n)
      : base_(std::move(base)), d_(std::move(d)), theta_(std::move(theta)), n_(std::move(n)) {
    base_.check_vector(d_);
    base_.check_vector(n_);
    if (theta_.size() != base_.vertex_count()) throw InputError("stability length does not match the quiver");
    if (n_.is_zero()) throw InputError("framing vector must be non-zero");
    normalized_ = d_.is_zero() ? theta_ : normalize_stability(theta_, d_);

    std::vector<std::string> names = base_.vertex_names();
    std::string inf = "∞";
    while (base_.find_vertex(inf)) inf += "'";
    names.push_back(inf);
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::string> arrow_names;
    for (const auto& a : base_.arrows()) {
      arrows.emplace_back(a.source, a.target);
      arrow_names.push_back(a.name);
    }
    const std::size_t infinity = base_.vertex_count();
    for (std::size_t i = 0; i < base_.vertex_count(); ++i) {
      for (int k = 1; k <= n_[i]; ++k) {
        arrows.emplace_back(infinity, i);
        arrow_names.push_back("f" + base_.vertex_name(i) + std::to_string(k));
      }
    }
    extended_ = Quiver(std::move(names), arrows, std::move(arrow_names));
    extended_d_ = hat(d_);
  }

  const Quiver& base() const noexcept { return base_; }
  const DimensionVector& d() const noexcept { return d_; }
  const DimensionVector& framing() const noexcept { return n_; }
  const Stability& theta() const noexcept { return theta_; }
  /// Integral stability with Theta(d) = 0 defining the same slope order.
  const Stability& normalized_theta() const noexcept { return normalized_; }

  const Quiver& extended_quiver() const noexcept { return extended_; }
  const DimensionVector& extended_d() const noexcept { return extended_d_; }
  std::size_t infinity_vertex() const noexcept { return base_.vertex_count(); }

  /// e viewed on Q^ with e_∞ = 0.
  DimensionVector embed(const DimensionVector& e) const {
    base_.check_vector(e);
    std::vector<int> v(e.entries().begin(), e.entries().end());
    v.push_back(0);
    return DimensionVector(std::move(v));
  }
  /// e^ : e with e_∞ = 1.
  DimensionVector hat(const DimensionVector& e) const {
    base_.check_vector(e);
    std::vector<int> v(e.entries().begin(), e.entries().end());
    v.push_back(1);
    return DimensionVector(std::move(v));
  }

  /// mu^(e) <= mu^(d^) for 0 != e <= d; equivalent to mu(e) <= mu(d).
  bool hat_le(const DimensionVector& e) const {
    require_sub(e, false);
    return sign_of(e) <= 0;
  }
  /// mu^(e) < mu^(d^); never differs from hat_le.
  bool hat_lt(const DimensionVector& e) const { return hat_le(e); }
  /// mu^(e^) <= mu^(d^) for e < d; equivalent to mu(e) < mu(d).
  bool hat_le_framed(const DimensionVector& e) const {
    require_sub(e, true);
    return sign_of(e) < 0;
  }
  bool hat_lt_framed(const DimensionVector& e) const { return hat_le_framed(e); }

  /// d^ is coprime for Theta^: no 0 < x < d^ has the slope of d^.  Checked by
  /// scanning every such x and confirming that the strict and non-strict
  /// comparisons agree.
  bool extended_is_coprime() const {
    const Box box(d_);
    for (std::size_t k = 0; k < box.size(); ++k) {
      const DimensionVector e = box.at(k);
      if (!e.is_zero() && hat_lt(e) != hat_le(e)) return false;
      if (e != d_ && hat_lt_framed(e) != hat_le_framed(e)) return false;
    }
    return true;
  }

  /// Concrete Theta^ using the normalized Theta and epsilon = 1/2 (any
  /// 0 < epsilon <= 1 works for integral weights vanishing on d).
  Stability explicit_hat_stability() const {
    std::vector<Rational> w(normalized_.weights().begin(), normalized_.weights().end());
    w.emplace_back(1, 2);
    return Stability(std::move(w));
  }

 private:
  int sign_of(const DimensionVector& e) const {
    const Rational t = normalized_(e);
    return t < 0 ? -1 : (t > 0 ? 1 : 0);
  }
  void require_sub(const DimensionVector& e, bool framed) const {
    base_.check_vector(e);
    if (framed ? !componentwise_lt(e, d_) : (e.is_zero() || !componentwise_le(e, d_)))
      throw InputError(framed ? "framed comparison needs e < d" : "comparison needs 0 != e <= d");
  }

  Quiver base_;
  DimensionVector d_;
  Stability theta_;
  DimensionVector n_;
  Stability normalized_;
  Quiver extended_;
  DimensionVector extended_d_;
};

inline FramedDatum frame(const Quiver& q, const DimensionVector& d, const Stability& theta, const DimensionVector& n) {
  return FramedDatum(q, d, theta, n);
}

}  // namespace qmod
