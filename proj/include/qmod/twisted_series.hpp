#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/quiver.hpp"
#include "qmod/rational_function.hpp"

namespace qmod {

/// Truncated series sum_e a_e t^e in the twisted algebra with
/// t^d * t^e = q^{-<d,e>} t^{d+e}.
///
/// Exponents range over {e <= cap : e = 0 or mu(e) = s}.  The class is closed
/// under addition, so products never leave it; exponents beyond the cap are
/// dropped.  Without a slope class every e <= cap is allowed.
class TwistedSeries {
 public:
  TwistedSeries(Quiver q, DimensionVector cap, Stability theta, std::optional<Rational> slope_class)
      : q_(std::move(q)), box_(std::move(cap)), theta_(std::move(theta)), slope_(std::move(slope_class)) {
    q_.check_vector(box_.cap());
    coeffs_.assign(box_.size(), RationalFunction());
    member_.assign(box_.size(), false);
    for (std::size_t k = 0; k < box_.size(); ++k) {
      const DimensionVector e = box_.at(k);
      member_[k] = e.is_zero() || !slope_ || slope(theta_, e) == *slope_;
      if (member_[k]) support_.push_back(k);
    }
  }

  const Quiver& quiver() const noexcept { return q_; }
  const DimensionVector& cap() const noexcept { return box_.cap(); }
  const std::optional<Rational>& slope_class() const noexcept { return slope_; }

  bool in_support(const DimensionVector& e) const { return componentwise_le(e, box_.cap()) && member_[box_.index(e)]; }
  /// Exponents of the index set in box order (0 first).
  std::vector<DimensionVector> exponents() const {
    std::vector<DimensionVector> out;
    for (std::size_t k : support_) out.push_back(box_.at(k));
    return out;
  }

  const RationalFunction& operator[](const DimensionVector& e) const { return coeffs_[checked_index(e)]; }
  void set(const DimensionVector& e, RationalFunction value) { coeffs_[checked_index(e)] = std::move(value); }

  bool is_invertible() const { return !coeffs_[0].is_zero(); }

  friend TwistedSeries operator*(const TwistedSeries& a, const TwistedSeries& b) {
    a.check_compatible(b);
    TwistedSeries c = a.empty_like();
    for (std::size_t i : a.support_) {
      if (a.coeffs_[i].is_zero()) continue;
      const DimensionVector d = a.box_.at(i);
      for (std::size_t j : b.support_) {
        if (b.coeffs_[j].is_zero()) continue;
        const DimensionVector e = b.box_.at(j);
        const DimensionVector sum = d + e;
        if (!componentwise_le(sum, a.box_.cap())) continue;
        const std::size_t k = a.box_.index(sum);
        c.coeffs_[k] += RationalFunction::q_power(-euler_form(a.q_, d, e)) * a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return c;
  }

  /// Two-sided inverse, computed degree by degree.
  TwistedSeries inverse() const {
    if (!is_invertible()) throw ConsistencyError("twisted series with zero constant term is not invertible");
    TwistedSeries b = empty_like();
    const RationalFunction inv0 = coeffs_[0].inverse();
    b.coeffs_[0] = inv0;
    for (std::size_t idx = 1; idx < support_.size(); ++idx) {
      const std::size_t k = support_[idx];
      const DimensionVector e = box_.at(k);
      RationalFunction acc;
      for (std::size_t jdx = 1; jdx <= idx; ++jdx) {
        const std::size_t j = support_[jdx];
        if (coeffs_[j].is_zero()) continue;
        const DimensionVector f = box_.at(j);
        if (!componentwise_le(f, e)) continue;
        const DimensionVector rest = e - f;
        const RationalFunction& br = b.coeffs_[box_.index(rest)];
        if (br.is_zero()) continue;
        acc += RationalFunction::q_power(-euler_form(q_, f, rest)) * coeffs_[j] * br;
      }
      b.coeffs_[k] = -(inv0 * acc);
    }
    return b;
  }

 private:
  TwistedSeries empty_like() const {
    TwistedSeries s = *this;
    for (auto& c : s.coeffs_) c = RationalFunction();
    return s;
  }
  std::size_t checked_index(const DimensionVector& e) const {
    q_.check_vector(e);
    if (!componentwise_le(e, box_.cap())) throw InputError("exponent exceeds the series cap");
    const std::size_t k = box_.index(e);
    if (!member_[k]) throw InputError("exponent outside the slope class of the series");
    return k;
  }
  void check_compatible(const TwistedSeries& o) const {
    if (box_.cap() != o.box_.cap() || slope_ != o.slope_ || !(theta_ == o.theta_))
      throw InputError("twisted series with different caps or slope classes");
  }

  Quiver q_;
  Box box_;
  Stability theta_;
  std::optional<Rational> slope_;
  std::vector<RationalFunction> coeffs_;
  std::vector<bool> member_;
  std::vector<std::size_t> support_;
};

}  // namespace qmod
