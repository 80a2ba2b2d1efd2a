#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>

#include "qmod/errors.hpp"
#include "qmod/poly.hpp"
#include "qmod/rational_function.hpp"

namespace qmod {

/// Integer Laurent polynomial q^shift * p(q), kept with p(0) != 0.
///
/// Used internally by the engines: every intermediate quantity there becomes
/// a Laurent polynomial once multiplied by a group order, so the inner loops
/// need no polynomial gcds.  Results leave through to_rational() or
/// divided_exactly().
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : p_(c) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(Poly p, long shift = 0) : p_(std::move(p)), shift_(shift) { normalize(); }  // NOLINT

  static LaurentPoly q_power(long k) { return LaurentPoly(Poly(1), k); }

  bool is_zero() const noexcept { return p_.is_zero(); }
  const Poly& body() const noexcept { return p_; }
  long shift() const noexcept { return shift_; }

  LaurentPoly operator-() const { return LaurentPoly(-p_, shift_); }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long s = std::min(shift_, o.shift_);
    p_ = p_.shifted(static_cast<std::size_t>(shift_ - s)) + o.p_.shifted(static_cast<std::size_t>(o.shift_ - s));
    shift_ = s;
    normalize();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.p_ * b.p_, a.shift_ + b.shift_);
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.p_ == b.p_ && (a.is_zero() || a.shift_ == b.shift_);
  }

  RationalFunction to_rational() const {
    if (shift_ >= 0) return RationalFunction(p_.shifted(static_cast<std::size_t>(shift_)));
    return RationalFunction(p_, Poly::q_power(static_cast<std::size_t>(-shift_)));
  }

  /// this / den, which must be a polynomial.
  Poly divided_exactly(const Poly& den) const {
    if (is_zero()) return {};
    const std::size_t v = den.valuation();
    const long s = shift_ - static_cast<long>(v);
    const Poly q = exact_divide(p_, den.unshifted(v));
    if (s < 0) throw DivisibilityError("quotient has a pole at q = 0");
    return q.shifted(static_cast<std::size_t>(s));
  }

 private:
  void normalize() {
    if (p_.is_zero()) {
      shift_ = 0;
      return;
    }
    const std::size_t v = p_.valuation();
    if (v) {
      p_ = p_.unshifted(v);
      shift_ += static_cast<long>(v);
    }
  }

  Poly p_;
  long shift_ = 0;
};

}  // namespace qmod
