#pragma once

#include <string>
#include <utility>

#include "qmod/poly.hpp"

namespace qmod {

/// Reduced quotient of two integer polynomials in q.
///
/// Canonical form: gcd(numerator, denominator) = 1 in Z[q] (which also
/// clears the common integer content) and the denominator has a positive
/// leading coefficient.  Zero is 0/1.  Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}            // NOLINT(google-explicit-constructor)
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisibilityError("rational function with zero denominator");
    normalize();
  }

  /// q^k for any integer k.
  static RationalFunction q_power(long k) {
    if (k >= 0) return RationalFunction(Poly::q_power(static_cast<std::size_t>(k)));
    RationalFunction r;
    r.num_ = Poly(1);
    r.den_ = Poly::q_power(static_cast<std::size_t>(-k));
    return r;
  }

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// The polynomial this function equals; throws if the denominator is not 1.
  const Poly& as_polynomial() const {
    if (!is_polynomial()) throw DivisibilityError("rational function is not a polynomial");
    return num_;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisibilityError("inverse of zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
    r.den_ = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
    r.fix_sign();
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.is_polynomial()) return RationalFunction(a.num_ + b.num_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    // Henrici: with g = gcd(b1, b2), the sum's reduction only needs gcd(num, g).
    Poly g = gcd(a.den_, b.den_);
    Poly ra = exact_divide(a.den_, g);
    Poly rb = exact_divide(b.den_, g);
    Poly num = a.num_ * rb + b.num_ * ra;
    if (num.is_zero()) return {};
    Poly h = gcd(num, g);
    RationalFunction r;
    r.num_ = exact_divide(num, h);
    r.den_ = ra * exact_divide(b.den_, h);
    r.fix_sign();
    return r;
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    fix_sign();
  }
  void fix_sign() {
    if (num_.is_zero()) {
      den_ = Poly(1);
    } else if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly num_;
  Poly den_;
};

inline std::string to_string(const RationalFunction& r, std::string_view var = "q") {
  if (r.is_polynomial()) return to_string(r.numerator(), var);
  return "(" + to_string(r.numerator(), var) + ")/(" + to_string(r.denominator(), var) + ")";
}

inline std::string to_machine_string(const RationalFunction& r) {
  return to_machine_string(r.numerator()) + " / " + to_machine_string(r.denominator());
}

}  // namespace qmod
