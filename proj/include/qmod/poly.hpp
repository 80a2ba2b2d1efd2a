#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"

namespace qmod {

using Integer = mpz_class;

/// Polynomial in one variable with arbitrary-precision integer coefficients.
///
/// Stored densely from the constant term upwards with no trailing zero
/// coefficients, so the representation is canonical and `==` is structural.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = INT_MIN;

  Poly() = default;
  Poly(long c) : Poly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c) {            // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Poly(std::initializer_list<long> low_to_high) {
    coeffs_.reserve(low_to_high.size());
    for (long c : low_to_high) coeffs_.emplace_back(c);
    trim();
  }

  static Poly from_coefficients(std::vector<Integer> low_to_high) {
    Poly p;
    p.coeffs_ = std::move(low_to_high);
    p.trim();
    return p;
  }
  static Poly monomial(const Integer& c, std::size_t exponent) {
    Poly p;
    if (c == 0) return p;
    p.coeffs_.assign(exponent + 1, Integer(0));
    p.coeffs_[exponent] = c;
    return p;
  }
  /// q^exponent
  static Poly q_power(std::size_t exponent) { return monomial(Integer(1), exponent); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Largest k with q^k dividing the polynomial; 0 for the zero polynomial.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return 0;
  }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coefficient(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Integer(0);
  }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Nonzero coefficients as (exponent, coefficient), highest exponent first.
  std::vector<std::pair<std::size_t, Integer>> terms() const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      if (coeffs_[i] != 0) out.emplace_back(i, coeffs_[i]);
    return out;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
  }

  /// Positive gcd of all coefficients (0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      if (c == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Multiplication by q^k.
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly p;
    p.coeffs_.assign(k, Integer(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
  }
  /// Division by q^k; requires q^k to divide the polynomial.
  Poly unshifted(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw DivisibilityError("polynomial is not divisible by q^" + std::to_string(k));
    Poly p;
    p.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return p;
  }

  /// Divide every coefficient by c, which must divide all of them.
  Poly divided_by_scalar(const Integer& c) const {
    Poly p = *this;
    for (auto& x : p.coeffs_) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
        throw DivisibilityError("coefficient not divisible by scalar");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(p.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    p.trim();
    return p;
  }
  friend Poly operator*(const Integer& c, const Poly& b) {
    if (c == 0) return {};
    Poly p = b;
    for (auto& x : p.coeffs_) x *= c;
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline Poly pow(const Poly& base, unsigned exponent) {
  Poly result = 1;
  Poly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

/// Quotient and remainder over the rationals, required to have integer
/// quotient coefficients.  Throws DivisibilityError otherwise.
inline std::pair<Poly, Poly> divmod_integral(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisibilityError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto bc = b.coefficients();
  const Integer& lead = b.leading();
  std::vector<Integer> quot(rem.size() - db, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DivisibilityError("non-integral quotient coefficient");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
    quot[k] = std::move(c);
  }
  rem.resize(db);
  return {Poly::from_coefficients(std::move(quot)), Poly::from_coefficients(std::move(rem))};
}

/// a / b, where b must divide a exactly with an integer quotient.
inline Poly exact_divide(const Poly& a, const Poly& b) {
  auto [quot, rem] = divmod_integral(a, b);
  if (!rem.is_zero()) throw DivisibilityError("polynomial division leaves a nonzero remainder");
  return quot;
}

namespace detail {

/// lead(b)^(deg a - deg b + 1) * a  mod  b
inline Poly pseudo_remainder(const Poly& a, const Poly& b) {
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto bc = b.coefficients();
  const Integer& lead = b.leading();
  for (std::size_t top = rem.size(); top-- > db;) {
    Integer c = rem[top];
    if (c == 0) continue;
    for (auto& x : rem) x *= lead;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[top - db + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
  }
  rem.resize(std::min(rem.size(), db));
  return Poly::from_coefficients(std::move(rem));
}

inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading() < 0) c = -c;
  return c == 1 ? p : p.divided_by_scalar(c);
}

}  // namespace detail

/// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return !b.is_zero() && b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  const std::size_t v = std::min(a.valuation(), b.valuation());
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Poly x = detail::primitive_part(a.unshifted(a.valuation()));
  Poly y = detail::primitive_part(b.unshifted(b.valuation()));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = Poly(1);
      break;
    }
    Poly r = detail::pseudo_remainder(x, y);
    x = std::move(y);
    y = detail::primitive_part(r);
  }
  return (c * x).shifted(v);
}

/// Human-readable rendering in descending exponents, e.g. `q^8 + 2*q^7 - q + 1`.
inline std::string to_string(const Poly& p, std::string_view var = "q") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Machine rendering: space separated `exponent:coefficient` pairs, highest first.
inline std::string to_machine_string(const Poly& p) {
  if (p.is_zero()) return "0:0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ":" + c.get_str();
  }
  return out;
}

}  // namespace qmod
