#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "qmod/counting.hpp"
#include "qmod/decompositions.hpp"
#include "qmod/errors.hpp"
#include "qmod/laurent.hpp"
#include "qmod/poly.hpp"
#include "qmod/q_analogs.hpp"
#include "qmod/quiver.hpp"
#include "qmod/rational_function.hpp"
#include "qmod/twisted_series.hpp"

namespace qmod {

/// Insert-once map safe for concurrent readers and writers.  A key, once
/// present, never changes its value.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const Key& k, const Value& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

namespace detail {

/// Identifies the (Q, Theta) a memo table was filled for.
inline std::string fingerprint(const Quiver& q, const Stability& theta) {
  std::string s = std::to_string(q.vertex_count()) + ":";
  for (const auto& a : q.arrows()) s += std::to_string(a.source) + ">" + std::to_string(a.target) + ",";
  s += ":";
  for (const auto& w : theta.weights()) s += w.get_str() + ",";
  return s;
}

class BoundMemo {
 protected:
  void bind(const Quiver& q, const Stability& theta) {
    std::string fp = fingerprint(q, theta);
    std::lock_guard lock(bind_mutex_);
    if (fingerprint_.empty()) {
      fingerprint_ = std::move(fp);
    } else if (fingerprint_ != fp) {
      throw InputError("memo table reused for a different quiver or stability");
    }
  }

 private:
  std::mutex bind_mutex_;
  std::string fingerprint_;
};

/// Shared data for dynamic programmes over the box below a cap.  Values are
/// carried multiplied by |G_e|, which turns every step into a product of
/// Laurent polynomials: |G_{f+g}| / (|G_f| |G_g|) = prod_i q^{f_i g_i} [f_i+g_i, f_i].
class HallContext {
 public:
  HallContext(const Quiver& q, const Stability& theta, const DimensionVector& cap)
      : q_(q), theta_(theta), box_(cap), elements_(box_.elements()) {
    q.check_vector(cap);
    if (theta.size() != q.vertex_count()) throw InputError("stability length does not match the quiver");
    int top = 0;
    for (int x : cap.entries()) top = std::max(top, x);
    binomials_.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n)
      for (int k = 0; k <= n; ++k) binomials_[n].push_back(q_binomial(static_cast<unsigned>(n), k));
    orders_.reserve(elements_.size());
    for (const auto& e : elements_) orders_.push_back(gauge_group_order(e));
  }

  const Quiver& quiver() const noexcept { return q_; }
  const Stability& theta() const noexcept { return theta_; }
  const Box& box() const noexcept { return box_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const DimensionVector& at(std::size_t k) const { return elements_[k]; }
  const Poly& group_order(std::size_t k) const { return orders_[k]; }

  /// |G_{f+g}| / (|G_f| |G_g|)
  LaurentPoly hall_factor(const DimensionVector& f, const DimensionVector& g) const {
    Poly p = 1;
    long shift = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0 || g[i] == 0) continue;
      shift += static_cast<long>(f[i]) * g[i];
      p *= binomials_[static_cast<std::size_t>(f[i] + g[i])][static_cast<std::size_t>(f[i])];
    }
    return LaurentPoly(std::move(p), shift);
  }

  /// Appending a part g to a prefix f:
  /// |G_{f+g}| / |G_f| * q^{-<g,f>} |R_g| / |G_g|.
  LaurentPoly step(const DimensionVector& f, const DimensionVector& g) const {
    long r = 0;
    for (const auto& a : q_.arrows()) r += static_cast<long>(g[a.source]) * g[a.target];
    return hall_factor(f, g) * LaurentPoly::q_power(r - euler_form(q_, g, f));
  }

  /// Sign of mu(e) - mu(reference) for e != 0.
  int compare(std::size_t e, const DimensionVector& reference) const {
    return compare_slopes(theta_, elements_[e], reference);
  }

 private:
  const Quiver& q_;
  const Stability& theta_;
  Box box_;
  std::vector<DimensionVector> elements_;
  std::vector<std::vector<Poly>> binomials_;
  std::vector<Poly> orders_;
};

/// |G_e| P_e for every e <= cap with mu(e) = mu(reference); other entries are
/// left empty.
///
/// H(0) = 1 and H(e) = -sum_f H(f) q^{-<e-f,f>} |R_{e-f}|/|G_{e-f}| over
/// f < e with f = 0 or mu(f) > s sums (-1)^s times the admissible terms, so
/// P_e = -H(e) on the slope class.
inline std::vector<std::optional<LaurentPoly>> normalized_pd_class(const HallContext& ctx,
                                                                   const DimensionVector& reference) {
  const std::size_t size = ctx.size();
  std::vector<LaurentPoly> h(size);
  std::vector<bool> extendable(size, false);
  std::vector<std::optional<LaurentPoly>> out(size);
  h[0] = 1;
  extendable[0] = true;
  out[0] = LaurentPoly(1);
  for (std::size_t k = 1; k < size; ++k) {
    const int c = ctx.compare(k, reference);
    if (c < 0) continue;
    const DimensionVector& e = ctx.at(k);
    LaurentPoly acc;
    for (std::size_t j = 0; j < k; ++j) {
      if (!extendable[j] || h[j].is_zero()) continue;
      const DimensionVector& f = ctx.at(j);
      if (!componentwise_le(f, e)) continue;
      acc -= h[j] * ctx.step(f, e - f);
    }
    if (c > 0) {
      h[k] = std::move(acc);
      extendable[k] = true;
    } else {
      out[k] = -acc;
    }
  }
  return out;
}

inline RationalFunction unnormalize(const LaurentPoly& x, const Poly& group_order) {
  return x.to_rational() / RationalFunction(group_order);
}

}  // namespace detail

/// Memo of P_e keyed by (slope class, e).  One table belongs to one (Q, Theta).
class PdCache : detail::BoundMemo {
 public:
  std::optional<RationalFunction> find(const Quiver& q, const Stability& theta, const DimensionVector& e) {
    bind(q, theta);
    return memo_.find(key(theta, e));
  }
  void insert(const Quiver& q, const Stability& theta, const DimensionVector& e, const RationalFunction& v) {
    bind(q, theta);
    memo_.insert(key(theta, e), v);
  }
  std::size_t size() const { return memo_.size(); }

 private:
  static std::pair<Rational, DimensionVector> key(const Stability& theta, const DimensionVector& e) {
    return {e.is_zero() ? Rational(0) : slope(theta, e), e};
  }
  ConcurrentMemo<std::pair<Rational, DimensionVector>, RationalFunction> memo_;
};

/// P_d(q): signed sum over mu-admissible decompositions; P_0 = 1.  Filling the
/// cache for d also fills it for every e <= d of the same slope.
inline RationalFunction p_d(const Quiver& q, const Stability& theta, const DimensionVector& d, PdCache& cache) {
  q.check_vector(d);
  if (d.is_zero()) return RationalFunction(1);
  if (auto hit = cache.find(q, theta, d)) return *hit;
  const detail::HallContext ctx(q, theta, d);
  const auto values = detail::normalized_pd_class(ctx, d);
  for (std::size_t k = 1; k < ctx.size(); ++k) {
    if (!values[k]) continue;
    cache.insert(q, theta, ctx.at(k), detail::unnormalize(*values[k], ctx.group_order(k)));
  }
  return *cache.find(q, theta, d);
}

inline RationalFunction p_d(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  PdCache cache;
  return p_d(q, theta, d, cache);
}

/// P_d summed term by term over an explicit enumeration of the admissible
/// decompositions.  Exponential; used to check the dynamic programme.
inline RationalFunction p_d_enumerated(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  q.check_vector(d);
  if (d.is_zero()) return RationalFunction(1);
  RationalFunction sum;
  for_each_admissible_decomposition(q, theta, d, [&](const Decomposition& dec) {
    long exponent = 0;
    RationalFunction term = dec.size() % 2 == 1 ? RationalFunction(1) : RationalFunction(-1);
    for (std::size_t l = 0; l < dec.size(); ++l) {
      for (std::size_t k = 0; k < l; ++k) exponent -= euler_form(q, dec[l], dec[k]);
      term *= gauge_ratio(q, dec[l]);
    }
    sum += term * RationalFunction::q_power(exponent);
  });
  return sum;
}

/// (q-1) P_d, the Poincare polynomial of the stable moduli for coprime d.
inline Poly stable_poincare(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  q.check_vector(d);
  if (d.is_zero() || !is_coprime(q, theta, d)) throw PreconditionError("dimension vector is not coprime");
  const RationalFunction r = RationalFunction(Poly{-1, 1}) * p_d(q, theta, d);
  if (!r.is_polynomial()) throw ConsistencyError("(q-1) P_d is not a polynomial: " + to_string(r));
  if (!r.numerator().has_nonnegative_coefficients())
    throw ConsistencyError("(q-1) P_d has negative coefficients: " + to_string(r));
  return r.numerator();
}

namespace detail {

inline void check_framing(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  q.check_vector(d);
  q.check_vector(n);
  if (n.is_zero()) throw InputError("framing vector must be non-zero");
}

inline Poly checked_poincare(Poly p, const char* engine) {
  if (!p.has_nonnegative_coefficients())
    throw ConsistencyError(std::string(engine) + " produced negative coefficients: " + to_string(p));
  return p;
}

inline LaurentPoly q_power_minus_one(long k) { return LaurentPoly::q_power(k) - LaurentPoly(1); }

}  // namespace detail

/// Poincare polynomial of the smooth model by the recursion
/// P(d) = (q^{n.d} - 1) P_d - sum_{0<e<d, mu(e)=mu(d)} q^{-<d-e,e>} P_{d-e} P(e).
/// Returns 1 for d = 0 and the zero polynomial for an empty moduli space.
inline Poly smooth_model_poincare_recursion(const Quiver& q, const Stability& theta, const DimensionVector& d,
                                            const DimensionVector& n) {
  detail::check_framing(q, d, n);
  if (d.is_zero()) return Poly(1);
  const detail::HallContext ctx(q, theta, d);
  const auto x = detail::normalized_pd_class(ctx, d);
  // z[k] = |G_e| P(e) for e in the slope class
  std::vector<LaurentPoly> z(ctx.size());
  Poly result;
  for (std::size_t k = 1; k < ctx.size(); ++k) {
    if (!x[k]) continue;
    const DimensionVector& e = ctx.at(k);
    LaurentPoly acc = detail::q_power_minus_one(dot(n, e)) * *x[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (!x[j] || z[j].is_zero()) continue;
      const DimensionVector& f = ctx.at(j);
      if (!componentwise_le(f, e)) continue;
      const DimensionVector g = e - f;
      const std::size_t gi = ctx.box().index(g);
      acc -= LaurentPoly::q_power(-euler_form(q, g, f)) * *x[gi] * ctx.hall_factor(g, f) * z[j];
    }
    Poly value;
    try {
      value = acc.divided_exactly(ctx.group_order(k));
    } catch (const DivisibilityError&) {
      throw ConsistencyError("recursion produced a non-polynomial value at " + to_string(e));
    }
    detail::checked_poincare(value, "recursion");
    z[k] = LaurentPoly(value) * LaurentPoly(ctx.group_order(k));
    if (e == d) result = std::move(value);
  }
  return result;
}

/// Poincare polynomial of the smooth model as a sum over semi-admissible
/// decompositions of (-1)^{s-1} (q^{n.(d^1+...+d^k0)} - 1) q^{-sum_{k<l} <d^l,d^k>}
/// prod_k |R_{d^k}|/|G_{d^k}|, evaluated by a dynamic programme over partial sums.
///
/// State 0 holds prefixes whose partial sums all have slope > mu(d); the
/// first partial sum with slope mu(d) moves the term to state 1 with the
/// factor q^{n.(d^1+...+d^k0)} - 1.
inline Poly smooth_model_poincare_summation(const Quiver& q, const Stability& theta, const DimensionVector& d,
                                            const DimensionVector& n) {
  detail::check_framing(q, d, n);
  if (d.is_zero()) return Poly(1);
  const detail::HallContext ctx(q, theta, d);
  const std::size_t size = ctx.size();
  std::vector<LaurentPoly> w0(size);
  std::vector<LaurentPoly> w1(size);
  std::vector<int> cmp(size, 0);
  w0[0] = 1;
  for (std::size_t k = 1; k < size; ++k) {
    cmp[k] = ctx.compare(k, d);
    if (cmp[k] < 0) continue;
    const DimensionVector& e = ctx.at(k);
    LaurentPoly acc0;
    LaurentPoly acc1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != 0 && cmp[j] < 0) continue;
      if (w0[j].is_zero() && w1[j].is_zero()) continue;
      const DimensionVector& f = ctx.at(j);
      if (!componentwise_le(f, e)) continue;
      const LaurentPoly s = ctx.step(f, e - f);
      if (!w0[j].is_zero()) acc0 -= w0[j] * s;
      if (!w1[j].is_zero()) acc1 -= w1[j] * s;
    }
    if (cmp[k] > 0) {
      w0[k] = std::move(acc0);
      w1[k] = std::move(acc1);
    } else {
      w1[k] = acc1 + detail::q_power_minus_one(dot(n, e)) * acc0;
    }
  }
  const LaurentPoly total = -w1[size - 1];
  try {
    return detail::checked_poincare(total.divided_exactly(ctx.group_order(size - 1)), "summation");
  } catch (const DivisibilityError&) {
    throw ConsistencyError("semi-admissible sum is not a polynomial");
  }
}

/// The summation formula evaluated term by term over an explicit enumeration
/// of semi-admissible decompositions.  Exponential; used as a test oracle.
inline Poly smooth_model_poincare_summation_enumerated(const Quiver& q, const Stability& theta,
                                                       const DimensionVector& d, const DimensionVector& n) {
  detail::check_framing(q, d, n);
  if (d.is_zero()) return Poly(1);
  RationalFunction sum;
  for_each_semi_admissible_decomposition(q, theta, d, [&](const Decomposition& dec, std::size_t k0) {
    long exponent = 0;
    RationalFunction term = dec.size() % 2 == 1 ? RationalFunction(1) : RationalFunction(-1);
    for (std::size_t l = 0; l < dec.size(); ++l) {
      for (std::size_t k = 0; k < l; ++k) exponent -= euler_form(q, dec[l], dec[k]);
      term *= gauge_ratio(q, dec[l]);
    }
    term *= RationalFunction(Poly::q_power(static_cast<std::size_t>(dot(n, dec.prefix(k0 - 1)))) - Poly(1));
    sum += term * RationalFunction::q_power(exponent);
  });
  if (!sum.is_polynomial()) throw ConsistencyError("semi-admissible sum is not a polynomial: " + to_string(sum));
  return sum.numerator();
}

/// Coefficients of (sum P_e t^e)^{-1} * (sum q^{n.e} P_e t^e) over the slope
/// class s below the cap.  Every coefficient must be a polynomial.
inline std::map<DimensionVector, Poly> series_engine(const Quiver& q, const Stability& theta,
                                                     const Rational& slope_class, const DimensionVector& cap,
                                                     const DimensionVector& n, PdCache& cache) {
  detail::check_framing(q, cap, n);
  TwistedSeries a(q, cap, theta, slope_class);
  TwistedSeries b(q, cap, theta, slope_class);
  for (const auto& e : a.exponents()) {
    const RationalFunction pe = p_d(q, theta, e, cache);
    a.set(e, pe);
    b.set(e, RationalFunction::q_power(dot(n, e)) * pe);
  }
  const TwistedSeries c = a.inverse() * b;
  std::map<DimensionVector, Poly> out;
  for (const auto& e : c.exponents()) {
    const RationalFunction& v = c[e];
    if (!v.is_polynomial())
      throw ConsistencyError("series coefficient at " + to_string(e) + " is not a polynomial: " + to_string(v));
    out.emplace(e, detail::checked_poincare(v.numerator(), "series"));
  }
  return out;
}

inline std::map<DimensionVector, Poly> series_engine(const Quiver& q, const Stability& theta,
                                                     const Rational& slope_class, const DimensionVector& cap,
                                                     const DimensionVector& n) {
  PdCache cache;
  return series_engine(q, theta, slope_class, cap, n, cache);
}

/// The series engine read at d itself, with cap d and the slope class of d.
inline Poly smooth_model_poincare_series(const Quiver& q, const Stability& theta, const DimensionVector& d,
                                         const DimensionVector& n) {
  detail::check_framing(q, d, n);
  if (d.is_zero()) return Poly(1);
  return series_engine(q, theta, slope(theta, d), d, n).at(d);
}

/// Memo for the recursive semistability criterion; one table per (Q, Theta).
class SstMemo : detail::BoundMemo {
 public:
  std::optional<bool> find(const Quiver& q, const Stability& theta, const DimensionVector& d) {
    bind(q, theta);
    return memo_.find(d);
  }
  void insert(const Quiver& q, const Stability& theta, const DimensionVector& d, bool v) {
    bind(q, theta);
    memo_.insert(d, v);
  }

 private:
  ConcurrentMemo<DimensionVector, bool> memo_;
};

/// Whether semistable representations of dimension d exist: true iff no
/// decomposition into at least two parts has (a) every part semistable-nonempty,
/// (b) strictly decreasing slopes and (c) <d^k, d^l> = 0 for k < l.
inline bool sst_nonempty(const Quiver& q, const Stability& theta, const DimensionVector& d, SstMemo& memo) {
  q.check_vector(d);
  if (d.is_zero()) throw UndefinedSlopeError();
  if (auto hit = memo.find(q, theta, d)) return *hit;
  const std::vector<DimensionVector> all = Box(d).elements();
  std::vector<DimensionVector> parts;
  std::function<bool(const DimensionVector&)> witness = [&](const DimensionVector& rest) -> bool {
    for (std::size_t k = 1; k < all.size(); ++k) {
      const DimensionVector& e = all[k];
      if (!componentwise_le(e, rest)) continue;
      if (parts.empty() && e == d) continue;
      if (!parts.empty() && compare_slopes(theta, e, parts.back()) >= 0) continue;
      bool orthogonal = true;
      for (const auto& p : parts) orthogonal = orthogonal && euler_form(q, p, e) == 0;
      if (!orthogonal || !sst_nonempty(q, theta, e, memo)) continue;
      if (e == rest) return true;
      parts.push_back(e);
      const bool found = witness(rest - e);
      parts.pop_back();
      if (found) return true;
    }
    return false;
  };
  const bool result = !witness(d);
  memo.insert(q, theta, d, result);
  return result;
}

inline bool sst_nonempty(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  SstMemo memo;
  return sst_nonempty(q, theta, d, memo);
}

}  // namespace qmod
