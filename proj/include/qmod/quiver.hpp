#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"

namespace qmod {

using Rational = mpq_class;

/// Non-negative integer vector indexed by the vertices of a quiver.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::size_t size) : v_(size, 0) {}
  DimensionVector(std::initializer_list<int> entries) : v_(entries) { check(); }
  explicit DimensionVector(std::vector<int> entries) : v_(std::move(entries)) { check(); }

  static DimensionVector unit(std::size_t size, std::size_t vertex) {
    DimensionVector e(size);
    e.v_.at(vertex) = 1;
    return e;
  }

  std::size_t size() const noexcept { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  std::span<const int> entries() const noexcept { return v_; }
  void set(std::size_t i, int value) {
    if (value < 0) throw InputError("dimension vector entries must be non-negative");
    v_.at(i) = value;
  }

  /// Sum of the entries.
  int total() const { return std::accumulate(v_.begin(), v_.end(), 0); }
  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
  }

  friend DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
    same_size(a, b);
    DimensionVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.v_[i] += b.v_[i];
    return r;
  }
  /// Componentwise difference; requires b <= a.
  friend DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
    same_size(a, b);
    DimensionVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r.v_[i] -= b.v_[i];
      if (r.v_[i] < 0) throw InputError("dimension vector difference would be negative");
    }
    return r;
  }
  DimensionVector scaled(int factor) const {
    DimensionVector r = *this;
    for (auto& x : r.v_) x *= factor;
    return r;
  }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  /// Lexicographic order, used only to make containers deterministic.
  friend auto operator<=>(const DimensionVector& a, const DimensionVector& b) { return a.v_ <=> b.v_; }

  static void same_size(const DimensionVector& a, const DimensionVector& b) {
    if (a.size() != b.size()) throw InputError("dimension vectors have different lengths");
  }

 private:
  void check() const {
    for (int x : v_)
      if (x < 0) throw InputError("dimension vector entries must be non-negative");
  }

  std::vector<int> v_;
};

/// e <= d componentwise.
inline bool componentwise_le(const DimensionVector& e, const DimensionVector& d) {
  DimensionVector::same_size(e, d);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > d[i]) return false;
  return true;
}
/// e <= d and e != d.
inline bool componentwise_lt(const DimensionVector& e, const DimensionVector& d) {
  return componentwise_le(e, d) && e != d;
}

/// n . d = sum_i n_i d_i
inline long dot(const DimensionVector& a, const DimensionVector& b) {
  DimensionVector::same_size(a, b);
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

inline std::string to_string(const DimensionVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

/// All vectors 0 <= e <= cap, addressed by a mixed-radix index.  Index order
/// is lexicographic, so e <= f componentwise implies index(e) <= index(f).
class Box {
 public:
  explicit Box(DimensionVector cap) : cap_(std::move(cap)), stride_(cap_.size(), 1) {
    size_ = 1;
    for (std::size_t i = cap_.size(); i-- > 0;) {
      stride_[i] = size_;
      size_ *= static_cast<std::size_t>(cap_[i]) + 1;
    }
  }

  const DimensionVector& cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t index(const DimensionVector& e) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < cap_.size(); ++i) k += stride_[i] * static_cast<std::size_t>(e[i]);
    return k;
  }
  DimensionVector at(std::size_t index) const {
    DimensionVector e(cap_.size());
    for (std::size_t i = 0; i < cap_.size(); ++i) {
      e.set(i, static_cast<int>(index / stride_[i]));
      index %= stride_[i];
    }
    return e;
  }
  /// Every element of the box in index order.
  std::vector<DimensionVector> elements() const {
    std::vector<DimensionVector> out;
    out.reserve(size_);
    for (std::size_t k = 0; k < size_; ++k) out.push_back(at(k));
    return out;
  }

 private:
  DimensionVector cap_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

struct Arrow {
  std::size_t source;
  std::size_t target;
  /// 1-based position among the parallel arrows source -> target.
  std::size_t parallel_index;
  std::string name;
};

/// Finite quiver with ordered vertices and enumerated parallel arrows.
///
/// Vertex order and arrow enumeration are the input order and are never
/// changed afterwards.  The total order on arrows compares source, then
/// target, then the parallel index.
class Quiver {
 public:
  Quiver() = default;

  /// `arrows` are (source, target) vertex indices; names are optional and
  /// default to greek letters in input order.
  Quiver(std::vector<std::string> vertex_names, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
         std::vector<std::string> arrow_names = {})
      : vertices_(std::move(vertex_names)) {
    const std::size_t nv = vertices_.size();
    for (std::size_t i = 0; i < nv; ++i) {
      if (!index_.emplace(vertices_[i], i).second) throw InputError("duplicate vertex name '" + vertices_[i] + "'");
    }
    if (!arrow_names.empty() && arrow_names.size() != arrows.size())
      throw InputError("arrow name list does not match arrow list");
    adjacency_.assign(nv * nv, 0);
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      auto [s, t] = arrows[k];
      if (s >= nv || t >= nv) throw InputError("arrow endpoint out of range");
      const int par = ++adjacency_[s * nv + t];
      std::string name = arrow_names.empty() || arrow_names[k].empty() ? default_arrow_name(k) : arrow_names[k];
      arrows_.push_back(Arrow{s, t, static_cast<std::size_t>(par), std::move(name)});
    }
    order_.resize(arrows_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      const Arrow& a = arrows_[x];
      const Arrow& b = arrows_[y];
      return std::tie(a.source, a.target, a.parallel_index) < std::tie(b.source, b.target, b.parallel_index);
    });
    rank_.resize(arrows_.size());
    for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
    outgoing_.resize(nv);
    for (std::size_t id : order_) outgoing_[arrows_[id].source].push_back(id);
  }

  /// Convenience: vertices named by their index and unnamed arrows.
  static Quiver from_arrows(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vertex_count; ++i) names.push_back(std::to_string(i));
    return Quiver(std::move(names), arrows);
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(std::size_t i) const { return vertices_.at(i); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  std::optional<std::size_t> find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t id) const { return arrows_.at(id); }
  /// Number of arrows i -> j.
  int arrows_between(std::size_t i, std::size_t j) const { return adjacency_[i * vertices_.size() + j]; }
  /// Position of an arrow in the total arrow order.
  std::size_t arrow_rank(std::size_t id) const { return rank_.at(id); }
  /// Inverse of arrow_rank.
  std::size_t arrow_at_rank(std::size_t rank) const { return order_.at(rank); }
  /// Arrow ids starting at vertex i, in arrow order.
  const std::vector<std::size_t>& outgoing(std::size_t i) const { return outgoing_.at(i); }

  void check_vector(const DimensionVector& d) const {
    if (d.size() != vertex_count()) throw InputError("dimension vector length does not match the quiver");
  }

 private:
  static std::string default_arrow_name(std::size_t k) {
    static constexpr std::string_view greek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ",
                                                 "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
    if (k < std::size(greek)) return std::string(greek[k]);
    return "a" + std::to_string(k);
  }

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Arrow> arrows_;
  std::vector<int> adjacency_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

/// <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j
inline long euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  q.check_vector(d);
  q.check_vector(e);
  long s = dot(d, e);
  for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
  return s;
}

/// Linear form Theta on dimension vectors with rational weights.
class Stability {
 public:
  Stability() = default;
  explicit Stability(std::vector<Rational> weights) : w_(std::move(weights)) {
    for (auto& x : w_) x.canonicalize();
  }
  static Stability trivial(std::size_t size) { return Stability(std::vector<Rational>(size, Rational(0))); }
  static Stability from_integers(std::initializer_list<long> weights) {
    std::vector<Rational> w;
    for (long x : weights) w.emplace_back(x);
    return Stability(std::move(w));
  }

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  std::span<const Rational> weights() const noexcept { return w_; }
  bool is_trivial() const {
    return std::all_of(w_.begin(), w_.end(), [](const Rational& x) { return x == 0; });
  }

  /// Theta(d)
  Rational operator()(const DimensionVector& d) const {
    if (d.size() != w_.size()) throw InputError("stability and dimension vector lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * d[i];
    return s;
  }

  friend bool operator==(const Stability& a, const Stability& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
};

/// mu(d) = Theta(d) / dim d, reduced.  Undefined for d = 0.
inline Rational slope(const Stability& theta, const DimensionVector& d) {
  const int total = d.total();
  if (total == 0) throw UndefinedSlopeError();
  Rational r = theta(d) / total;
  r.canonicalize();
  return r;
}

/// Shift by -mu(d)*dim and rescale by the least positive rational making all
/// weights integral.  The result vanishes on d and induces the same order of
/// slopes relative to mu(d).
inline Stability normalize_stability(const Stability& theta, const DimensionVector& d) {
  const Rational mu = slope(theta, d);
  std::vector<Rational> w(theta.weights().begin(), theta.weights().end());
  for (auto& x : w) {
    x -= mu;
    x.canonicalize();
  }
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& x : w) {
    if (x == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num_gcd == 0) return Stability(std::move(w));
  const Rational scale(den_lcm, num_gcd);
  for (auto& x : w) x *= scale;
  return Stability(std::move(w));
}

/// Sign of mu(e) - mu(d) for e != 0, evaluated without division.
inline int compare_slopes(const Stability& theta, const DimensionVector& e, const DimensionVector& d) {
  if (e.is_zero() || d.is_zero()) throw UndefinedSlopeError();
  const Rational lhs = theta(e) * d.total();
  const Rational rhs = theta(d) * e.total();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// True iff mu(e) != mu(d) for every 0 < e < d.
inline bool is_coprime(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  q.check_vector(d);
  if (d.is_zero()) throw UndefinedSlopeError();
  const Box box(d);
  for (std::size_t k = 1; k + 1 < box.size(); ++k) {
    if (compare_slopes(theta, box.at(k), d) == 0) return false;
  }
  return true;
}

/// For each vertex i with d_i != 0: whether some j with n_j != 0 reaches i by a
/// path inside the full subquiver on supp(d).  Entries for d_i = 0 are false.
inline std::vector<bool> support_reachable(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  q.check_vector(d);
  q.check_vector(n);
  const std::size_t nv = q.vertex_count();
  std::vector<bool> seen(nv, false);
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < nv; ++j) {
    if (d[j] != 0 && n[j] != 0) {
      seen[j] = true;
      stack.push_back(j);
    }
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t id : q.outgoing(v)) {
      const std::size_t t = q.arrow(id).target;
      if (d[t] != 0 && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace qmod
