#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/poly.hpp"
#include "qmod/rational_function.hpp"

namespace qmod {

/// |GL_m(F_q)| = prod_{k<m} (q^m - q^k).
inline Poly gl_order(unsigned m) {
  Poly result = 1;
  const Poly top = Poly::q_power(m);
  for (unsigned k = 0; k < m; ++k) result *= top - Poly::q_power(k);
  return result;
}

/// 1 + q + ... + q^(n-1)
inline Poly q_integer(unsigned n) {
  std::vector<Integer> c(n, Integer(1));
  return Poly::from_coefficients(std::move(c));
}

/// Gaussian binomial coefficient [n choose k]; zero outside 0 <= k <= n.
inline Poly q_binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return {};
  const auto kk = static_cast<unsigned>(k);
  Poly num = 1;
  Poly den = 1;
  for (unsigned i = 0; i < kk; ++i) {
    num *= Poly::q_power(n - i) - Poly(1);
    den *= Poly::q_power(i + 1) - Poly(1);
  }
  return exact_divide(num, den);
}

/// Weakly decreasing tuples (l_1 >= ... >= l_count >= 0) with l_1 <= max_part
/// and l_1 + ... + l_count <= max_weight, in increasing lexicographic order.
/// A negative bound means "unbounded"; at least one bound must be finite
/// unless count == 0.
class PartitionRange {
 public:
  PartitionRange(std::size_t count, long max_part, long max_weight)
      : count_(count), max_part_(max_part), max_weight_(max_weight) {
    if (count_ > 0 && max_part_ < 0 && max_weight_ < 0)
      throw InputError("partition enumeration needs a part or weight bound");
  }

  class iterator {
   public:
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(const PartitionRange* range) : range_(range), parts_(range->count_, 0) {}

    reference operator*() const { return parts_; }
    const value_type* operator->() const { return &parts_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) { return a.range_ == b.range_; }

   private:
    void advance() {
      const std::size_t c = parts_.size();
      std::vector<long> prefix_sums(c + 1, 0);
      for (std::size_t j = 0; j < c; ++j) prefix_sums[j + 1] = prefix_sums[j] + parts_[j];
      for (std::size_t k = c; k-- > 0;) {
        const long cap = k == 0 ? range_->max_part_ : parts_[k - 1];
        const long next = parts_[k] + 1;
        if (cap >= 0 && next > cap) continue;
        if (range_->max_weight_ >= 0 && prefix_sums[k] + next > range_->max_weight_) continue;
        parts_[k] = static_cast<int>(next);
        for (std::size_t j = k + 1; j < c; ++j) parts_[j] = 0;
        return;
      }
      range_ = nullptr;
    }

    const PartitionRange* range_ = nullptr;
    std::vector<int> parts_;
  };

  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

 private:
  std::size_t count_;
  long max_part_;
  long max_weight_;
};

/// Sum over all multipartitions with at most parts[i] parts at vertex i and
/// weight <= cutoff of x^weight, where x stands for q^{-1}.
inline Poly partition_series(std::span<const int> parts, unsigned cutoff) {
  std::vector<Integer> total(cutoff + 1, Integer(0));
  total[0] = 1;
  for (int count : parts) {
    std::vector<Integer> by_weight(cutoff + 1, Integer(0));
    for (const auto& lambda : PartitionRange(static_cast<std::size_t>(count), -1, cutoff)) {
      long w = 0;
      for (int x : lambda) w += x;
      by_weight[static_cast<std::size_t>(w)] += 1;
    }
    std::vector<Integer> next(cutoff + 1, Integer(0));
    for (std::size_t a = 0; a <= cutoff; ++a) {
      if (total[a] == 0) continue;
      for (std::size_t b = 0; a + b <= cutoff; ++b) next[a + b] += total[a] * by_weight[b];
    }
    total = std::move(next);
  }
  return Poly::from_coefficients(std::move(total));
}

/// Laurent expansion of a rational function around q = infinity:
/// r(q) = sum_{k >= first} c_k q^{-k}.
struct InverseQExpansion {
  long first = 0;
  std::vector<Integer> coefficients;  // coefficients[j] multiplies q^{-(first + j)}

  Integer coefficient(long k) const {
    if (k < first || k - first >= static_cast<long>(coefficients.size())) return 0;
    return coefficients[static_cast<std::size_t>(k - first)];
  }
};

/// Expands r in powers of q^{-1} up to and including q^{-max_order}.  The
/// leading coefficient of the denominator must divide every step (true for
/// monic denominators such as group orders).
inline InverseQExpansion expand_in_inverse_q(const RationalFunction& r, long max_order) {
  InverseQExpansion out;
  const Poly& num = r.numerator();
  const Poly& den = r.denominator();
  if (num.is_zero()) {
    out.first = max_order + 1;
    return out;
  }
  // r = x^(deg den - deg num) * rev(num)(x) / rev(den)(x) with x = 1/q.
  out.first = static_cast<long>(den.degree()) - num.degree();
  if (max_order < out.first) return out;
  const auto n = static_cast<std::size_t>(max_order - out.first + 1);
  auto rev = [](const Poly& p) {
    auto c = p.coefficients();
    return std::vector<Integer>(c.rbegin(), c.rend());
  };
  const std::vector<Integer> a = rev(num);
  const std::vector<Integer> b = rev(den);
  out.coefficients.assign(n, Integer(0));
  for (std::size_t k = 0; k < n; ++k) {
    Integer acc = k < a.size() ? a[k] : Integer(0);
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * out.coefficients[k - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), b[0].get_mpz_t()))
      throw DivisibilityError("series expansion has non-integral coefficients");
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), b[0].get_mpz_t());
    out.coefficients[k] = std::move(acc);
  }
  return out;
}

}  // namespace qmod
