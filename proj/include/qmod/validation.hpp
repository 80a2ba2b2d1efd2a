#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qmod/betti.hpp"
#include "qmod/cells.hpp"
#include "qmod/counting.hpp"
#include "qmod/framing.hpp"
#include "qmod/hilbert.hpp"
#include "qmod/poly.hpp"
#include "qmod/q_analogs.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

struct SuiteInstance {
  Quiver quiver;
  DimensionVector d;
  DimensionVector n;
  Stability theta;
};

inline std::string describe(const SuiteInstance& s) {
  std::string out = "Q=" + std::to_string(s.quiver.vertex_count()) + "[";
  for (std::size_t k = 0; k < s.quiver.arrow_count(); ++k) {
    const auto& a = s.quiver.arrow(k);
    out += (k ? " " : "") + std::to_string(a.source) + ">" + std::to_string(a.target);
  }
  out += "] d=" + to_string(s.d) + " n=" + to_string(s.n) + " theta=(";
  for (std::size_t i = 0; i < s.theta.size(); ++i) out += (i ? "," : "") + s.theta[i].get_str();
  return out + ")";
}

/// Random quiver of at most 3 vertices and 4 arrows (loops allowed).
inline Quiver random_quiver(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> vertices(1, 3);
  std::uniform_int_distribution<int> arrow_count(0, 4);
  const std::size_t nv = vertices(rng);
  std::uniform_int_distribution<std::size_t> endpoint(0, nv - 1);
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  const int m = arrow_count(rng);
  for (int k = 0; k < m; ++k) {
    const std::size_t s = endpoint(rng);
    arrows.emplace_back(s, endpoint(rng));
  }
  return Quiver::from_arrows(nv, arrows);
}

inline DimensionVector random_nonzero_vector(std::mt19937_64& rng, std::size_t size, int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  while (true) {
    std::vector<int> v(size);
    for (auto& x : v) x = entry(rng);
    DimensionVector d(std::move(v));
    if (!d.is_zero()) return d;
  }
}

/// Reproducible instances: entries of d and n at most 3, Theta trivial for
/// about half of them and otherwise integral in [-2, 2].
inline std::vector<SuiteInstance> random_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution trivial(0.5);
  std::uniform_int_distribution<long> weight(-2, 2);
  std::vector<SuiteInstance> out;
  while (out.size() < count) {
    Quiver q = random_quiver(rng);
    const std::size_t nv = q.vertex_count();
    DimensionVector d = random_nonzero_vector(rng, nv, 3);
    DimensionVector n = random_nonzero_vector(rng, nv, 3);
    std::vector<Rational> w(nv, Rational(0));
    if (!trivial(rng))
      for (auto& x : w) x = weight(rng);
    out.push_back({std::move(q), std::move(d), std::move(n), Stability(std::move(w))});
  }
  return out;
}

/// Outcome of all checks on one instance; an empty failure list means pass.
struct InstanceReport {
  std::size_t index = 0;
  std::string description;
  std::vector<std::string> failures;
  Poly poincare;
  bool coprime = false;
  bool theta_zero = false;
  bool nonempty = false;
  std::size_t cells = 0;
  /// Theta = 0 and non-empty: whether the zero multipartition lies in S_{d,n}.
  bool zero_multipartition = false;
};

namespace detail {

inline void expect(InstanceReport& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

/// Corona j-vertices of a type-correct forest: n_j - d_j + sum_i a_ij d_i.
inline bool corona_count_law(const Quiver& q, const DimensionVector& d, const DimensionVector& n,
                             const Subforest& s) {
  std::vector<long> count(q.vertex_count(), 0);
  for (const auto& c : corona(q, s)) ++count[vertex_type(q, c)];
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    long expected = n[j] - d[j];
    for (std::size_t i = 0; i < q.vertex_count(); ++i) expected += static_cast<long>(q.arrows_between(i, j)) * d[i];
    if (count[j] != expected) return false;
  }
  return true;
}

}  // namespace detail

/// Runs every cross-engine and structural check on one instance.
inline InstanceReport check_instance(const SuiteInstance& s, std::size_t index) {
  InstanceReport r;
  r.index = index;
  r.description = describe(s);
  const Quiver& q = s.quiver;
  const auto& d = s.d;
  const auto& n = s.n;
  r.theta_zero = s.theta.is_trivial();
  try {
    const Poly rec = smooth_model_poincare_recursion(q, s.theta, d, n);
    const Poly sum = smooth_model_poincare_summation(q, s.theta, d, n);
    const Poly ser = smooth_model_poincare_series(q, s.theta, d, n);
    r.poincare = rec;
    r.nonempty = !rec.is_zero();
    detail::expect(r, rec == sum, "recursion " + to_string(rec) + " != summation " + to_string(sum));
    detail::expect(r, rec == ser, "recursion " + to_string(rec) + " != series " + to_string(ser));
    detail::expect(r, rec.has_nonnegative_coefficients(), "negative coefficients");
    const long dim = dot(n, d) - euler_form(q, d, d);
    detail::expect(r, rec.is_zero() || rec.degree() == dim,
                   "degree " + std::to_string(rec.degree()) + " != n.d - <d,d> = " + std::to_string(dim));

    r.coprime = is_coprime(q, s.theta, d);
    if (r.coprime) {
      const RationalFunction pd = p_d(q, s.theta, d);
      const RationalFunction bundle = RationalFunction(Poly::q_power(static_cast<std::size_t>(dot(n, d))) - Poly(1)) * pd;
      detail::expect(r, bundle == RationalFunction(rec), "coprime bundle identity fails: " + to_string(bundle));
      const Poly stable = stable_poincare(q, s.theta, d);
      detail::expect(r, q_integer(static_cast<unsigned>(dot(n, d))) * stable == rec,
                     "[n.d]_q (q-1) P_d != smooth model");
    }

    const FramedDatum framed(q, d, s.theta, n);
    const bool sst = sst_nonempty(framed.extended_quiver(), framed.explicit_hat_stability(), framed.extended_d());
    detail::expect(r, sst == r.nonempty, "recursive criterion on the framed datum disagrees with the engines");

    if (r.theta_zero) {
      const auto parts = multipartitions(q, d, n);
      const Poly mp = hilb_poincare_multipartitions(q, d, n);
      detail::expect(r, mp == rec, "multipartitions " + to_string(mp) + " != recursion " + to_string(rec));
      const bool crit = hilb_nonempty(q, d, n);
      detail::expect(r, crit == !parts.empty(), "non-emptiness criterion disagrees with S_{d,n}");
      detail::expect(r, crit == r.nonempty, "non-emptiness criterion disagrees with the engines");
      for (const auto& m : parts)
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
          if (d[i] > 0) detail::expect(r, m.part(i, 1) <= hilb_part_bound(q, d, n, i), "part bound violated");
      if (!parts.empty()) {
        r.zero_multipartition = parts.front().weight() == 0;
      }
      const auto forests = enumerate_forests(q, d, n);
      r.cells = forests.size();
      detail::expect(r, forests.size() == parts.size(), "|Phi| != |S|");
      Poly cells;
      std::vector<Multipartition> images;
      for (const auto& f : forests) {
        const Multipartition lambda = phi(q, f);
        images.push_back(lambda);
        const long cd = cell_dimension(q, f);
        detail::expect(r, cd == dim - lambda.weight(), "dimension-weight law fails for " + to_string(q, f));
        detail::expect(r, detail::corona_count_law(q, d, n, f), "corona count law fails for " + to_string(q, f));
        detail::expect(r, psi(q, n, lambda) == f, "psi(phi(S)) != S");
        cells += Poly::q_power(static_cast<std::size_t>(cd));
      }
      std::sort(images.begin(), images.end());
      detail::expect(r, images == parts, "phi(Phi) != S_{d,n}");
      detail::expect(r, cells == rec, "cells " + to_string(cells) + " != recursion " + to_string(rec));
    }
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  return r;
}

struct SuiteReport {
  std::vector<InstanceReport> instances;

  std::size_t failed() const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.failures.empty(); }));
  }
  std::size_t count_if(const std::function<bool(const InstanceReport&)>& pred) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), pred));
  }
};

/// Checks every instance, spreading the work over `threads` workers.  The
/// report lists instances in input order regardless of the thread count.
inline SuiteReport run_suite(const std::vector<SuiteInstance>& instances, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SuiteReport report;
  report.instances.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < instances.size(); k = next++) report.instances[k] = check_instance(instances[k], k);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return report;
}

/// q^{<d,d>} gauge_ratio(Q, d) expanded in q^{-1} against the partition
/// series, for every weight up to `order`.  Returns an empty string on success.
inline std::string check_series_identity(const Quiver& q, const DimensionVector& d, unsigned order) {
  const long shift = euler_form(q, d, d);
  const InverseQExpansion lhs = expand_in_inverse_q(gauge_ratio(q, d), static_cast<long>(order) + shift);
  const Poly series = partition_series(d.entries(), order);
  for (long k = lhs.first; k < shift; ++k)
    if (lhs.coefficient(k) != 0) return "nonzero coefficient of q^" + std::to_string(-k) + " before the leading term";
  for (long w = 0; w <= static_cast<long>(order); ++w) {
    const Integer expected = series.coefficient(static_cast<std::size_t>(w));
    if (lhs.coefficient(w + shift) != expected)
      return "weight " + std::to_string(w) + ": " + lhs.coefficient(w + shift).get_str() + " vs " + expected.get_str();
  }
  return {};
}

}  // namespace qmod
