#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qmod;
using fixtures::rf;
using fixtures::rq;
using fixtures::vec;
using fixtures::weights;

namespace {

const RationalFunction kQ = RationalFunction(Poly::q_power(1));
const RationalFunction kOne = RationalFunction(1);

RationalFunction binomial(unsigned n, long k) { return rf(q_binomial(n, k)); }

Integer choose(int n, int k) {
  Integer c = 1;
  for (int l = 0; l < k; ++l) c = c * (n - l) / (l + 1);
  return c;
}

struct SubspaceCase {
  Quiver q;
  Stability theta;
  DimensionVector d;
  DimensionVector n;
};

SubspaceCase two_dim_subspace(int r) {
  std::vector<Rational> w(static_cast<std::size_t>(r) + 1, Rational(0));
  w[0] = -1;
  std::vector<int> d(static_cast<std::size_t>(r) + 1, 1);
  d[0] = 2;
  std::vector<int> n(static_cast<std::size_t>(r) + 1, 0);
  n[0] = 1;
  return {fixtures::subspace(r), Stability(w), DimensionVector(d), DimensionVector(n)};
}

RationalFunction sum_below_half(int r) {
  RationalFunction s;
  for (int l = 0; l < r / 2; ++l) s = s + rf(Poly(choose(r, l))) * rq(l);
  return s;
}

RationalFunction kronecker_sum(int m, int k) {
  RationalFunction s;
  for (int l = 0; l < k; ++l)
    s = s + rq((m - 2 * k + l) * l) * binomial(static_cast<unsigned>(m), l) * binomial(static_cast<unsigned>(m), 2 * k - l);
  return s;
}

}  // namespace

TEST(Decompositions, Kronecker) {
  const Quiver k = fixtures::kronecker(2);
  const auto adm = admissible_decompositions(k, weights({1, 0}), vec({1, 1}));
  ASSERT_EQ(adm.size(), 2u);
  EXPECT_EQ(adm[0].parts(), (std::vector<DimensionVector>{vec({1, 0}), vec({0, 1})}));
  EXPECT_EQ(adm[1].parts(), (std::vector<DimensionVector>{vec({1, 1})}));
  const auto semi = semi_admissible_decompositions(k, weights({1, 0}), vec({1, 1}));
  ASSERT_EQ(semi.size(), 2u);
  for (const auto& [dec, k0] : semi) EXPECT_EQ(k0, dec.size() == 1 ? 1u : 2u);
}

TEST(Decompositions, ProperPrefixesOnly) {
  // Theta = 0: every slope equals mu(d), so only the trivial decomposition is admissible
  const auto adm = admissible_decompositions(fixtures::two_cycle(), weights({0, 0}), vec({2, 1}));
  ASSERT_EQ(adm.size(), 1u);
  EXPECT_EQ(adm[0].size(), 1u);
}

TEST(Pd, Examples) {
  const Quiver point = fixtures::loops(0);
  EXPECT_EQ(p_d(point, weights({0}), vec({0})), RationalFunction(1));
  EXPECT_EQ(p_d(point, weights({0}), vec({1})), RationalFunction(Poly(1), Poly{-1, 1}));
  const Quiver k = fixtures::kronecker(2);
  EXPECT_EQ(stable_poincare(k, weights({1, 0}), vec({1, 1})), (Poly{1, 1}));
  EXPECT_THROW(stable_poincare(k, weights({1, 0}), vec({2, 2})), PreconditionError);
  EXPECT_EQ(p_d(fixtures::loops(2), weights({0}), vec({1})), RationalFunction(Poly::q_power(2), Poly{-1, 1}));
}

TEST(Pd, DynamicProgramMatchesEnumeration) {
  const std::vector<std::tuple<Quiver, Stability, DimensionVector>> cases{
      {fixtures::kronecker(2), weights({1, 0}), vec({2, 2})},
      {fixtures::kronecker(3), weights({1, 0}), vec({2, 3})},
      {fixtures::two_cycle(), weights({0, 0}), vec({2, 2})},
      {fixtures::loop_and_arrow(), weights({2, -1}), vec({2, 1})},
      {fixtures::subspace(3), weights({-1, 0, 0, 0}), vec({2, 1, 1, 1})},
  };
  for (const auto& [q, theta, d] : cases) EXPECT_EQ(p_d(q, theta, d), p_d_enumerated(q, theta, d)) << to_string(d);
}

TEST(Pd, CacheIsBoundToOneDatum) {
  PdCache cache;
  p_d(fixtures::kronecker(2), weights({1, 0}), vec({1, 1}), cache);
  EXPECT_THROW(p_d(fixtures::kronecker(3), weights({1, 0}), vec({1, 1}), cache), std::logic_error);
}

TEST(SmoothModel, Examples) {
  for (int m : {0, 1, 3}) {
    const Quiver q = fixtures::loops(m);
    const Poly expected = Poly::q_power(static_cast<std::size_t>(m));
    EXPECT_EQ(smooth_model_poincare_recursion(q, weights({0}), vec({1}), vec({1})), expected);
    EXPECT_EQ(smooth_model_poincare_summation(q, weights({0}), vec({1}), vec({1})), expected);
    EXPECT_EQ(smooth_model_poincare_series(q, weights({0}), vec({1}), vec({1})), expected);
  }
  const Quiver cyc = fixtures::two_cycle();
  EXPECT_EQ(smooth_model_poincare_recursion(cyc, weights({0, 0}), vec({2, 2}), vec({2, 2})), fixtures::table1_poincare());
  EXPECT_EQ(smooth_model_poincare_summation(cyc, weights({0, 0}), vec({2, 2}), vec({2, 2})), fixtures::table1_poincare());
  EXPECT_EQ(smooth_model_poincare_series(cyc, weights({0, 0}), vec({2, 2}), vec({2, 2})), fixtures::table1_poincare());
  const Quiver bad = fixtures::loop_and_arrow();
  EXPECT_EQ(smooth_model_poincare_recursion(bad, weights({0, 0}), vec({1, 0}), vec({0, 1})), Poly());
  EXPECT_EQ(smooth_model_poincare_summation(bad, weights({0, 0}), vec({1, 0}), vec({0, 1})), Poly());
  EXPECT_EQ(smooth_model_poincare_series(bad, weights({0, 0}), vec({1, 0}), vec({0, 1})), Poly());
}

TEST(SmoothModel, ZeroDimensionVector) {
  const Quiver k = fixtures::kronecker(2);
  EXPECT_EQ(smooth_model_poincare_recursion(k, weights({1, 0}), vec({0, 0}), vec({1, 1})), Poly(1));
  EXPECT_EQ(smooth_model_poincare_summation(k, weights({1, 0}), vec({0, 0}), vec({1, 1})), Poly(1));
  EXPECT_EQ(smooth_model_poincare_series(k, weights({1, 0}), vec({0, 0}), vec({1, 1})), Poly(1));
}

TEST(SmoothModel, SummationMatchesItsEnumeratedForm) {
  const Quiver k = fixtures::kronecker(2);
  EXPECT_EQ(smooth_model_poincare_summation_enumerated(k, weights({1, 0}), vec({2, 2}), vec({1, 1})),
            smooth_model_poincare_summation(k, weights({1, 0}), vec({2, 2}), vec({1, 1})));
  const Quiver cyc = fixtures::two_cycle();
  EXPECT_EQ(smooth_model_poincare_summation_enumerated(cyc, weights({0, 0}), vec({2, 2}), vec({2, 2})),
            fixtures::table1_poincare());
}

TEST(SmoothModel, SeriesCoefficientsAcrossTheCap) {
  const Quiver k = fixtures::kronecker(2);
  const auto table = series_engine(k, weights({1, 0}), Rational(1, 2), vec({2, 2}), vec({1, 1}));
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table.at(vec({0, 0})), Poly(1));
  EXPECT_EQ(table.at(vec({1, 1})), smooth_model_poincare_summation(k, weights({1, 0}), vec({1, 1}), vec({1, 1})));
  EXPECT_EQ(table.at(vec({2, 2})), smooth_model_poincare_summation(k, weights({1, 0}), vec({2, 2}), vec({1, 1})));
}

TEST(SmoothModel, CoprimeBundle) {
  const Quiver k = fixtures::kronecker(3);
  const auto theta = weights({1, 0});
  const auto d = vec({2, 3});
  const auto n = vec({1, 2});
  const Poly stable = stable_poincare(k, theta, d);
  EXPECT_EQ(smooth_model_poincare_recursion(k, theta, d, n), q_integer(static_cast<unsigned>(dot(n, d))) * stable);
}

TEST(ClosedForms, TwoDimensionalSubspaceQuiver) {
  for (int r : {4, 6}) {
    const auto c = two_dim_subspace(r);
    const RationalFunction s = sum_below_half(r);
    const RationalFunction pd =
        (rf(pow(Poly{1, 1}, static_cast<unsigned>(r - 1))) - s) / (kQ * (kQ - kOne) * (kQ - kOne));
    EXPECT_EQ(p_d(c.q, c.theta, c.d), pd) << "r=" << r;
    const RationalFunction smooth = (rf(pow(Poly{1, 1}, static_cast<unsigned>(r))) - (kQ + kOne) * s -
                                     rq(r / 2) * rf(Poly(choose(r, r / 2)))) /
                                    (kQ * (kQ - kOne));
    EXPECT_EQ(RationalFunction(smooth_model_poincare_recursion(c.q, c.theta, c.d, c.n)), smooth) << "r=" << r;
  }
}

TEST(ClosedForms, Kronecker) {
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
    const Quiver q = fixtures::kronecker(m);
    const auto theta = weights({1, 0});
    const RationalFunction s = kronecker_sum(m, k);
    const RationalFunction gap = kQ * (kQ - kOne) * (kQ - kOne);
    const RationalFunction pd = (binomial(2 * static_cast<unsigned>(m), 2 * k) / (kQ + kOne) - s) / gap;
    EXPECT_EQ(p_d(q, theta, vec({2, 2 * k})), pd) << m << "," << k;
    // the half dimension vector has (q-1) P_e equal to the binomial [m, k]
    EXPECT_EQ((kQ - kOne) * p_d(q, theta, vec({1, k})), binomial(static_cast<unsigned>(m), k));
    for (const auto& n : {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 1})}) {
      const RationalFunction x = rq(n[0] + k * n[1]);
      const RationalFunction smooth =
          (x - kOne) / gap *
          ((x + kOne) / (kQ + kOne) * binomial(2 * static_cast<unsigned>(m), 2 * k) - (x + kOne) * s -
           rq((m - k) * k) * binomial(static_cast<unsigned>(m), k) * binomial(static_cast<unsigned>(m), k));
      EXPECT_EQ(RationalFunction(smooth_model_poincare_recursion(q, theta, vec({2, 2 * k}), n)), smooth)
          << m << "," << k << " n=" << to_string(n);
    }
  }
}

TEST(SemistableNonempty, Examples) {
  EXPECT_TRUE(sst_nonempty(fixtures::two_cycle(), weights({0, 0}), vec({2, 1})));
  EXPECT_TRUE(sst_nonempty(fixtures::kronecker(2), weights({1, 0}), vec({1, 1})));
  EXPECT_FALSE(sst_nonempty(Quiver({"x", "y"}, {}), weights({1, 0}), vec({1, 1})));
  EXPECT_FALSE(sst_nonempty(fixtures::kronecker(1), weights({1, 0}), vec({1, 2})));
  EXPECT_TRUE(sst_nonempty(fixtures::kronecker(3), weights({1, 0}), vec({2, 3})));
  EXPECT_THROW(sst_nonempty(fixtures::kronecker(2), weights({1, 0}), vec({0, 0})), UndefinedSlopeError);
}

TEST(SemistableNonempty, FramedDatumMatchesEngines) {
  const Quiver bad = fixtures::loop_and_arrow();
  const FramedDatum f(bad, vec({1, 0}), weights({0, 0}), vec({0, 1}));
  EXPECT_FALSE(sst_nonempty(f.extended_quiver(), f.explicit_hat_stability(), f.extended_d()));
  const FramedDatum g(fixtures::two_cycle(), vec({2, 2}), weights({0, 0}), vec({2, 2}));
  EXPECT_TRUE(sst_nonempty(g.extended_quiver(), g.explicit_hat_stability(), g.extended_d()));
}
