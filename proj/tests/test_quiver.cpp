#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qmod;
using fixtures::vec;
using fixtures::weights;

TEST(EulerForm, Examples) {
  EXPECT_EQ(euler_form(fixtures::kronecker(2), vec({1, 0}), vec({0, 1})), -2);
  EXPECT_EQ(euler_form(fixtures::kronecker(2), vec({0, 1}), vec({1, 0})), 0);
  EXPECT_EQ(euler_form(fixtures::two_cycle(), vec({0, 0}), vec({3, 1})), 0);
  EXPECT_EQ(euler_form(fixtures::two_cycle(), vec({2, 2}), vec({2, 2})), 0);
  EXPECT_EQ(euler_form(fixtures::loops(3), vec({2}), vec({2})), 4 - 12);
}

TEST(EulerForm, Bilinear) {
  const Quiver q = fixtures::loop_and_arrow();
  const auto a = vec({1, 2});
  const auto b = vec({3, 0});
  const auto c = vec({2, 5});
  EXPECT_EQ(euler_form(q, a + b, c), euler_form(q, a, c) + euler_form(q, b, c));
  EXPECT_EQ(euler_form(q, c, a + b), euler_form(q, c, a) + euler_form(q, c, b));
}

TEST(Quiver, ArrowOrderAndNames) {
  const Quiver q({"x", "y"}, {{1, 0}, {0, 1}, {0, 1}});
  EXPECT_EQ(q.arrows_between(0, 1), 2);
  EXPECT_EQ(q.arrow(1).parallel_index, 1u);
  EXPECT_EQ(q.arrow(2).parallel_index, 2u);
  // total order: source, target, parallel index
  EXPECT_EQ(q.arrow_at_rank(0), 1u);
  EXPECT_EQ(q.arrow_at_rank(1), 2u);
  EXPECT_EQ(q.arrow_at_rank(2), 0u);
  EXPECT_THROW(Quiver({"x", "x"}, {}), InputError);
  EXPECT_THROW(Quiver({"x"}, {{0, 1}}), InputError);
  EXPECT_THROW(q.check_vector(vec({1})), InputError);
}

TEST(Slope, Examples) {
  EXPECT_EQ(slope(weights({1, 0}), vec({1, 1})), Rational(1, 2));
  EXPECT_EQ(slope(weights({0, 0, 0}), vec({1, 4, 2})), 0);
  EXPECT_EQ(slope(weights({-1, 0, 0, 0, 0}), vec({2, 1, 1, 1, 1})), Rational(-1, 3));
  EXPECT_THROW(slope(weights({1, 0}), vec({0, 0})), UndefinedSlopeError);
}

TEST(Slope, Normalization) {
  EXPECT_TRUE(normalize_stability(weights({0, 0}), vec({1, 3})).is_trivial());
  const Stability expected = weights({1, -1});
  EXPECT_EQ(normalize_stability(weights({1, 0}), vec({1, 1})), expected);
  EXPECT_EQ(normalize_stability(weights({2, 0}), vec({1, 1})), expected);
  const Stability n = normalize_stability(weights({3, 1, 0}), vec({1, 2, 2}));
  EXPECT_EQ(n(vec({1, 2, 2})), 0);
}

TEST(Coprime, Examples) {
  const Quiver k = fixtures::kronecker(2);
  EXPECT_TRUE(is_coprime(k, weights({1, 0}), vec({1, 1})));
  EXPECT_FALSE(is_coprime(k, weights({0, 0}), vec({1, 1})));
  EXPECT_FALSE(is_coprime(k, weights({1, 0}), vec({2, 2})));
  EXPECT_TRUE(is_coprime(k, weights({0, 0}), vec({1, 0})));
}

TEST(Reachability, Examples) {
  const auto r = support_reachable(fixtures::loop_and_arrow(), vec({1, 0}), vec({0, 1}));
  EXPECT_FALSE(r[0]);
  const auto both = support_reachable(fixtures::two_cycle(), vec({2, 2}), vec({2, 2}));
  EXPECT_TRUE(both[0] && both[1]);
  const auto via = support_reachable(fixtures::two_cycle(), vec({1, 1}), vec({1, 0}));
  EXPECT_TRUE(via[0] && via[1]);
  const auto cut = support_reachable(fixtures::two_cycle(), vec({0, 1}), vec({1, 0}));
  EXPECT_FALSE(cut[1]);
}

TEST(Framing, OneLoop) {
  const FramedDatum f(fixtures::loops(1), vec({3}), weights({0}), vec({1}));
  const Quiver& e = f.extended_quiver();
  ASSERT_EQ(e.vertex_count(), 2u);
  EXPECT_EQ(e.arrows_between(0, 0), 1);
  EXPECT_EQ(e.arrows_between(1, 0), 1);
  EXPECT_EQ(e.arrow_count(), 2u);
  EXPECT_EQ(e.vertex_name(1), "∞");
  EXPECT_EQ(f.extended_d(), vec({3, 1}));
  EXPECT_THROW(FramedDatum(fixtures::loops(1), vec({1}), weights({0}), vec({0})), InputError);
}

TEST(Framing, InfinityNameAvoidsClashes) {
  const Quiver q({"∞", "b"}, {{0, 1}});
  const FramedDatum f(q, vec({1, 1}), weights({0, 0}), vec({1, 0}));
  EXPECT_EQ(f.extended_quiver().vertex_name(2), "∞'");
}

// The symbolic comparisons must agree with slopes computed from the explicit
// stability on the framed quiver.
TEST(Framing, ComparisonsMatchExplicitStability) {
  const std::vector<std::pair<Quiver, std::pair<Stability, DimensionVector>>> cases{
      {fixtures::kronecker(2), {weights({1, 0}), vec({2, 3})}},
      {fixtures::kronecker(3), {weights({1, 0}), vec({2, 2})}},
      {fixtures::subspace(3), {weights({-1, 0, 0, 0}), vec({2, 1, 1, 1})}},
      {fixtures::two_cycle(), {weights({0, 0}), vec({2, 1})}},
  };
  for (const auto& [q, data] : cases) {
    const auto& [theta, d] = data;
    std::vector<int> ones(q.vertex_count(), 1);
    const FramedDatum f(q, d, theta, DimensionVector(ones));
    EXPECT_TRUE(f.extended_is_coprime());
    const Stability hat = f.explicit_hat_stability();
    const DimensionVector dh = f.extended_d();
    const Box box(d);
    for (const auto& e : box.elements()) {
      if (!e.is_zero()) {
        EXPECT_EQ(f.hat_le(e), compare_slopes(hat, f.embed(e), dh) <= 0) << to_string(e);
        EXPECT_EQ(f.hat_le(e), compare_slopes(theta, e, d) <= 0);
      }
      if (e != d) {
        EXPECT_EQ(f.hat_le_framed(e), compare_slopes(hat, f.hat(e), dh) <= 0) << to_string(e);
        if (!e.is_zero()) {
          EXPECT_EQ(f.hat_le_framed(e), compare_slopes(theta, e, d) < 0);
        }
      }
    }
  }
}

TEST(LocalQuiver, StableType) {
  const Quiver k = fixtures::kronecker(2);
  PolystableType xi{{vec({1, 1})}, {1}};
  const auto local = local_quiver(k, vec({2, 3}), xi);
  EXPECT_EQ(local.quiver.vertex_count(), 1u);
  EXPECT_EQ(local.quiver.arrows_between(0, 0), 1 - euler_form(k, vec({1, 1}), vec({1, 1})));
  EXPECT_EQ(local.d, vec({1}));
  EXPECT_EQ(local.n, vec({5}));
}

// Two points of P^1 with multiplicity r/2 each.  The arrow count
// delta_kl - <d^k, d^l> gives r/2 - 1 arrows between the two vertices and no
// loops: each summand is a rigid brick.
TEST(LocalQuiver, TwoPointsOnTheLine) {
  for (int r : {2, 4, 6}) {
    const Quiver q = fixtures::subspace(r);
    std::vector<int> first(static_cast<std::size_t>(r) + 1, 0);
    std::vector<int> second(first);
    first[0] = second[0] = 1;
    for (int i = 1; i <= r; ++i) (i <= r / 2 ? first : second)[static_cast<std::size_t>(i)] = 1;
    PolystableType xi{{DimensionVector(first), DimensionVector(second)}, {1, 1}};
    std::vector<int> n(static_cast<std::size_t>(r) + 1, 0);
    n[0] = 1;
    const auto local = local_quiver(q, DimensionVector(n), xi);
    EXPECT_EQ(local.quiver.arrows_between(0, 1), r / 2 - 1);
    EXPECT_EQ(local.quiver.arrows_between(1, 0), r / 2 - 1);
    EXPECT_EQ(local.quiver.arrows_between(0, 0), 0);
    EXPECT_EQ(local.d, vec({1, 1}));
    EXPECT_EQ(local.n, vec({1, 1}));
  }
}

TEST(LocalQuiver, InfeasibleType) {
  PolystableType xi{{vec({1}), vec({1})}, {1, 1}};
  EXPECT_THROW(local_quiver(fixtures::loops(0), vec({1}), xi), InfeasibleTypeError);
}

TEST(Counting, Examples) {
  EXPECT_EQ(r_points(Quiver({"x", "y"}, {}), vec({3, 2})), Poly(1));
  EXPECT_EQ(r_points(fixtures::loops(2), vec({3})), Poly::q_power(18));
  EXPECT_EQ(r_points(fixtures::two_cycle(), vec({2, 2})), Poly::q_power(8));
  EXPECT_EQ(gauge_ratio(fixtures::loops(0), vec({0})), RationalFunction(1));
  EXPECT_EQ(gauge_ratio(fixtures::loops(0), vec({1})), RationalFunction(Poly(1), Poly{-1, 1}));
  const Poly g2 = gl_order(2);
  EXPECT_EQ(gauge_ratio(fixtures::two_cycle(), vec({2, 2})), RationalFunction(Poly::q_power(8), g2 * g2));
}

TEST(Io, ParsesAndRoundTrips) {
  const std::string text =
      "# comment\n"
      "vertex a\n"
      "vertex b   # trailing comment\n"
      "arrow a b α\n"
      "arrow b a\n"
      "d 2 2\n"
      "n 1 0\n"
      "theta 1/2 -3\n"
      "part 2 1 1\n";
  const QuiverFile f = parse_quiver(text);
  EXPECT_EQ(f.quiver.vertex_count(), 2u);
  EXPECT_EQ(f.quiver.arrow(0).name, "α");
  EXPECT_EQ(*f.d, vec({2, 2}));
  EXPECT_EQ(*f.n, vec({1, 0}));
  EXPECT_EQ((*f.theta)[0], Rational(1, 2));
  EXPECT_EQ(f.xi.multiplicities, std::vector<int>{2});
  const QuiverFile again = parse_quiver(format_quiver(f.quiver, f.d, f.n, f.theta));
  EXPECT_EQ(format_quiver(again.quiver, again.d, again.n, again.theta), format_quiver(f.quiver, f.d, f.n, f.theta));
  EXPECT_TRUE(parse_quiver("vertex x\n").stability().is_trivial());
}

namespace {

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST(Io, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("vertex a\nbogus 1\n"), std::make_pair(std::size_t{2}, std::size_t{1}));
  EXPECT_EQ(error_position("vertex a\narrow a  c\n"), std::make_pair(std::size_t{2}, std::size_t{10}));
  EXPECT_EQ(error_position("vertex a\nvertex b\nd 1 x\n"), std::make_pair(std::size_t{3}, std::size_t{5}));
  EXPECT_EQ(error_position("vertex a\nd 1 2\n"), std::make_pair(std::size_t{2}, std::size_t{5}));
  EXPECT_EQ(error_position("vertex a\nd 1\nd 1\n"), std::make_pair(std::size_t{3}, std::size_t{1}));
  EXPECT_EQ(error_position("vertex a\nvertex a\n"), std::make_pair(std::size_t{2}, std::size_t{8}));
  EXPECT_EQ(error_position("vertex a\ntheta 1/0\n"), std::make_pair(std::size_t{2}, std::size_t{7}));
  EXPECT_EQ(error_position("# nothing\n"), std::make_pair(std::size_t{2}, std::size_t{1}));
  EXPECT_EQ(error_position("vertex a\nd 1\nvertex b\n"), std::make_pair(std::size_t{3}, std::size_t{1}));
  EXPECT_EQ(error_position("vertex a\nd -1\n"), std::make_pair(std::size_t{2}, std::size_t{3}));
}
