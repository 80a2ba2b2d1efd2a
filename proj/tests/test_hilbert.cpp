#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qmod;
using fixtures::vec;

TEST(Multipartition, Basics) {
  const Multipartition m({{2, 1}, {1, 0}});
  EXPECT_EQ(m.weight(), 4);
  EXPECT_EQ(m.part(0, 1), 2);
  EXPECT_EQ(m.shape(), vec({2, 2}));
  EXPECT_EQ(to_string(m), "(2,1 | 1,0)");
  EXPECT_THROW(Multipartition({{0, 1}}), InputError);
}

TEST(HilbertCriterion, Examples) {
  EXPECT_FALSE(hilb_nonempty(fixtures::loop_and_arrow(), vec({1, 0}), vec({0, 1})));
  EXPECT_TRUE(hilb_nonempty(fixtures::two_cycle(), vec({2, 2}), vec({2, 2})));
  EXPECT_TRUE(hilb_nonempty(fixtures::two_cycle(), vec({3, 1}), vec({3, 1})));
  // n >= d at every vertex
  EXPECT_TRUE(hilb_nonempty(fixtures::kronecker(3), vec({2, 2}), vec({2, 2})));
  // n = 0 cannot generate anything
  EXPECT_FALSE(hilb_nonempty(fixtures::loops(1), vec({1}), vec({0})));
  // two loops and n = 1 reach every d
  EXPECT_TRUE(hilb_nonempty(fixtures::loops(2), vec({5}), vec({1})));
  // a single loop with n = 1 is the Hilbert scheme of points on the line
  EXPECT_TRUE(hilb_nonempty(fixtures::loops(1), vec({4}), vec({1})));
  EXPECT_FALSE(hilb_nonempty(fixtures::loops(0), vec({2}), vec({1})));
}

TEST(Multipartitions, SmallCases) {
  const auto zero = multipartitions(fixtures::two_cycle(), vec({0, 0}), vec({1, 1}));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].weight(), 0);
  const auto loop = multipartitions(fixtures::loops(3), vec({1}), vec({1}));
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(to_string(loop[0]), "(0)");
  EXPECT_TRUE(multipartitions(fixtures::loop_and_arrow(), vec({1, 0}), vec({0, 1})).empty());
  EXPECT_EQ(hilb_poincare_multipartitions(fixtures::loop_and_arrow(), vec({1, 0}), vec({0, 1})), Poly());
  EXPECT_EQ(hilb_poincare_multipartitions(fixtures::loops(4), vec({1}), vec({1})), Poly::q_power(4));
}

TEST(Multipartitions, TwoCycleTable) {
  const auto s = multipartitions(fixtures::two_cycle(), vec({2, 2}), vec({2, 2}));
  std::vector<std::string> got;
  for (const auto& m : s) got.push_back(to_string(m));
  const std::vector<std::string> expected{
      "(0,0 | 0,0)", "(0,0 | 1,0)", "(0,0 | 1,1)", "(0,0 | 2,0)", "(0,0 | 2,1)", "(0,0 | 2,2)", "(1,0 | 0,0)",
      "(1,0 | 1,0)", "(1,0 | 1,1)", "(1,0 | 2,0)", "(1,0 | 2,1)", "(1,0 | 2,2)", "(1,1 | 0,0)", "(1,1 | 1,0)",
      "(1,1 | 1,1)", "(1,1 | 2,0)", "(1,1 | 2,1)", "(1,1 | 2,2)", "(2,0 | 0,0)", "(2,0 | 1,0)", "(2,0 | 1,1)",
      "(2,1 | 0,0)", "(2,1 | 1,0)", "(2,1 | 1,1)", "(2,2 | 0,0)", "(2,2 | 1,0)", "(2,2 | 1,1)"};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(hilb_poincare_multipartitions(fixtures::two_cycle(), vec({2, 2}), vec({2, 2})), fixtures::table1_poincare());
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(hilb_part_bound(fixtures::two_cycle(), vec({2, 2}), vec({2, 2}), i), 2);
}

// Hilbert scheme of d points on the affine line: a single point for every d.
TEST(Multipartitions, OneLoop) {
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(hilb_poincare_multipartitions(fixtures::loops(1), vec({d}), vec({1})), Poly::q_power(static_cast<std::size_t>(d)));
  }
}

// Hilbert schemes of an m-loop quiver with n = 1 (non-commutative Hilbert
// schemes): Poincare polynomials agree with the recursion engine.
TEST(Multipartitions, MatchRecursionOnLoopQuivers) {
  for (int m = 1; m <= 3; ++m)
    for (int d = 1; d <= 4; ++d)
      for (int n = 1; n <= 2; ++n) {
        const Quiver q = fixtures::loops(m);
        EXPECT_EQ(hilb_poincare_multipartitions(q, vec({d}), vec({n})),
                  smooth_model_poincare_recursion(q, fixtures::weights({0}), vec({d}), vec({n})))
            << m << " " << d << " " << n;
      }
}
