#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qmod;

TEST(Suite, RandomInstancesAgree) {
  const auto report = run_suite(random_instances(80, 7));
  for (const auto& r : report.instances)
    for (const auto& f : r.failures) ADD_FAILURE() << r.description << ": " << f;
  EXPECT_EQ(report.failed(), 0u);
  EXPECT_GT(report.count_if([](const auto& r) { return r.theta_zero; }), 0u);
  EXPECT_GT(report.count_if([](const auto& r) { return r.coprime; }), 0u);
}

TEST(Suite, InstancesAreReproducible) {
  const auto a = random_instances(10, 99);
  const auto b = random_instances(10, 99);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(describe(a[k]), describe(b[k]));
}

TEST(Suite, ReportDoesNotDependOnThreads) {
  const auto instances = random_instances(16, 3);
  const auto one = run_suite(instances, 1);
  const auto many = run_suite(instances, 4);
  for (std::size_t k = 0; k < instances.size(); ++k) {
    EXPECT_EQ(one.instances[k].poincare, many.instances[k].poincare);
    EXPECT_EQ(one.instances[k].cells, many.instances[k].cells);
  }
}

TEST(Suite, SeriesIdentity) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const Quiver q = random_quiver(rng);
    const DimensionVector d = random_nonzero_vector(rng, q.vertex_count(), 3);
    EXPECT_EQ(check_series_identity(q, d, 12), "") << to_string(d);
  }
}
