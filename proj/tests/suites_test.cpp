#include <gtest/gtest.h>

#include "tfc/avoid.hpp"
#include "tfc/generate.hpp"
#include "tfc/samplers.hpp"
#include "tfc/suites.hpp"

namespace tfc {
namespace {

using testing::Rng;

TEST(SamplerTest, BruteAlpha) {
  EXPECT_EQ(testing::brute_alpha(make_cycle(5)), 2);
  EXPECT_EQ(testing::brute_alpha(make_petersen(5, 2)), 4);
  EXPECT_EQ(testing::brute_alpha(make_petersen(7, 2)), 5);
  EXPECT_EQ(testing::brute_alpha(make_path(7)), 4);
}

TEST(SamplerTest, HInputsMeetHypotheses) {
  Rng rng(4);
  auto any = [](const std::vector<Mask>& F) {
    std::vector<Mask> rev(F.rbegin(), F.rend());
    for (int s = 1; s <= 12; ++s)
      if (even_statement_holds(F, s) || even_statement_holds(rev, s)) return true;
    return false;
  };
  for (int it = 0; it < 20; ++it) {
    Graph h = make_H(6, 4);
    auto F = testing::sample_H_F(rng, 6, 4, +any);
    for (int v = 0; v < h.n(); ++v) EXPECT_LE(popc(F[v]), 6 - 2 * h.deg(v));
    EXPECT_EQ(F[8] & F[9], 0);
  }
}

TEST(SamplerTest, EvenDigraphs) {
  Rng rng(8);
  for (int it = 0; it < 50; ++it) EXPECT_FALSE(testing::brute_odd_dicycle(testing::sample_even_digraph(rng, 9)));
}

TEST(SuiteTest, SmallRunsPass) {
  for (const auto& name : suite_names()) {
    SuiteResult r = run_suite(name, 3, 11);
    EXPECT_TRUE(r.ok()) << name << (r.failures.empty() ? "" : ": " + r.failures.front());
  }
}

TEST(SuiteTest, WorkersMergeByIndex) {
  SuiteResult a = run_suite("kernel", 12, 3, 1), b = run_suite("kernel", 12, 3, 3);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(SuiteTest, Arguments) {
  EXPECT_THROW(run_suite("nope", 1, 0), std::invalid_argument);
  EXPECT_THROW(run_suite("kernel", 0, 0), std::invalid_argument);
}

TEST(SuiteTest, GoodInstances) {
  auto gs = good_instances(10, 1);
  ASSERT_EQ(gs.size(), 10u);
  for (const auto& g : gs) {
    EXPECT_GE(g.n(), 4);
    EXPECT_LE(g.n(), 18);
    EXPECT_TRUE(decompose_connectivity(g, false).cut_vertices.empty());
  }
}

}  // namespace
}  // namespace tfc
