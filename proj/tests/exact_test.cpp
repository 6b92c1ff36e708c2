#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "tfc/coloring.hpp"
#include "tfc/exact.hpp"
#include "tfc/generate.hpp"

namespace tfc {
namespace {

// Oracle: maximal independent sets by scanning every subset.
std::vector<std::vector<int>> brute_mis(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    bool indep = true, maximal = true;
    for (int u = 0; u < n && indep; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((m >> u & 1) && (m >> v & 1) && g.has_edge(u, v)) indep = false;
    if (!indep) continue;
    for (int v = 0; v < n && maximal; ++v) {
      if (m >> v & 1) continue;
      bool blocked = false;
      for (int w : g.nbrs(v))
        if (m >> w & 1) blocked = true;
      if (!blocked) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

TEST(MisTest, SmallGraphs) {
  EXPECT_EQ(maximal_independent_sets(complete(2)), (std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(maximal_independent_sets(make_cycle(4)), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  auto c5 = maximal_independent_sets(make_cycle(5));
  EXPECT_EQ(c5.size(), 5u);
  for (auto& s : c5) EXPECT_EQ(s.size(), 2u);
}

TEST(MisTest, MatchesSubsetScan) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_tf_subcubic(6 + seed % 9, seed);
    EXPECT_EQ(maximal_independent_sets(g), brute_mis(g)) << "seed " << seed;
  }
}

TEST(MisTest, CapGuard) {
  EXPECT_THROW(maximal_independent_sets(make_cycle(12), 3), std::length_error);
}

TEST(ChiFTest, FrozenValues) {
  EXPECT_EQ(to_string(chi_f_exact(complete(2)).value), "2/1");
  EXPECT_EQ(to_string(chi_f_exact(make_cycle(5)).value), "5/2");
  EXPECT_EQ(to_string(chi_f_exact(make_cycle(7)).value), "7/3");
  EXPECT_EQ(to_string(chi_f_exact(make_petersen(7, 2)).value), "14/5");
  EXPECT_EQ(to_string(chi_f_exact(make_petersen(5, 2)).value), "5/2");
  EXPECT_EQ(to_string(chi_f_exact(complete(4)).value), "4/1");
}

TEST(ChiFTest, CertificatesAndLowerBounds) {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_tf_subcubic(4 + seed % 11, seed);
    RationalLP lp = chi_f_exact(g);
    std::string why;
    EXPECT_TRUE(check_lp_certificate(g, lp, &why)) << why;
    EXPECT_GE(lp.value, Rational(g.n(), independence_number(g)));
    if (g.num_edges() > 0) EXPECT_GE(lp.value, 2);
  }
}

TEST(ChiFTest, CertificateCheckerRejectsTampering) {
  Graph g = make_cycle(5);
  RationalLP lp = chi_f_exact(g);
  lp.dual[0] += Rational(1, 2);
  EXPECT_FALSE(check_lp_certificate(g, lp));
  lp = chi_f_exact(g);
  lp.weights.pop_back();
  EXPECT_FALSE(check_lp_certificate(g, lp));
}

TEST(SetColoringTest, Verify) {
  Graph c5 = make_cycle(5);
  SetColoring f{5, 2, {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}};
  EXPECT_TRUE(verify_set_coloring(c5, f, 5, 2));
  SetColoring k2{8, 3, {{1, 2, 3}, {1, 2, 3}}};
  Verdict v = verify_set_coloring(complete(2), k2, 8, 3);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reasons.size(), 1u);
  SetColoring bad{5, 2, {{1, 2}, {3, 4}, {1, 6}, {2, 3}, {4, 5}}};
  EXPECT_FALSE(verify_set_coloring(c5, bad, 5, 2));
}

TEST(SetColoringTest, Uplus) {
  SetColoring f{3, 1, {{1}}}, g{3, 1, {{1}}};
  EXPECT_EQ(uplus(f, g).sets[0], (ColorSet{1, 4}));
  Graph p = make_path(4);
  SetColoring a{4, 2, {{1, 2}, {3, 4}, {1, 2}, {3, 4}}};
  SetColoring b{2, 1, {{1}, {2}, {1}, {2}}};
  SetColoring c{3, 1, {{3}, {1}, {2}, {1}}};
  SetColoring l = uplus(uplus(a, b), c), r = uplus(a, uplus(b, c));
  EXPECT_EQ(l.sets, r.sets);
  EXPECT_TRUE(verify_set_coloring(p, l, 9, 4));
}

TEST(SetColoringTest, ScaleAndTrim) {
  SetColoring f{8, 3, {{1, 2, 3}, {4, 5, 6}}};
  SetColoring s = scale(f, 20);
  EXPECT_EQ(s.a, 160);
  EXPECT_EQ(s.sets[1].front(), 61);
  EXPECT_TRUE(verify_set_coloring(make_path(2), s, 160, 60));
  EXPECT_EQ(trim(s, 5).sets[0], (ColorSet{1, 2, 3, 4, 5}));
}

TEST(SearchTest, Basic) {
  auto r5 = search_ab_coloring(make_R(5), 8, 3);
  ASSERT_TRUE(r5);
  EXPECT_TRUE(verify_set_coloring(make_R(5), *r5, 8, 3));
  EXPECT_EQ(r5->sets[0].size(), 3u);
  EXPECT_FALSE(search_ab_coloring(complete(4), 8, 3));
  auto c5 = search_ab_coloring(make_cycle(5), 5, 2);
  ASSERT_TRUE(c5);
  EXPECT_FALSE(search_ab_coloring(make_cycle(5), 9, 4));
}

TEST(SearchTest, Constraints) {
  LInfo info;
  Graph l1 = make_L({1}, &info);
  SearchConstraints c;
  c.pairs.push_back({info.w, info.y, 0, 0});
  c.pairs.push_back({info.x, info.z, 0, 0});
  auto f = search_ab_coloring(l1, 8, 3, &c);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_set_coloring(l1, *f, 8, 3));
  EXPECT_TRUE(disjoint(f->sets[info.w], f->sets[info.y]));
  EXPECT_TRUE(disjoint(f->sets[info.x], f->sets[info.z]));

  SearchConstraints pin;
  pin.required.assign(3, {});
  pin.forbidden.assign(3, {});
  pin.required[1] = {2};
  pin.forbidden[0] = {1};
  auto p = search_ab_coloring(make_path(3), 3, 1, &pin);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->sets[1], (ColorSet{2}));
  EXPECT_EQ(p->sets[0], (ColorSet{3}));
}

TEST(SearchTest, NodeLimit) {
  SearchConstraints c;
  c.node_limit = 5;
  EXPECT_THROW(search_ab_coloring(make_petersen(7, 2), 14, 5, &c), std::runtime_error);
}

TEST(JsonTest, ColoringRoundTrip) {
  SetColoring f{5, 2, {{1, 2}, {3, 4}}};
  SetColoring g = coloring_from_json(coloring_to_json(f));
  EXPECT_EQ(g.a, 5);
  EXPECT_EQ(g.b, 2);
  EXPECT_EQ(g.sets, f.sets);
}

}  // namespace
}  // namespace tfc
