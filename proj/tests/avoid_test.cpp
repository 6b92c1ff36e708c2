#include <algorithm>

#include "gtest/gtest.h"
#include "tfc/samplers.hpp"
#include "tfc/avoid.hpp"
#include "tfc/generate.hpp"
#include "tfc/good.hpp"

namespace tfc {
namespace {

using testing::oracle_avoiding;
using testing::Rng;

Mask M(std::initializer_list<int> cs) {
  Mask m = 0;
  for (int c : cs) m |= static_cast<Mask>(1u << (c - 1));
  return m;
}

TEST(MaskTest, Helpers) {
  EXPECT_EQ(mask_of({1, 3, 14}), M({1, 3, 14}));
  EXPECT_EQ(colors_of(M({2, 5})), (ColorSet{2, 5}));
  EXPECT_EQ(lowest(M({2, 5, 9}), 2), M({2, 5}));
  EXPECT_EQ(highest(M({2, 5, 9}), 2), M({5, 9}));
  EXPECT_EQ(mask_str(M({1, 2})), "{1,2}");
  int count = 0;
  for_each_subset(M({1, 2, 3, 4}), 2, [&](Mask) { return ++count, false; });
  EXPECT_EQ(count, 6);
  Mask first = 0;
  for_each_subset(M({3, 7, 9}), 2, [&](Mask s) { return first = s, true; });
  EXPECT_EQ(first, M({3, 7}));
}

TEST(VerifyAvoidingTest, Clauses) {
  Graph p = make_path(2);
  std::vector<Mask> F{M({1}), M({2})};
  EXPECT_TRUE(verify_avoiding(p, F, {M({2, 3}), M({1, 4})}));
  EXPECT_FALSE(verify_avoiding(p, F, {M({1, 3}), M({4})}));  // f(v) meets F(v)
  EXPECT_FALSE(verify_avoiding(p, F, {M({3}), M({3})}));     // shared on an edge
}

// Completion engine against exhaustive assignment on small instances.
TEST(CompletionTest, MatchesBruteForce) {
  Rng rng(11);
  int agree_yes = 0;
  for (int it = 0; it < 150; ++it) {
    int n = 2 + it % 3;
    Graph g = it % 2 ? make_path(n) : make_cycle(std::max(n, 3));
    n = g.n();
    Completion c(n);
    std::vector<Mask> pool(n);
    for (int v = 0; v < n; ++v) {
      c.forbid[v] = testing::rnd(rng, 8 + rng() % 3);
      pool[v] = static_cast<Mask>(kFull14 & ~c.forbid[v]);
      c.size[v] = 1 + rng() % 3;
      if (rng() % 4 == 0) c.pin[v] = testing::pick(rng, pool[v], 1);
    }
    // Brute force: all assignments of size-s subsets of the pools.
    std::vector<std::vector<Mask>> opts(n);
    for (int v = 0; v < n; ++v)
      for_each_subset(pool[v], c.size[v], [&](Mask s) {
        if ((s & c.pin[v]) == c.pin[v]) opts[v].push_back(s);
        return false;
      });
    bool exists = false;
    std::vector<Mask> f(n);
    auto rec = [&](auto&& self, int v) -> void {
      if (exists) return;
      if (v == n) {
        exists = true;
        return;
      }
      for (Mask s : opts[v]) {
        bool ok = true;
        for (int w : g.nbrs(v))
          if (w < v && (f[w] & s)) ok = false;
        if (!ok) continue;
        f[v] = s;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
    bool got = complete_avoiding(g, c);
    ASSERT_EQ(got, exists) << "iteration " << it;
    if (got) {
      ++agree_yes;
      EXPECT_TRUE(oracle_avoiding(g, c.forbid, c.value));
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(__builtin_popcount(c.value[v]), c.size[v]);
        EXPECT_EQ(c.value[v] & c.pin[v], c.pin[v]);
      }
    }
  }
  EXPECT_GT(agree_yes, 20);
}

TEST(CompletionTest, FixedAndIgnoredVertices) {
  Graph p = make_path(3);
  Completion c(3);
  c.fixed[0] = 1;
  c.value[0] = M({1, 2, 3});
  c.size[0] = 3;
  c.size[1] = 11;
  c.size[2] = -1;
  ASSERT_TRUE(complete_avoiding(p, c));
  EXPECT_EQ(c.value[1], static_cast<Mask>(kFull14 & ~M({1, 2, 3})));
  EXPECT_EQ(c.value[2], 0);
}

TEST(OddPathTest, Examples) {
  auto f = color_odd_path({0, 0, 0}, 0, 0);
  EXPECT_EQ(popc(f[0]), 8);
  EXPECT_EQ(popc(f[1]), 6);
  EXPECT_EQ(popc(f[2]), 8);
  std::vector<Mask> F{M({1, 2, 3}), M({4, 5}), M({6, 7, 8})};
  f = color_odd_path(F, 0, 0);
  EXPECT_TRUE(oracle_avoiding(make_path(3), F, f));
  std::vector<Mask> F5{M({1, 2, 3, 4, 5}), M({1, 2}), M({6, 7}), M({8}), 0};
  f = color_odd_path(F5, 2, 0);
  EXPECT_EQ(popc(f[0]), 6);
  EXPECT_TRUE(oracle_avoiding(make_path(5), F5, f));
}

TEST(OddPathTest, PreconditionClauses) {
  EXPECT_THROW(color_odd_path({M({1, 2, 3, 4}), 0, 0}, 0, 0), AvoidanceError);
  EXPECT_THROW(color_odd_path({M({1}), M({1}), 0}, 0, 0), AvoidanceError);
  EXPECT_THROW(color_odd_path({0, M({1, 2, 3}), 0}, 0, 0), AvoidanceError);
  EXPECT_THROW(color_odd_path({0, 0}, 0, 0), AvoidanceError);
}

TEST(OddPathTest, RandomSweep) {
  Rng rng(5);
  for (int len = 3; len <= 11; len += 2)
    for (int it = 0; it < 60; ++it) {
      int r1 = rng() % 3, rend = rng() % 3;
      auto F = testing::sample_odd_path(rng, len, r1, rend);
      auto f = color_odd_path(F, r1, rend);
      ASSERT_TRUE(oracle_avoiding(make_path(len), F, f));
      EXPECT_EQ(popc(f[0]), 8 - r1);
      EXPECT_EQ(popc(f[len - 1]), 8 - rend);
      for (int i = 1; i + 1 < len; ++i) EXPECT_EQ(popc(f[i]), 6);
    }
}

TEST(EvenPathTest, Examples) {
  auto r = color_even_path({M({1, 2, 3, 4}), M({5, 6})}, 1);
  EXPECT_EQ(popc(r.f[0]), 7);
  EXPECT_EQ(popc(r.f[1]), 7);
  EXPECT_EQ(r.f[0] & r.f[1], 0);
  std::vector<Mask> F12{M({1}), M({2}), 0, M({3})};
  r = color_even_path(F12, 12);
  EXPECT_TRUE(oracle_avoiding(make_path(4), F12, r.f));
  std::vector<Mask> F7{M({1, 2}), M({2, 3}), M({4}), M({5}), M({6}), M({7})};
  r = color_even_path(F7, 7);
  std::vector<int> sizes;
  for (Mask m : r.f) sizes.push_back(popc(m));
  EXPECT_EQ(sizes, (std::vector<int>{7, 6, 6, 6, 6, 7}));
}

TEST(EvenPathTest, HypothesisErrors) {
  EXPECT_THROW(color_even_path({M({1}), M({1})}, 1), AvoidanceError);
  EXPECT_THROW(color_even_path({M({1, 2, 3, 4, 5}), 0}), AvoidanceError);
  EXPECT_THROW(color_even_path({0, 0, 0}), AvoidanceError);
}

class EvenStatementTest : public ::testing::TestWithParam<int> {};

TEST_P(EvenStatementTest, SamplerSweep) {
  int s = GetParam();
  Rng rng(100 + s);
  for (int it = 0; it < 40; ++it) {
    auto F = testing::path_F(testing::sample_even_statement(rng, s));
    ASSERT_TRUE(even_statement_holds(F, s)) << "sampler broke statement " << s;
    auto r = color_even_path(F, s);
    int n = static_cast<int>(F.size());
    ASSERT_TRUE(oracle_avoiding(make_path(n), F, r.f));
    for (int i = 0; i < n; ++i) EXPECT_EQ(popc(r.f[i]), (i == 0 || i == n - 1) ? 7 : 6);
  }
}

INSTANTIATE_TEST_SUITE_P(AllStatements, EvenStatementTest, ::testing::Range(1, 13));

TEST(HTest, SizesOnMinimalF) {
  Graph h = make_H(4, 4);
  auto f = color_H(4, 4, std::vector<Mask>(h.n(), 0));
  ASSERT_TRUE(oracle_avoiding(h, std::vector<Mask>(h.n(), 0), f));
  for (int v = 0; v < h.n(); ++v) EXPECT_EQ(popc(f[v]), 8 - h.deg(v) - (v == 5 ? 1 : 0)) << v;
}

TEST(HTest, Precondition) {
  Graph h = make_H(4, 4);
  std::vector<Mask> F(h.n(), 0);
  F[6] = M({1});
  F[7] = M({1});
  EXPECT_THROW(color_H(4, 4, F), AvoidanceError);
}

TEST(KernelTest, Examples) {
  Digraph arc(2);
  arc.add_arc(0, 1);
  EXPECT_EQ(find_kernel(arc), (std::vector<int>{1}));
  Digraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_arc(i, (i + 1) % 4);
  auto k = find_kernel(c4);
  EXPECT_TRUE(k == (std::vector<int>{0, 2}) || k == (std::vector<int>{1, 3}));
  Digraph c3(3);
  for (int i = 0; i < 3; ++i) c3.add_arc(i, (i + 1) % 3);
  EXPECT_THROW(find_kernel(c3), AvoidanceError);
}

TEST(KernelTest, BruteForceCrossCheck) {
  Rng rng(3);
  int with_odd = 0;
  for (int it = 0; it < 300; ++it) {
    int n = 2 + rng() % 9;
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 100 < 25) d.add_arc(u, v);
    bool odd = testing::brute_odd_dicycle(d);
    with_odd += odd;
    try {
      auto k = find_kernel(d);
      EXPECT_TRUE(is_kernel(d, k));
      EXPECT_TRUE(testing::brute_has_kernel(d));
    } catch (const AvoidanceError&) {
      EXPECT_TRUE(odd) << "threw on a digraph without odd directed cycles";
    }
    if (!odd) EXPECT_TRUE(testing::brute_has_kernel(d));
  }
  EXPECT_GT(with_odd, 10);
}

TEST(KernelListTest, Definition) {
  Digraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_arc(i, (i + 1) % 4);
  auto C = kernel_list_color(c4, {1, 1, 1, 1}, std::vector<Mask>(4, M({1, 2})));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(popc(C[i]), 1);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(C[i] & C[(i + 1) % 4], 0);
  EXPECT_NE(C[0], C[1]);

  Rng rng(9);
  for (int it = 0; it < 100; ++it) {
    int n = 3 + rng() % 6;
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) d.add_arc(u, v);  // acyclic
    std::vector<int> r(n, 2);
    std::vector<Mask> S(n);
    for (int v = 0; v < n; ++v) S[v] = testing::rnd(rng, std::min(14, 2 + 2 * d.outdeg(v)));
    auto C = kernel_list_color(d, r, S);
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(popc(C[v]), 2);
      EXPECT_EQ(C[v] & ~S[v], 0);
    }
    for (auto [u, v] : d.arcs()) EXPECT_EQ(C[u] & C[v], 0);
  }
  EXPECT_THROW(kernel_list_color(c4, {2, 2, 2, 2}, std::vector<Mask>(4, M({1, 2}))), AvoidanceError);
}

TEST(ObeysTest, Clauses) {
  Graph p = make_path(3);
  EXPECT_TRUE(obeys(p, {0, 0, 0}, {}));
  EXPECT_FALSE(obeys(p, {M({1, 2, 3, 4}), M({1, 2}), 0}, {}));
  Graph p4 = make_path(6);
  std::vector<Mask> F{0, 0, M({1, 2}), M({1, 2}), 0, 0};
  EXPECT_TRUE(obeys(p4, F, {}));
  EXPECT_FALSE(obeys(p4, F, {{2, 3}}));
  EXPECT_THROW(obeys(p4, F, {{0, 1}}), AvoidanceError);          // saturates support vertex 1
  EXPECT_THROW(obeys(p4, F, {{1, 2}, {2, 3}}), AvoidanceError);  // not a matching
}

using testing::obedient_F;

void check_pair(const Graph& g, const std::vector<Mask>& F, const TractablePair& p) {
  ASSERT_TRUE(oracle_avoiding(g, F, p.f1));
  ASSERT_TRUE(oracle_avoiding(g, F, p.f2));
  for (int v = 0; v < g.n(); ++v) {
    bool inI = std::count(p.cert.I.begin(), p.cert.I.end(), v) > 0;
    EXPECT_EQ(popc(p.f1[v]) + popc(p.f2[v]), 16 - 2 * g.deg(v) - (inI ? 2 : 0)) << "vertex " << v;
    if (inI) EXPECT_EQ(g.deg(v), 3);
  }
  EXPECT_TRUE(is_independent(g, p.cert.I));
}

TEST(TractableTest, SuperH) {
  Graph g = make_superH(0);
  Certified c = certify(g);
  std::vector<int> want{superH_index(0, 3), superH_index(0, 6)};
  EXPECT_EQ(c.cert.I, want);
  EXPECT_TRUE(c.cert.M.empty());
  Rng rng(1);
  for (int it = 0; it < 30; ++it) {
    auto F = obedient_F(rng, g, c.cert.M);
    check_pair(g, F, tractable_pair(g, c, F));
  }
}

TEST(TractableTest, SpiderWithLegsOfTwo) {
  Graph g = make_spider({2, 2, 2});
  Certified c = certify(g);
  EXPECT_EQ(c.cert.I, (std::vector<int>{0}));
  Rng rng(2);
  for (int it = 0; it < 30; ++it) {
    auto F = obedient_F(rng, g, c.cert.M);
    auto p = tractable_pair(g, c, F);
    check_pair(g, F, p);
    EXPECT_EQ(popc(p.f1[0]) + popc(p.f2[0]), 8);
  }
}

TEST(TractableTest, CycleWithLeaves) {
  Graph g = make_cycle(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, g.add_vertex());
  Certified c = certify(g);
  EXPECT_TRUE(c.cert.M.empty());
  EXPECT_TRUE(c.cert.I.empty());
  EXPECT_EQ(plan_steps(c), (std::vector<std::string>{"cycle_leaves"}));
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    std::vector<Mask> F(16, 0);
    for (int i = 8; i < 16; ++i) F[i] = testing::rnd(rng, 4);
    check_pair(g, F, tractable_pair(g, c, F));
  }
}

TEST(TractableTest, Rejections) {
  EXPECT_THROW(certify(make_path(4)), AvoidanceError);
  EXPECT_THROW(certify(make_H(4, 4)), AvoidanceError);
  EXPECT_THROW(certify(make_cycle(5)), AvoidanceError);  // not bipartite
  Graph g = make_spider({1, 1, 1});
  Certified c = certify(g);
  std::vector<Mask> F{M({1}), 0, 0, 0};  // degree-3 vertex with nonempty F
  EXPECT_THROW(tractable_pair(g, c, F), AvoidanceError);
}

// Random good graphs: every plan must produce a verified pair.
TEST(TractableTest, RandomGoodGraphs) {
  Rng rng(77);
  int graphs = 0;
  while (graphs < 40) {
    Graph g = testing::sample_bipartite_subcubic(rng, 5 + rng() % 16);
    if (!is_good_graph(g).good()) continue;
    Certified c;
    try {
      c = certify(g);
    } catch (const AvoidanceError&) {
      continue;
    }
    ++graphs;
    for (int it = 0; it < 5; ++it) {
      auto F = obedient_F(rng, g, c.cert.M);
      check_pair(g, F, tractable_pair(g, c, F));
    }
  }
}

}  // namespace
}  // namespace tfc
