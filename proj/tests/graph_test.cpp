#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "tfc/generate.hpp"
#include "tfc/graph.hpp"
#include "tfc/patterns.hpp"

namespace tfc {
namespace {

bool brute_triangle_free(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;
  return true;
}

TEST(GraphTest, RejectsLoopsAndParallelEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(GraphTest, Recognizers) {
  EXPECT_FALSE(is_triangle_free(make_cycle(3)));
  EXPECT_TRUE(is_triangle_free(make_cycle(5)));
  Graph p72 = make_petersen(7, 2);
  EXPECT_TRUE(is_triangle_free(p72));
  EXPECT_EQ(is_triangle_free(p72), brute_triangle_free(p72));
  EXPECT_TRUE(is_subcubic(p72));
  Graph k4(4), k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (j < 4) k4.add_edge(i, j);
      k5.add_edge(i, j);
    }
  EXPECT_TRUE(is_subcubic(k4));
  EXPECT_FALSE(is_subcubic(k5));
  EXPECT_TRUE(find_pattern(make_cycle(6), PatternKind::K3).empty());
  EXPECT_EQ(find_pattern(k4, PatternKind::K3).size(), 4u);
}

TEST(GraphTest, PetersenIndependenceNumber) {
  EXPECT_EQ(independence_number(make_petersen(7, 2)), 5);
  EXPECT_EQ(independence_number(make_petersen(5, 2)), 4);
  EXPECT_EQ(independence_number(make_cycle(7)), 3);
}

TEST(ConnectivityTest, Components) {
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(decompose_connectivity(g).components.size(), 2u);
}

TEST(ConnectivityTest, PathBlocks) {
  auto c = decompose_connectivity(make_path(5));
  EXPECT_EQ(c.blocks.size(), 4u);
  EXPECT_EQ(c.cut_vertices, (std::vector<int>{1, 2, 3}));
}

// Brute force: non-adjacent pairs whose removal disconnects the block.
std::set<std::pair<int, int>> brute_two_cuts(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      if (components(g.without({u, v})).size() > 1) out.insert({u, v});
    }
  return out;
}

TEST(ConnectivityTest, ChordedHexagon) {
  Graph g = make_cycle(6);
  g.add_edge(0, 3);
  auto c = decompose_connectivity(g);
  EXPECT_EQ(c.blocks.size(), 1u);
  std::set<std::pair<int, int>> got;
  for (const auto& t : c.two_cuts) got.insert({t.u, t.v});
  EXPECT_EQ(got.count({0, 3}), 0u);
  EXPECT_EQ(got, brute_two_cuts(g));
}

TEST(ConnectivityTest, BlocksReassemble) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_tf_subcubic(4 + seed % 17, seed);
    auto c = decompose_connectivity(g);
    std::set<Edge> all;
    for (const auto& b : c.blocks)
      for (auto e : b.edges) EXPECT_TRUE(all.insert(e).second);
    auto ge = g.edges();
    EXPECT_EQ(all, std::set<Edge>(ge.begin(), ge.end()));
    if (c.blocks.size() == 1 && g.n() >= 4) {
      std::set<std::pair<int, int>> got;
      for (const auto& t : c.two_cuts) got.insert({t.u, t.v});
      EXPECT_EQ(got, brute_two_cuts(g));
    }
  }
}

TEST(GenerateTest, NamedFamilies) {
  Graph r0 = make_R(0);
  EXPECT_EQ(r0.n(), 7);
  EXPECT_EQ(r0.num_edges(), 9);
  EXPECT_EQ(make_L({1}).n(), 8);
  Graph h = make_H(4, 4);
  EXPECT_EQ(h.n(), 8);
  EXPECT_EQ(h.num_edges(), 7);
  EXPECT_THROW(make_H(5, 4), std::invalid_argument);
  EXPECT_THROW(make_L({3}), std::invalid_argument);
  for (int i = 0; i <= 7; ++i) {
    EXPECT_TRUE(is_triangle_free(make_R(i))) << i;
    EXPECT_TRUE(is_subcubic(make_R(i))) << i;
  }
  // R_5 and R_6 are cubic, R_3 has a single vertex of degree two.
  for (int i : {5, 6}) {
    Graph g = make_R(i);
    for (int v = 0; v < g.n(); ++v) EXPECT_EQ(g.deg(v), 3);
  }
  Graph r3 = make_R(3);
  int low = 0;
  for (int v = 0; v < r3.n(); ++v) low += r3.deg(v) < 3;
  EXPECT_EQ(low, 1);
}

TEST(GenerateTest, LFamilyDegreeTwoPairs) {
  for (int k = 0; k <= 7; ++k)
    for (int first : {1, 2}) {
      LInfo info;
      Graph g = make_L(alternating_seq(first, k), &info);
      EXPECT_TRUE(is_triangle_free(g));
      EXPECT_TRUE(is_subcubic(g));
      std::vector<int> two;
      for (int v = 0; v < g.n(); ++v)
        if (g.deg(v) == 2) two.push_back(v);
      ASSERT_EQ(two.size(), 4u);
      // Each pair is an edge or a C4 diagonal.
      auto good_pair = [&](int a, int b) {
        if (g.has_edge(a, b)) return true;
        int common = 0;
        for (int w : g.nbrs(a)) common += g.has_edge(w, b);
        return common >= 2;
      };
      EXPECT_TRUE(good_pair(info.w, info.x));
      EXPECT_TRUE(good_pair(info.y, info.z));
      std::set<int> s{info.w, info.x, info.y, info.z};
      EXPECT_EQ(std::vector<int>(s.begin(), s.end()), two);
    }
}

TEST(GenerateTest, EvenLengthSequencesCoincide) {
  for (int k : {2, 4, 6}) EXPECT_TRUE(is_isomorphic(make_L(alternating_seq(1, k)), make_L(alternating_seq(2, k))));
  EXPECT_FALSE(is_isomorphic(make_L({1}), make_L({2})));
  EXPECT_TRUE(is_isomorphic(make_R(5), make_R(6)));
}

TEST(GenerateTest, RandomGraphsAreValid) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    int n = 1 + static_cast<int>(seed % 64);
    Graph g = random_tf_subcubic(n, seed);
    EXPECT_EQ(g.n(), n);
    EXPECT_TRUE(is_triangle_free(g));
    EXPECT_TRUE(is_subcubic(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g, random_tf_subcubic(n, seed));
  }
}

TEST(PatternTest, L0Copies) {
  // L_0 has an automorphism group of order 4.
  EXPECT_EQ(find_l0_copies(make_L({})).size(), 4u);
  // R_0 holds two distinct copies.
  std::set<std::vector<int>> sets;
  for (auto c : find_l0_copies(make_R(0))) {
    std::vector<int> v(c.begin(), c.end());
    std::sort(v.begin(), v.end());
    sets.insert(v);
  }
  EXPECT_GE(sets.size(), 2u);
}

// Independent scan over all 6-tuples.
size_t brute_l0(const Graph& g) {
  size_t cnt = 0;
  int n = g.n();
  std::vector<int> t(6);
  std::function<void(int)> rec = [&](int i) {
    if (i == 6) {
      std::vector<Edge> need{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[3]}, {t[0], t[4]},
                             {t[4], t[3]}, {t[0], t[5]}, {t[5], t[3]}};
      for (auto [a, b] : need)
        if (!g.has_edge(a, b)) return;
      if (g.induced(t).num_edges() == 7) ++cnt;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(t.begin(), t.begin() + i, v) != t.begin() + i) continue;
      t[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return cnt;
}

TEST(PatternTest, L0CopiesMatchBruteForce) {
  for (Graph g : {make_R(0), make_R(1), make_L({1, 2}), make_petersen(7, 2), random_tf_subcubic(11, 3)})
    EXPECT_EQ(find_l0_copies(g).size(), brute_l0(g));
}

TEST(PatternTest, ClustersClassify) {
  auto cl = l0_clusters(make_R(0));
  ASSERT_EQ(cl.size(), 1u);
  EXPECT_TRUE(classify_cluster(make_R(0), cl[0]).r0);
  Graph l = make_L({1, 2, 1});
  auto c2 = l0_clusters(l);
  ASSERT_EQ(c2.size(), 1u);
  auto cc = classify_cluster(l, c2[0]);
  EXPECT_EQ(cc.k, 3);
}

TEST(PatternTest, ForbiddenDetection) {
  for (int i = 1; i <= 7; ++i) EXPECT_FALSE(is_forbidden_free(make_R(i))) << i;
  EXPECT_TRUE(is_forbidden_free(make_R(0)));
  EXPECT_TRUE(is_forbidden_free(make_L({1, 2})));
  // L_1 plus an edge between its two degree-two pairs.
  LInfo info;
  Graph l1 = make_L({1}, &info);
  l1.add_edge(std::min(info.w, info.y), std::max(info.w, info.y));
  ASSERT_TRUE(is_triangle_free(l1));
  auto hits = find_forbidden(l1);
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits[0].vertices.size(), 8u);
}

TEST(PatternTest, PathAndH) {
  std::vector<int> ord;
  EXPECT_TRUE(as_path(make_path(5), &ord));
  EXPECT_EQ(ord.size(), 5u);
  int a, b;
  EXPECT_TRUE(as_H(make_H(4, 6), &ord, &a, &b));
  EXPECT_EQ(a + b, 10);
  EXPECT_FALSE(as_H(make_spider({1, 1, 1}), &ord));
}

TEST(OrientTest, Bounds) {
  auto check = [](const MultiGraph& mg) {
    Digraph d = orient_balanced(mg);
    std::vector<int> deg(mg.n, 0);
    for (auto [u, v] : mg.edges) ++deg[u], ++deg[v];
    EXPECT_EQ(d.arcs().size(), mg.edges.size());
    for (int v = 0; v < mg.n; ++v) {
      EXPECT_GE(d.outdeg(v), deg[v] / 2);
      EXPECT_GE(d.indeg(v), deg[v] / 2);
    }
    Digraph r = d.reversed();
    for (int v = 0; v < mg.n; ++v) EXPECT_EQ(r.indeg(v), d.outdeg(v));
  };
  check({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
  check({3, {{0, 1}, {1, 2}}});
  MultiGraph k33{6, {}};
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.edges.push_back({a, b});
  check(k33);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    MultiGraph mg{2 + static_cast<int>(rng() % 11), {}};
    int m = rng() % 25;
    for (int i = 0; i < m; ++i) {
      int u = rng() % mg.n, v = rng() % mg.n;
      if (u != v) mg.edges.push_back({u, v});
    }
    check(mg);
  }
}

TEST(IoTest, JsonRoundTrip) {
  Graph g = make_petersen(7, 2);
  g.labels.assign(g.n(), "x");
  Graph h = graph_from_json(graph_to_json(g));
  EXPECT_EQ(g, h);
  EXPECT_EQ(h.labels, g.labels);
  EXPECT_EQ(graph_to_json(h), graph_to_json(g));
  EXPECT_NE(graph_to_dot(g).find("--"), std::string::npos);
}

}  // namespace
}  // namespace tfc
