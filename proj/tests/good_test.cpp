#include <random>

#include "gtest/gtest.h"
#include "tfc/generate.hpp"
#include "tfc/good.hpp"
#include "tfc/patterns.hpp"

namespace tfc {
namespace {

Graph spider_of_cubics() {
  // Centre 0 with three cubic neighbours, each carrying two leaves.
  Graph g(10);
  for (int i = 0; i < 3; ++i) {
    int c = 1 + 3 * i;
    g.add_edge(0, c);
    g.add_edge(c, c + 1);
    g.add_edge(c, c + 2);
  }
  return g;
}

bool has(const GoodnessReport& r, const std::string& cond) {
  for (const auto& v : r.violations)
    if (v.condition == cond) return true;
  return false;
}

TEST(GoodGraphTest, Examples) {
  for (int n = 1; n <= 9; ++n) EXPECT_TRUE(is_good_graph(make_path(n)).good());
  EXPECT_TRUE(is_good_graph(make_cycle(6)).good());
  GoodnessReport r = is_good_graph(spider_of_cubics());
  EXPECT_TRUE(has(r, "G1"));
  EXPECT_FALSE(is_good_graph(make_cycle(5)).bipartite);
}

TEST(GoodGraphTest, ClauseWitnesses) {
  // Two adjacent cubic vertices 0 and 1, each with a pendant P3 whose
  // first vertex is not a support vertex: G2 fails.
  Graph g = make_cycle(4);
  for (int base : {0, 1}) {
    int a = g.add_vertex(), b = g.add_vertex(), e = g.add_vertex();
    g.add_edge(base, a);
    g.add_edge(a, b);
    g.add_edge(b, e);
  }
  GoodnessReport r = is_good_graph(g);
  EXPECT_TRUE(has(r, "G2"));
  // Hanging a leaf on 0 repairs G2.
  Graph h = g;
  h.remove_edge(0, 4);
  h.add_edge(0, h.add_vertex());
  EXPECT_FALSE(has(is_good_graph(h), "G2"));
}

// Goodness is closed under vertex deletion.
TEST(GoodGraphTest, KeepGood) {
  std::mt19937_64 rng(4);
  int seen = 0;
  for (int it = 0; it < 2000 && seen < 200; ++it) {
    int n = 4 + rng() % 14;
    Graph g(n);
    for (int i = 1; i < n; ++i) {
      int p = rng() % i;
      if (g.deg(p) < 3) g.add_edge(p, i);
    }
    if (!is_good_graph(g).good()) continue;
    ++seen;
    std::vector<int> X;
    for (int v = 0; v < n; ++v)
      if (rng() % 4 == 0) X.push_back(v);
    EXPECT_TRUE(is_good_graph(g.without(X)).good());
  }
  EXPECT_EQ(seen, 200);
}

TEST(MonoTest, Counts) {
  Graph star = make_star(3, 0);
  EXPECT_EQ(count_mono_neighborhoods(star, {{1, 2, 2, 2}}), 1);
  EXPECT_EQ(count_mono_neighborhoods(make_cycle(6), {{1, 2, 1, 2, 1, 2}}), 0);
  EXPECT_THROW(count_mono_neighborhoods(make_cycle(4), {{1, 1, 2, 2}}), std::invalid_argument);
  // Independent recount on P(7,2).
  Graph p = make_petersen(7, 2);
  ThreeColoring f = rainbow_free_coloring(p);
  int direct = 0;
  for (int v = 0; v < p.n(); ++v) {
    std::vector<int> cs;
    for (int w : p.nbrs(v)) cs.push_back(f.colors[w]);
    if (cs.size() == 3 && cs[0] == cs[1] && cs[1] == cs[2]) ++direct;
  }
  EXPECT_EQ(count_mono_neighborhoods(p, f), direct);
}

TEST(RainbowTest, FreeColorings) {
  for (const Graph& g : {make_cycle(5), make_R(0), make_L({1}), make_petersen(7, 2)}) {
    ThreeColoring f = rainbow_free_coloring(g);
    for (auto [u, v] : g.edges()) EXPECT_NE(f.colors[u], f.colors[v]);
    EXPECT_TRUE(rainbow_l0(g, f.colors).empty());
  }
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  EXPECT_THROW(rainbow_free_coloring(k4), std::invalid_argument);
}

TEST(RainbowTest, SkippedEdges) {
  // With every L_0 edge skipped, rainbow copies are allowed.
  Graph g = make_R(0);
  ThreeColoring f = rainbow_free_coloring(g, g.edges());
  for (auto [u, v] : g.edges()) EXPECT_NE(f.colors[u], f.colors[v]);
}

TEST(GoodColoringTest, Examples) {
  ThreeColoring c6{{1, 2, 1, 2, 1, 2}};
  EXPECT_TRUE(verify_good_coloring(make_cycle(6), c6));
  ThreeColoring c5 = good_coloring(make_cycle(5));
  EXPECT_TRUE(verify_good_coloring(make_cycle(5), c5));
  GoodSearchStats st;
  ThreeColoring p = good_coloring(make_petersen(7, 2), &st);
  EXPECT_TRUE(verify_good_coloring(make_petersen(7, 2), p));
  EXPECT_THROW(good_coloring(make_path(4)), std::invalid_argument);  // not 2-connected
}

TEST(GoodColoringTest, PlantedRainbowRejected) {
  // L_0 = (v1 v2 v3 v4 u1 u2): u's get 1, v1,v3 get 2, v2,v4 get 3.
  Graph g = make_R(0);
  auto copies = find_l0_copies(g);
  ASSERT_FALSE(copies.empty());
  auto c = copies[0];
  ThreeColoring f = rainbow_free_coloring(g, g.edges());
  f.colors[c[4]] = f.colors[c[5]] = 1;
  f.colors[c[0]] = f.colors[c[2]] = 2;
  f.colors[c[1]] = f.colors[c[3]] = 3;
  bool proper = true;
  for (auto [u, v] : g.edges()) proper = proper && f.colors[u] != f.colors[v];
  if (!proper) {
    // Recolor the remaining vertex to keep the coloring proper.
    for (int v = 0; v < g.n(); ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      for (int col = 1; col <= 3; ++col) {
        bool ok = true;
        for (int w : g.nbrs(v)) ok = ok && f.colors[w] != col;
        if (ok) f.colors[v] = col;
      }
    }
  }
  std::string why;
  EXPECT_FALSE(verify_good_coloring(g, f, &why));
  EXPECT_NE(why.find("rainbow"), std::string::npos) << why;
}

TEST(GoodColoringTest, LocalSearchAgreesWithExhaustive) {
  int checked = 0;
  for (uint64_t seed = 1; checked < 15 && seed < 400; ++seed) {
    Graph g = random_tf_subcubic(6 + seed % 7, seed);
    Connectivity c = decompose_connectivity(g, false);
    if (g.n() < 3 || c.components.size() != 1 || !c.cut_vertices.empty()) continue;
    if (!is_forbidden_free(g)) continue;
    ++checked;
    ThreeColoring f = good_coloring(g);
    EXPECT_TRUE(verify_good_coloring(g, f));
    EXPECT_FALSE(exhaustive_good_coloring(g).empty());
  }
  EXPECT_EQ(checked, 15);
}

TEST(JsonTest, ThreeColoring) {
  ThreeColoring f{{1, 2, 3}};
  EXPECT_EQ(three_coloring_from_json(three_coloring_to_json(f)).colors, f.colors);
  EXPECT_THROW(three_coloring_from_json("{\"colors\":[4]}"), std::invalid_argument);
}

}  // namespace
}  // namespace tfc
