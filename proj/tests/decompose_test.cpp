#include <random>

#include "gtest/gtest.h"
#include "tfc/samplers.hpp"
#include "tfc/decompose.hpp"
#include "tfc/fixtures.hpp"
#include "tfc/generate.hpp"
#include "tfc/patterns.hpp"

namespace tfc {
namespace {

using testing::oracle_ab;

// Vertices of degree below three, one entry per missing edge.
std::vector<int> deficient(const Graph& h) {
  std::vector<int> r;
  for (int v = 0; v < h.n(); ++v)
    for (int k = h.deg(v); k < 3; ++k) r.push_back(v);
  return r;
}

// h with a C6 attached through its two deficient vertices: 0 = at
// antipodal cycle vertices, 1 = at adjacent ones, 2 = both at one vertex.
Graph hang_on_c6(const Graph& h, int mode) {
  Graph g = h;
  auto d = deficient(h);
  const int n0 = g.n();
  for (int i = 0; i < 6; ++i) g.add_vertex();
  for (int i = 0; i < 6; ++i) g.add_edge(n0 + i, n0 + (i + 1) % 6);
  if (mode == 0) g.add_edge(d[0], n0), g.add_edge(d[1], n0 + 3);
  if (mode == 1) g.add_edge(d[0], n0), g.add_edge(d[1], n0 + 1);
  if (mode == 2) g.remove_edge(n0, n0 + 1), g.add_edge(d[0], n0), g.add_edge(d[1], n0);
  return g;
}

Graph disjoint_copies(const Graph& h, int copies) {
  Graph g(h.n() * copies);
  for (int c = 0; c < copies; ++c)
    for (auto [u, v] : h.edges()) g.add_edge(u + c * h.n(), v + c * h.n());
  return g;
}

TEST(FixtureTest, RTables) {
  for (int i = 0; i <= 7; ++i) {
    SetColoring f = r_table(i);
    EXPECT_TRUE(oracle_ab(make_R(i), f.sets, 8, 3)) << "R" << i;
  }
  EXPECT_EQ(r_table(4).sets[6], (ColorSet{3, 4, 8}));
  EXPECT_EQ(r_table(2).sets[4], (ColorSet{6, 7, 8}));
}

TEST(FixtureTest, LTablesStored) {
  for (auto seq : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}}) {
    ASSERT_TRUE(l_table_stored(seq));
    LInfo info;
    Graph g = make_L(seq, &info);
    for (LVariant var : {LVariant::F1, LVariant::F2}) {
      SetColoring f = l_table(seq, var);
      EXPECT_TRUE(oracle_ab(g, f.sets, 8, 3));
      EXPECT_TRUE(l_end_patterns(info, f, var));
    }
  }
  // L_2: y and z are the diagonal of the new 4-cycle.
  LInfo info;
  make_L({2}, &info);
  SetColoring f1 = l_table({2}, LVariant::F1), f2 = l_table({2}, LVariant::F2);
  EXPECT_EQ(f1.sets[info.y], (ColorSet{3, 4, 8}));
  EXPECT_EQ(f1.sets[info.z], (ColorSet{3, 4, 6}));
  EXPECT_EQ(f2.sets[info.z], (ColorSet{3, 4, 8}));
  EXPECT_TRUE(set_intersection(f1.sets[info.w], f1.sets[info.y]).empty());
  EXPECT_EQ(set_intersection(f2.sets[info.x], f2.sets[info.z]).size(), 1u);
}

TEST(FixtureTest, PeriodicExtension) {
  for (int k = 1; k <= 12; ++k)
    for (int first : {1, 2}) {
      auto seq = alternating_seq(first, k);
      LInfo info;
      Graph g = make_L(seq, &info);
      for (LVariant var : {LVariant::F1, LVariant::F2}) {
        SetColoring f = l_table(seq, var);
        EXPECT_TRUE(oracle_ab(g, f.sets, 8, 3)) << k << "/" << first;
        std::string why;
        EXPECT_TRUE(l_end_patterns(info, f, var, &why)) << k << "/" << first << ": " << why;
      }
    }
  // L_{2,1,2,1,2,1}: the block sits on (b1, b2) and its last pair repeats
  // their colors.
  auto seq = alternating_seq(2, 6);
  SetColoring f = l_table(seq, LVariant::F1);
  EXPECT_EQ(f.sets[16], f.sets[1]);
  EXPECT_EQ(f.sets[17], f.sets[2]);
  EXPECT_EQ(l_block_colors().size(), 12u);
  EXPECT_THROW(l_table({1, 1}, LVariant::F1), std::invalid_argument);
}

TEST(GlueCliqueTest, SingleVertex) {
  Graph host = make_path(3);
  GlueNode a{{0, 1}, {8, 3, {{1, 2, 3}, {4, 5, 6}}}};
  GlueNode b{{1, 2}, {8, 3, {{1, 2, 3}, {4, 5, 6}}}};
  GlueNode r = glue_clique(host, a, b);
  EXPECT_EQ(r.f.a, 8);
  EXPECT_EQ(r.f.b, 3);
  ASSERT_EQ(r.vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.f.sets[1], (ColorSet{4, 5, 6}));
  EXPECT_TRUE(oracle_ab(host, r.f.sets, 8, 3));
}

TEST(GlueCliqueTest, MixedRatiosOnAnEdge) {
  // Two 4-cycles sharing the edge 0-1.
  Graph host(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 0}});
  SetColoring big{172, 60, std::vector<ColorSet>(4)};
  for (int c = 1; c <= 60; ++c) {
    big.sets[0].push_back(c), big.sets[2].push_back(c);
    big.sets[1].push_back(60 + c), big.sets[3].push_back(60 + c);
  }
  GlueNode a{{0, 1, 2, 3}, big};
  GlueNode b{{0, 1, 4, 5}, {8, 3, {{1, 2, 3}, {4, 5, 6}, {1, 7, 8}, {4, 5, 6}}}};
  GlueNode r = glue_clique(host, a, b);
  EXPECT_EQ(r.f.a, 172);
  EXPECT_EQ(r.f.b, 60);
  std::vector<std::vector<int>> sets(6);
  for (size_t i = 0; i < r.vertices.size(); ++i) sets[r.vertices[i]] = r.f.sets[i];
  EXPECT_TRUE(oracle_ab(host, sets, 172, 60));
  // The (8:3) side uses at most 160 colors after scaling.
  for (int v : {4, 5})
    for (int c : sets[v]) EXPECT_LE(c, 172);
  EXPECT_THROW(glue_clique(host, b, a), std::invalid_argument);
}

TEST(GlueCliqueTest, IdenticalPieces) {
  Graph host = make_path(2);
  GlueNode a{{0, 1}, {8, 3, {{1, 2, 3}, {6, 7, 8}}}};
  GlueNode r = glue_clique(host, a, a);
  EXPECT_EQ(r.vertices, a.vertices);
  EXPECT_EQ(r.f.sets, a.f.sets);
}

TEST(GlueCliqueTest, RejectsNonClique) {
  Graph host = make_cycle(4);
  GlueNode a{{0, 1, 2}, {2, 1, {{1}, {2}, {1}}}};
  GlueNode b{{0, 3, 2}, {2, 1, {{1}, {2}, {1}}}};
  EXPECT_THROW(glue_clique(host, a, b), std::invalid_argument);
}

// G_0 = path u-a-v (7:2); G_1 = path u-p-q-r-v with C5 and C4 colorings (5:2).
TEST(GlueTwoCutTest, OverlapSweep) {
  Graph host(6, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 5}, {5, 1}});
  CutPiece p;
  p.vertices = {0, 3, 4, 5, 1};
  p.u = 0, p.v = 1;
  p.plus_edge = {5, 2, {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}};
  p.contracted = {5, 2, {{1, 2}, {3, 4}, {1, 2}, {3, 4}, {1, 2}}};
  for (ColorSet fv : {ColorSet{3, 4}, ColorSet{1, 3}, ColorSet{1, 2}}) {
    GlueNode g0{{0, 2, 1}, {7, 2, {{1, 2}, {5, 6}, fv}}};
    GlueNode r = glue_2cut(host, g0, {p});
    EXPECT_EQ(r.f.a, 14);
    EXPECT_EQ(r.f.b, 4);
    std::vector<std::vector<int>> sets(6);
    for (size_t i = 0; i < r.vertices.size(); ++i) sets[r.vertices[i]] = r.f.sets[i];
    EXPECT_TRUE(oracle_ab(host, sets, 14, 4));
    SetColoring scaled = scale(g0.f, 2);
    EXPECT_EQ(sets[0], scaled.sets[0]);
    EXPECT_EQ(sets[1], scaled.sets[2]);
  }
}

TEST(GlueTwoCutTest, Preconditions) {
  Graph host(6, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 5}, {5, 1}});
  CutPiece p;
  p.vertices = {0, 3, 4, 5, 1};
  p.u = 0, p.v = 1;
  p.plus_edge = {5, 2, {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}};
  p.contracted = {5, 2, {{1, 2}, {3, 4}, {1, 2}, {3, 4}, {3, 4}}};  // differs on u, v
  GlueNode g0{{0, 2, 1}, {7, 2, {{1, 2}, {5, 6}, {3, 4}}}};
  EXPECT_THROW(glue_2cut(host, g0, {p}), std::exception);
  GlueNode low{{0, 2, 1}, {4, 2, {{1, 2}, {3, 4}, {1, 2}}}};  // 4/2 < 5/2
  p.contracted.sets[4] = {1, 2};
  EXPECT_THROW(glue_2cut(host, low, {p}), std::invalid_argument);
}

TEST(ExtractTest, Examples) {
  Family none = extract_family(make_petersen(7, 2));
  EXPECT_TRUE(none.members.empty());
  EXPECT_EQ(none.g0.size(), 14u);

  LInfo info;
  Graph l1 = make_L({1}, &info);
  l1.add_edge(info.w, info.y);
  ASSERT_TRUE(is_triangle_free(l1));
  Family one = extract_family(l1);
  ASSERT_EQ(one.members.size(), 1u);
  EXPECT_EQ(one.members[0].vertices.size(), 8u);
  EXPECT_TRUE(one.g0.empty());

  // Two R_7 copies joined through a path of two new vertices.
  Graph r = make_R(7);
  Graph g = disjoint_copies(r, 2);
  int a = g.add_vertex(), b = g.add_vertex();
  auto d = deficient(r);
  g.add_edge(d[0], a), g.add_edge(d[1], a), g.add_edge(a, b);
  g.add_edge(b, d[0] + r.n()), g.add_edge(b, d[1] + r.n());
  Family two = extract_family(g);
  ASSERT_EQ(two.members.size(), 2u);
  std::vector<int> seen(g.n(), 0);
  for (const auto& m : two.members)
    for (int v : m.vertices) EXPECT_EQ(seen[v]++, 0);
  EXPECT_EQ(two.g0, (std::vector<int>{a, b}));
  EXPECT_TRUE(is_forbidden_free(g.induced(two.g0)));
}

TEST(MemberTest, Variants) {
  Graph g = hang_on_c6(make_R(4), 0);
  Family fam = extract_family(g);
  ASSERT_EQ(fam.members.size(), 1u);
  const ForbiddenMember& m = fam.members[0];
  ASSERT_EQ(m.attachment.size(), 2u);
  EXPECT_FALSE(m.attachment_adjacent);
  MemberColoring plain = color_member_83(g, m, MemberMode::Plain);
  EXPECT_EQ(plain.source, "table");
  EXPECT_TRUE(oracle_ab(plain.graph, plain.f.sets, 8, 3));
  auto sorted = [](std::vector<ColorSet> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(sorted(plain.f.sets), sorted(r_table(4).sets));
  for (MemberMode mode : {MemberMode::Extension, MemberMode::PlusEdge, MemberMode::Contract}) {
    MemberColoring mc = color_member_83(g, m, mode);
    EXPECT_TRUE(oracle_ab(mc.graph, mc.f.sets, 8, 3));
    EXPECT_EQ(mc.graph.n(), 8 + (mode == MemberMode::Contract ? 1 : 2));
  }
  MemberColoring plus = color_member_83(g, m, MemberMode::PlusEdge);
  EXPECT_TRUE(plus.graph.has_edge(8, 9));
}

TEST(General17260Test, Shapes) {
  // Two 6-cycles joined by a bridge: blocks C6, K2, C6.
  Graph g = disjoint_copies(make_cycle(6), 2);
  g.add_edge(0, 6);
  for (const Graph& h : {g, make_path(5), make_star(3, 0), make_petersen(7, 2), make_cycle(5), Graph(3)}) {
    SetColoring f = color_172_60_general(h);
    EXPECT_TRUE(oracle_ab(h, f.sets, 172, 60));
  }
  nlohmann::json t;
  color_172_60_general(g, &t);
  EXPECT_EQ(t["components"][0]["blocks"].size(), 3u);
  EXPECT_THROW(color_172_60_general(make_R(7)), std::invalid_argument);
}

TEST(E2ETest, RatioIdentity) {
  EXPECT_EQ(516 * 15, 43 * 180);
  EXPECT_EQ(172 * 15, 43 * 60);
  EXPECT_EQ(516 * 60, 172 * 180);
}

TEST(E2ETest, Small) {
  for (const Graph& h : {make_path(2), make_petersen(7, 2), Graph(1), make_cycle(7)}) {
    SetColoring f = color_516_180(h);
    EXPECT_EQ(f.a, 516);
    EXPECT_EQ(f.b, 180);
    EXPECT_TRUE(oracle_ab(h, f.sets, 516, 180));
  }
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  EXPECT_THROW(color_516_180(k4), std::invalid_argument);
}

TEST(E2ETest, MemberRoutes) {
  reset_decompose_stats();
  for (int i : {1, 2, 4, 7})
    for (int mode = 0; mode < 3; ++mode) {
      Graph g = hang_on_c6(make_R(i), mode);
      EXPECT_TRUE(oracle_ab(g, color_516_180(g).sets, 516, 180)) << "R" << i << " mode " << mode;
    }
  for (int k = 1; k <= 6; ++k) {
    LInfo info;
    Graph h = make_L(alternating_seq(1, k), &info);
    h.add_edge(info.w, info.y);
    ASSERT_TRUE(is_triangle_free(h));
    for (int mode = 0; mode < 3; ++mode) {
      Graph g = hang_on_c6(h, mode);
      EXPECT_TRUE(oracle_ab(g, color_516_180(g).sets, 516, 180)) << "L k=" << k << " mode " << mode;
    }
    EXPECT_TRUE(oracle_ab(h, color_516_180(h).sets, 516, 180));
  }
  DecomposeStats st = decompose_stats();
  EXPECT_EQ(st.two_cut, 10);
  EXPECT_EQ(st.absorbed, 20);
  EXPECT_EQ(st.whole, 6);
  EXPECT_EQ(st.stalled, 0);
}

TEST(E2ETest, StallIsFlagged) {
  // Two R_7 copies joined only to each other: no residual to absorb into.
  Graph r = make_R(7);
  Graph g = disjoint_copies(r, 2);
  auto d = deficient(r);
  g.add_edge(d[0], d[0] + r.n());
  g.add_edge(d[1], d[1] + r.n());
  reset_decompose_stats();
  nlohmann::json t;
  SetColoring f = color_516_180(g, &t);
  EXPECT_TRUE(oracle_ab(g, f.sets, 516, 180));
  EXPECT_EQ(decompose_stats().stalled, 2);
  EXPECT_TRUE(t["components"][0]["stalled"].get<bool>());
}

TEST(E2ETest, SeededSweep) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = random_tf_subcubic(4 + seed % 17, 500 + seed);
    nlohmann::json t;
    SetColoring f = color_516_180(g, &t);
    EXPECT_TRUE(oracle_ab(g, f.sets, 516, 180)) << seed;
    EXPECT_TRUE(t["verified"].get<bool>());
  }
}

}  // namespace
}  // namespace tfc
