#pragma once

#include <array>
#include <string>
#include <vector>

#include "tfc/graph.hpp"

namespace tfc {

enum class PatternKind { K3, L0Copy, R, LFamily, LPrime, Hab, RainbowL0 };

std::string to_string(PatternKind k);

struct SubgraphWitness {
  PatternKind kind = PatternKind::K3;
  int index = -1;            // R index, or k for L members
  std::vector<int> seq;      // L sequence when relevant
  std::vector<int> map;      // pattern vertex -> host vertex
  std::vector<int> vertices; // sorted image
};

// All injective maps of pattern into host preserving edges (and non-edges if
// induced). allowed restricts host vertices; limit 0 means unlimited.
std::vector<std::vector<int>> find_embeddings(const Graph& pattern, const Graph& host, bool induced,
                                              size_t limit = 0,
                                              const std::vector<char>* allowed = nullptr);
bool is_isomorphic(const Graph& a, const Graph& b, std::vector<int>* map = nullptr);

// Labeled L_0 copies (v1, v2, v3, v4, u1, u2); each copy appears once per
// automorphism (4 times).
using L0Copy = std::array<int, 6>;
std::vector<L0Copy> find_l0_copies(const Graph& g);
// Edges of an L_0 copy.
std::vector<Edge> l0_edges(const L0Copy& c);

// Maximal unions of chains of intersecting L_0 copies.
std::vector<std::vector<int>> l0_clusters(const Graph& g);

struct ClusterClass {
  bool r0 = false;
  int k = -1;             // L_k if not r0; -1 when unclassified
  std::vector<int> seq;
  std::vector<int> map;   // pattern vertex -> host vertex
};
ClusterClass classify_cluster(const Graph& g, const std::vector<int>& cluster);

// Rainbow copies under a 3-coloring (values 1..3). If skip is given, copies
// using an edge of skip are ignored.
std::vector<L0Copy> rainbow_l0(const Graph& g, const std::vector<int>& colors,
                               const std::vector<Edge>* skip = nullptr);

// Induced subgraphs that contain a spanning R_i (1 <= i <= 7) or a spanning
// L_k plus at least one extra edge. Sorted by size, then discovery order.
std::vector<SubgraphWitness> find_forbidden(const Graph& g, bool first_only = false);
bool is_forbidden_free(const Graph& g);

std::vector<SubgraphWitness> find_pattern(const Graph& g, PatternKind kind, int index = -1,
                                          const std::vector<int>* colors = nullptr);

// Path / H_{a,b} recognition for component classification. Order lists the
// path from one end; for H, order is v_1..v_a then u_1..u_b.
bool as_path(const Graph& g, std::vector<int>* order = nullptr);
bool as_H(const Graph& g, std::vector<int>* order = nullptr, int* a = nullptr, int* b = nullptr);

}  // namespace tfc
