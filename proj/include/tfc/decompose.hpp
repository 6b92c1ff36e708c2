#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tfc/coloring.hpp"
#include "tfc/graph.hpp"
#include "tfc/patterns.hpp"

namespace tfc {

struct ForbiddenMember {
  SubgraphWitness witness;       // map is in host ids
  std::vector<int> vertices;     // sorted host ids
  std::vector<int> attachment;   // N_G(H), sorted
  bool attachment_adjacent = false;
};

struct Family {
  std::vector<ForbiddenMember> members;
  std::vector<int> g0;  // host ids outside every member
};

// Greedy maximal family of disjoint induced members; throws std::logic_error
// if the residual still contains one.
Family extract_family(const Graph& g);

// A colored induced piece of the host.
struct GlueNode {
  std::vector<int> vertices;  // host ids
  SetColoring f;              // indexed like vertices
};

// Pieces sharing a clique. The result has fold lcm(b, d) and universe
// a*s/b; throws std::invalid_argument on a ratio or interface violation.
GlueNode glue_clique(const Graph& host, const GlueNode& g1, const GlueNode& g2);

struct CutPiece {
  std::vector<int> vertices;  // host ids of G_i, including u and v
  int u = -1, v = -1;
  SetColoring contracted;     // coloring of G_i/uv written on G_i: equal sets on u, v
  SetColoring plus_edge;      // coloring of G_i + uv
};

// (ad:bd)-coloring of G_0 together with the pieces.
GlueNode glue_2cut(const Graph& host, const GlueNode& g0, const std::vector<CutPiece>& pieces);

enum class MemberMode { Plain, Extension, PlusEdge, Contract };

struct MemberColoring {
  Graph graph;             // the colored variant
  std::vector<int> host;   // host id of each vertex of graph
  SetColoring f;           // (8:3)
  std::string source;      // "table", "table+extend" or "search"
};

// PlusEdge and Contract need exactly two non-adjacent attachment vertices;
// under Contract the second one is merged into the first.
MemberColoring color_member_83(const Graph& g, const ForbiddenMember& m, MemberMode mode);

// (172:60)-coloring of a forbidden-free triangle-free subcubic graph.
SetColoring color_172_60_general(const Graph& g, nlohmann::json* trace = nullptr);

struct DecomposeStats {
  int members = 0;
  int whole = 0;       // components that are a single member
  int absorbed = 0;    // members glued on a clique
  int two_cut = 0;     // members glued on a non-adjacent pair
  int stalled = 0;     // members left over after absorption
  int member_search = 0;
};
DecomposeStats decompose_stats();
void reset_decompose_stats();

// (516:180)-coloring; throws std::invalid_argument on bad input and
// std::logic_error when verification fails.
SetColoring color_516_180(const Graph& g, nlohmann::json* trace = nullptr);

}  // namespace tfc
