#pragma once

#include <string>
#include <vector>

#include "tfc/graph.hpp"

namespace tfc {

struct ThreeColoring {
  std::vector<int> colors;  // values in 1..3
};

struct GoodnessViolation {
  std::string condition;  // "G1".."G4"
  std::vector<int> witness;
};

struct GoodnessReport {
  bool bipartite = false;
  bool subcubic = false;
  std::vector<GoodnessViolation> violations;
  bool good() const { return bipartite && subcubic && violations.empty(); }
};

GoodnessReport is_good_graph(const Graph& g);

// Degree-3 vertices whose three neighbours share a color.
int count_mono_neighborhoods(const Graph& g, const ThreeColoring& f);

// The subgraph induced by color classes s and t, with the host ids of its
// vertices in `verts`.
Graph class_pair_graph(const Graph& g, const ThreeColoring& f, int s, int t, std::vector<int>* verts = nullptr);

// Proper 3-coloring of g with no rainbow L_0 whose edges avoid S.
// Throws std::invalid_argument when g has K_4 or degree above 3.
ThreeColoring rainbow_free_coloring(const Graph& g, const std::vector<Edge>& S = {});

struct GoodSearchStats {
  int moves = 0;          // accepted local moves
  bool exhaustive = false;  // result came from the exhaustive fallback
};

// Throws std::invalid_argument on precondition failure and
// std::runtime_error when the search gives up.
ThreeColoring good_coloring(const Graph& g, GoodSearchStats* stats = nullptr, bool check_pre = true);

// Exhaustive search over proper rainbow-free colorings. Empty when none is
// good. Refuses graphs above `cap` vertices.
std::vector<int> exhaustive_good_coloring(const Graph& g, int cap = 24);

bool verify_good_coloring(const Graph& g, const ThreeColoring& f, std::string* why = nullptr);

std::string three_coloring_to_json(const ThreeColoring& f);
ThreeColoring three_coloring_from_json(const std::string& text);

}  // namespace tfc
