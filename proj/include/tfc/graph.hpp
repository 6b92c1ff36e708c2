#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tfc {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }

  int add_vertex();
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void remove_edge(int u, int v);

  const std::vector<int>& nbrs(int v) const { return adj_[v]; }
  int deg(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // Sorted list of (u, v) with u < v.
  std::vector<Edge> edges() const;

  // Subgraph induced by vs; vertex i of the result is vs[i].
  Graph induced(const std::vector<int>& vs) const;
  // Induced subgraph on all vertices not in removed.
  Graph without(const std::vector<int>& removed, std::vector<int>* kept = nullptr) const;

  bool operator==(const Graph& o) const;

  std::vector<std::string> labels;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

struct MultiGraph {
  int n = 0;
  std::vector<Edge> edges;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : out_(n), in_(n) {}

  int n() const { return static_cast<int>(out_.size()); }
  void add_arc(int u, int v);
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int outdeg(int v) const { return static_cast<int>(out_[v].size()); }
  int indeg(int v) const { return static_cast<int>(in_[v].size()); }
  bool has_arc(int u, int v) const;
  std::vector<Edge> arcs() const;
  Digraph reversed() const;

 private:
  std::vector<std::vector<int>> out_, in_;
};

// Recognizers.
bool is_triangle_free(const Graph& g);
bool is_subcubic(const Graph& g);
bool is_connected(const Graph& g);
// Proper 2-coloring (0/1) if bipartite.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool is_independent(const Graph& g, const std::vector<int>& vs);
std::vector<std::vector<int>> components(const Graph& g);
// Vertices within the given subset, split into components of g[subset].
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& subset);
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& vs);
int independence_number(const Graph& g);

struct Block {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

struct TwoCut {
  int block = -1;
  int u = -1, v = -1;
  // Vertex sets of the pieces of the block split at {u, v}; each contains u and v.
  std::vector<std::vector<int>> sides;
};

struct Connectivity {
  std::vector<std::vector<int>> components;
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;
  std::vector<TwoCut> two_cuts;
};

Connectivity decompose_connectivity(const Graph& g, bool with_two_cuts = true);

// Euler-tour orientation with deg+ and deg- at least floor(deg/2).
Digraph orient_balanced(const MultiGraph& g);

// JSON / DOT.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
std::string graph_to_dot(const Graph& g);

}  // namespace tfc
