#include "tfc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tfc {

Graph::Graph(int n) : adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  if (!labels.empty()) labels.emplace_back();
  return n() - 1;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loop");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  --m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  std::vector<int> pos(n(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) pos[vs[i]] = i;
  Graph h(static_cast<int>(vs.size()));
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    for (int w : adj_[vs[i]])
      if (pos[w] > i) h.add_edge(i, pos[w]);
  if (!labels.empty()) {
    h.labels.resize(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) h.labels[i] = labels[vs[i]];
  }
  return h;
}

Graph Graph::without(const std::vector<int>& removed, std::vector<int>* kept) const {
  std::vector<char> gone(n(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < n(); ++v)
    if (!gone[v]) keep.push_back(v);
  if (kept) *kept = keep;
  return induced(keep);
}

bool Graph::operator==(const Graph& o) const { return adj_ == o.adj_; }

void Digraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw std::out_of_range("arc endpoint out of range");
  out_[u].push_back(v);
  in_[v].push_back(u);
}

bool Digraph::has_arc(int u, int v) const {
  return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

Digraph Digraph::reversed() const {
  Digraph d(n());
  for (int u = 0; u < n(); ++u)
    for (int v : out_[u]) d.add_arc(v, u);
  return d;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.nbrs(u))
      if (w != v && g.has_edge(v, w)) return false;
  return true;
}

bool is_subcubic(const Graph& g) { return g.max_degree() <= 3; }

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (int v : subset) in[v] = 1;
  std::vector<std::vector<int>> out;
  for (int s : subset) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : g.nbrs(comp[i]))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  return components_of(g, all);
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g, std::vector<int>* side) {
  std::vector<int> c(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (c[s] >= 0) continue;
    c[s] = 0;
    std::vector<int> q{s};
    for (size_t i = 0; i < q.size(); ++i)
      for (int w : g.nbrs(q[i])) {
        if (c[w] < 0) {
          c[w] = 1 - c[q[i]];
          q.push_back(w);
        } else if (c[w] == c[q[i]]) {
          return false;
        }
      }
  }
  if (side) *side = c;
  return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& vs) {
  std::vector<char> in(g.n(), 0), mark(g.n(), 0);
  for (int v : vs) in[v] = 1;
  std::vector<int> out;
  for (int v : vs)
    for (int w : g.nbrs(v))
      if (!in[w] && !mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

int independence_number(const Graph& g) {
  // Branch on a maximum-degree vertex; fine for the small graphs we meet.
  std::function<int(std::vector<char>&, int)> rec = [&](std::vector<char>& alive, int cnt) -> int {
    if (cnt == 0) return 0;
    int best_v = -1, best_d = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int w : g.nbrs(v)) d += alive[w];
      if (d > best_d) best_d = d, best_v = v;
    }
    if (best_d <= 1) {
      // Disjoint edges and isolated vertices.
      int res = 0;
      std::vector<char> used(g.n(), 0);
      for (int v = 0; v < g.n(); ++v) {
        if (!alive[v] || used[v]) continue;
        used[v] = 1;
        ++res;
        for (int w : g.nbrs(v))
          if (alive[w]) used[w] = 1;
      }
      return res;
    }
    int v = best_v;
    alive[v] = 0;
    int without = rec(alive, cnt - 1);
    std::vector<int> removed;
    for (int w : g.nbrs(v))
      if (alive[w]) alive[w] = 0, removed.push_back(w);
    int with = 1 + rec(alive, cnt - 1 - static_cast<int>(removed.size()));
    for (int w : removed) alive[w] = 1;
    alive[v] = 1;
    return std::max(without, with);
  };
  std::vector<char> alive(g.n(), 1);
  return rec(alive, g.n());
}

Connectivity decompose_connectivity(const Graph& g, bool with_two_cuts) {
  Connectivity res;
  res.components = components(g);
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.nbrs(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent >= 0 || children > 1) is_cut[u] = 1;
          Block b;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            if (e == Edge(u, w)) break;
          }
          for (auto [x, y] : b.edges) {
            b.vertices.push_back(x);
            b.vertices.push_back(y);
          }
          std::sort(b.vertices.begin(), b.vertices.end());
          b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
          std::sort(b.edges.begin(), b.edges.end());
          res.blocks.push_back(std::move(b));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.deg(v) == 0) {
      disc[v] = timer++;
      res.blocks.push_back(Block{{v}, {}});
      continue;
    }
    dfs(v, -1);
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) res.cut_vertices.push_back(v);

  if (!with_two_cuts) return res;
  for (int bi = 0; bi < static_cast<int>(res.blocks.size()); ++bi) {
    const Block& b = res.blocks[bi];
    if (b.vertices.size() < 4) continue;
    Graph bg = g.induced(b.vertices);
    const int k = bg.n();
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (bg.has_edge(i, j)) continue;
        std::vector<int> rest;
        for (int x = 0; x < k; ++x)
          if (x != i && x != j) rest.push_back(x);
        auto parts = components_of(bg, rest);
        if (parts.size() < 2) continue;
        TwoCut tc;
        tc.block = bi;
        tc.u = b.vertices[i];
        tc.v = b.vertices[j];
        for (auto& p : parts) {
          std::vector<int> side{tc.u, tc.v};
          for (int x : p) side.push_back(b.vertices[x]);
          std::sort(side.begin(), side.end());
          tc.sides.push_back(std::move(side));
        }
        res.two_cuts.push_back(std::move(tc));
      }
  }
  return res;
}

Digraph orient_balanced(const MultiGraph& g) {
  // Phantom vertex n joined to every odd vertex makes all degrees even.
  const int n = g.n;
  std::vector<Edge> edges = g.edges;
  const int real = static_cast<int>(edges.size());
  std::vector<int> degree(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop in multigraph");
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] % 2) edges.emplace_back(v, n);
  std::vector<std::vector<std::pair<int, int>>> inc(n + 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    inc[edges[e].first].emplace_back(edges[e].second, e);
    inc[edges[e].second].emplace_back(edges[e].first, e);
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<size_t> ptr(n + 1, 0);
  Digraph d(n);
  for (int s = 0; s <= n; ++s) {
    // Hierholzer; arcs are emitted in circuit order so every pass through a
    // vertex pairs one incoming with one outgoing arc.
    std::vector<std::pair<int, int>> st{{s, -1}};
    std::vector<std::pair<int, int>> circuit;
    while (!st.empty()) {
      int v = st.back().first;
      while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]].second]) ++ptr[v];
      if (ptr[v] == inc[v].size()) {
        circuit.push_back(st.back());
        st.pop_back();
      } else {
        auto [w, e] = inc[v][ptr[v]];
        used[e] = 1;
        st.emplace_back(w, e);
      }
    }
    // circuit is reversed: consecutive entries (x, e) then (y, _) mean edge e runs y -> x.
    for (size_t i = 0; i + 1 < circuit.size(); ++i) {
      int e = circuit[i].second;
      if (e < 0 || e >= real) continue;
      int to = circuit[i].first, from = circuit[i + 1].first;
      d.add_arc(from, to);
    }
  }
  return d;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    g.add_edge(std::min(u, v), std::max(u, v));
  }
  if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (!g.labels.empty() && !g.labels[v].empty()) os << " [label=\"" << g.labels[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tfc
