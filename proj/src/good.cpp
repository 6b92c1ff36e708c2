#include "tfc/good.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"
#include "tfc/patterns.hpp"

namespace tfc {

GoodnessReport is_good_graph(const Graph& g) {
  GoodnessReport r;
  r.bipartite = is_bipartite(g);
  r.subcubic = is_subcubic(g);
  int n = g.n();
  auto leaf = [&](int v) { return g.deg(v) == 1; };
  auto support = [&](int v) {
    for (int w : g.nbrs(v))
      if (leaf(w)) return true;
    return false;
  };
  auto adj_leaf = support;
  auto adj_support2 = [&](int v) {
    for (int w : g.nbrs(v))
      if (g.deg(w) == 2 && support(w)) return true;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (g.deg(v) != 3) continue;
    bool all3 = true;
    for (int w : g.nbrs(v)) all3 = all3 && g.deg(w) == 3;
    if (all3) {
      std::vector<int> wit{v};
      wit.insert(wit.end(), g.nbrs(v).begin(), g.nbrs(v).end());
      r.violations.push_back({"G1", wit});
    }
  }
  for (auto [x, y] : g.edges()) {
    if (g.deg(x) != 3 || g.deg(y) != 3) continue;
    if (adj_leaf(x) || adj_leaf(y)) continue;
    if (adj_support2(x) && adj_support2(y)) continue;
    r.violations.push_back({"G2", {x, y}});
  }
  for (int y = 0; y < n; ++y) {
    if (g.deg(y) != 3) continue;
    const auto& ny = g.nbrs(y);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int x = ny[i], z = ny[j], yp = ny[3 - i - j];
        if (g.deg(x) != 3 || g.deg(z) != 3) continue;
        // G3 is symmetric in x and z; test it once.
        if (i < j && adj_leaf(x) && adj_leaf(z) && g.deg(yp) == 2) {
          int y1 = g.nbrs(yp)[0] == y ? g.nbrs(yp)[1] : g.nbrs(yp)[0];
          if (!leaf(y1)) r.violations.push_back({"G3", {x, y, z, yp, y1}});
        }
        std::vector<int> zz;
        for (int w : g.nbrs(z))
          if (w != y) zz.push_back(w);
        if (g.deg(zz[0]) >= 2 && g.deg(zz[1]) >= 2) {
          bool ok = false;
          for (int w : zz) ok = ok || (g.deg(w) == 2 && support(w));
          if (!ok) r.violations.push_back({"G4", {x, y, z, zz[0], zz[1]}});
        }
      }
  }
  return r;
}

int count_mono_neighborhoods(const Graph& g, const ThreeColoring& f) {
  for (auto [u, v] : g.edges())
    if (f.colors[u] == f.colors[v]) throw std::invalid_argument("coloring is not proper");
  int c = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (g.deg(v) != 3) continue;
    const auto& nb = g.nbrs(v);
    if (f.colors[nb[0]] == f.colors[nb[1]] && f.colors[nb[1]] == f.colors[nb[2]]) ++c;
  }
  return c;
}

Graph class_pair_graph(const Graph& g, const ThreeColoring& f, int s, int t, std::vector<int>* verts) {
  std::vector<int> vs;
  for (int v = 0; v < g.n(); ++v)
    if (f.colors[v] == s || f.colors[v] == t) vs.push_back(v);
  if (verts) *verts = vs;
  return g.induced(vs);
}

namespace {

bool has_k4(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.nbrs(v);
    if (nb.size() < 3) continue;
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        for (size_t k = j + 1; k < nb.size(); ++k)
          if (g.has_edge(nb[i], nb[j]) && g.has_edge(nb[i], nb[k]) && g.has_edge(nb[j], nb[k])) return true;
  }
  return false;
}

struct Rainbow {
  std::vector<L0Copy> copies;
  std::vector<std::vector<int>> at;  // copies through each vertex

  Rainbow(const Graph& g, const std::vector<Edge>& S) : at(g.n()) {
    std::vector<Edge> skip;
    for (auto [a, b] : S) skip.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(skip.begin(), skip.end());
    for (const auto& c : find_l0_copies(g)) {
      bool hit = false;
      for (auto e : l0_edges(c)) hit = hit || std::binary_search(skip.begin(), skip.end(), e);
      if (hit) continue;
      for (int v : c) at[v].push_back(static_cast<int>(copies.size()));
      copies.push_back(c);
    }
  }
  static bool rainbow(const L0Copy& c, const std::vector<int>& f) {
    for (int v : c)
      if (f[v] == 0) return false;
    int a = f[c[4]], b = f[c[0]], d = f[c[1]];
    return f[c[5]] == a && f[c[2]] == b && f[c[3]] == d && a != b && b != d && a != d;
  }
  bool clean_at(int v, const std::vector<int>& f) const {
    for (int i : at[v])
      if (rainbow(copies[i], f)) return false;
    return true;
  }
  bool clean(const std::vector<int>& f) const {
    for (const auto& c : copies)
      if (rainbow(c, f)) return false;
    return true;
  }
};

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (size_t h = order.size() - 1; h < order.size(); ++h)
      for (int w : g.nbrs(order[h]))
        if (!seen[w]) seen[w] = 1, order.push_back(w);
  }
  return order;
}

// Backtracking over proper rainbow-free colorings in BFS order; visit returns
// true to stop. The first vertex is fixed to color 1.
template <class Visit>
bool enumerate(const Graph& g, const Rainbow& rb, Visit&& visit, size_t* nodes, size_t limit) {
  auto order = bfs_order(g);
  std::vector<int> f(g.n(), 0);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (++*nodes > limit) throw std::runtime_error("3-coloring search: node limit reached");
    if (i == order.size()) return visit(f);
    int v = order[i];
    for (int c = 1; c <= 3; ++c) {
      if (i == 0 && c > 1) break;
      bool ok = true;
      for (int w : g.nbrs(v)) ok = ok && f[w] != c;
      if (!ok) continue;
      f[v] = c;
      if (rb.clean_at(v, f) && self(self, i + 1)) return true;
      f[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

int violation_count(const Graph& g, const std::vector<int>& f) {
  ThreeColoring t{f};
  int c = 0;
  for (auto [s, u] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    GoodnessReport r = is_good_graph(class_pair_graph(g, t, s, u));
    c += static_cast<int>(r.violations.size()) + (r.bipartite ? 0 : 1) + (r.subcubic ? 0 : 1);
  }
  return c;
}

std::pair<int, int> potential(const Graph& g, const std::vector<int>& f) {
  return {count_mono_neighborhoods(g, ThreeColoring{f}), violation_count(g, f)};
}

bool proper_at(const Graph& g, const std::vector<int>& f, int v) {
  for (int w : g.nbrs(v))
    if (f[w] == f[v]) return false;
  return true;
}

}  // namespace

ThreeColoring rainbow_free_coloring(const Graph& g, const std::vector<Edge>& S) {
  if (!is_subcubic(g)) throw std::invalid_argument("rainbow_free_coloring: graph is not subcubic");
  if (has_k4(g)) throw std::invalid_argument("rainbow_free_coloring: graph contains K4");
  Rainbow rb(g, S);
  ThreeColoring out;
  size_t nodes = 0;
  bool found = enumerate(
      g, rb,
      [&](const std::vector<int>& f) {
        out.colors = f;
        return true;
      },
      &nodes, 5'000'000);
  if (!found) throw std::runtime_error("rainbow_free_coloring: no proper rainbow-free 3-coloring");
  return out;
}

std::vector<int> exhaustive_good_coloring(const Graph& g, int cap) {
  if (g.n() > cap) throw std::length_error("exhaustive_good_coloring: graph above cap");
  Rainbow rb(g, {});
  std::vector<int> out;
  size_t nodes = 0;
  enumerate(
      g, rb,
      [&](const std::vector<int>& f) {
        if (violation_count(g, f) != 0) return false;
        out = f;
        return true;
      },
      &nodes, 200'000'000);
  return out;
}

ThreeColoring good_coloring(const Graph& g, GoodSearchStats* stats, bool check_pre) {
  GoodSearchStats st;
  if (check_pre) {
    if (!is_subcubic(g)) throw std::invalid_argument("good_coloring: graph is not subcubic");
    if (!is_triangle_free(g)) throw std::invalid_argument("good_coloring: graph has a triangle");
    Connectivity c = decompose_connectivity(g, false);
    if (g.n() < 3 || c.components.size() != 1 || !c.cut_vertices.empty())
      throw std::invalid_argument("good_coloring: graph is not 2-connected");
    auto bad = find_forbidden(g, true);
    if (!bad.empty()) throw std::invalid_argument("good_coloring: graph contains " + to_string(bad[0].kind));
  }
  Rainbow rb(g, {});
  std::vector<int> f = rainbow_free_coloring(g).colors;
  auto pot = potential(g, f);
  const int n = g.n();
  // Local moves: recolor one vertex, or a vertex together with one or two of
  // its neighbours (the shapes of the recoloring steps in the existence proof).
  auto try_set = [&](const std::vector<int>& vs, const std::vector<int>& cs) {
    std::vector<int> old;
    for (int v : vs) old.push_back(f[v]);
    bool changed = false;
    for (size_t i = 0; i < vs.size(); ++i) changed = changed || cs[i] != old[i], f[vs[i]] = cs[i];
    bool ok = changed;
    for (int v : vs) ok = ok && proper_at(g, f, v) && rb.clean_at(v, f);
    if (ok) {
      auto p = potential(g, f);
      if (p < pot) {
        pot = p;
        ++st.moves;
        return true;
      }
    }
    for (size_t i = 0; i < vs.size(); ++i) f[vs[i]] = old[i];
    return false;
  };
  bool improved = true;
  while (improved && pot.second > 0) {
    improved = false;
    for (int v = 0; v < n && !improved; ++v)
      for (int c = 1; c <= 3 && !improved; ++c) improved = try_set({v}, {c});
    for (int v = 0; v < n && !improved; ++v)
      for (int w : g.nbrs(v)) {
        if (improved) break;
        for (int a = 1; a <= 3 && !improved; ++a)
          for (int b = 1; b <= 3 && !improved; ++b) improved = try_set({v, w}, {a, b});
      }
    for (int v = 0; v < n && !improved; ++v) {
      const auto& nb = g.nbrs(v);
      for (size_t i = 0; i < nb.size() && !improved; ++i)
        for (size_t j = i + 1; j < nb.size() && !improved; ++j)
          for (int code = 0; code < 27 && !improved; ++code)
            improved = try_set({v, nb[i], nb[j]}, {code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1});
    }
  }
  if (pot.second > 0) {
    if (n > 24) throw std::runtime_error("good_coloring: local search stuck above the exhaustive cap");
    f = exhaustive_good_coloring(g);
    st.exhaustive = true;
    if (f.empty()) throw std::runtime_error("good_coloring: no good 3-coloring exists");
  }
  ThreeColoring out{f};
  std::string why;
  if (!verify_good_coloring(g, out, &why)) throw std::logic_error("good_coloring: result fails verification: " + why);
  if (stats) *stats = st;
  return out;
}

bool verify_good_coloring(const Graph& g, const ThreeColoring& f, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (static_cast<int>(f.colors.size()) != g.n()) return fail("coloring has the wrong length");
  for (int c : f.colors)
    if (c < 1 || c > 3) return fail("color outside 1..3");
  for (auto [u, v] : g.edges())
    if (f.colors[u] == f.colors[v]) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
  auto rb = rainbow_l0(g, f.colors);
  if (!rb.empty()) return fail("rainbow L0 at vertex " + std::to_string(rb[0][0]));
  for (auto [s, t] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    std::vector<int> vs;
    GoodnessReport r = is_good_graph(class_pair_graph(g, f, s, t, &vs));
    if (!r.good()) {
      std::string m = "classes " + std::to_string(s) + "," + std::to_string(t) + " not good";
      if (!r.violations.empty()) {
        m += ": " + r.violations[0].condition + " at";
        for (int v : r.violations[0].witness) m += " " + std::to_string(vs[v]);
      }
      return fail(m);
    }
  }
  return true;
}

std::string three_coloring_to_json(const ThreeColoring& f) {
  nlohmann::json j;
  j["colors"] = f.colors;
  return j.dump();
}

ThreeColoring three_coloring_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ThreeColoring f;
  f.colors = j.at("colors").get<std::vector<int>>();
  for (int c : f.colors)
    if (c < 1 || c > 3) throw std::invalid_argument("three-coloring values must be 1..3");
  return f;
}

}  // namespace tfc
