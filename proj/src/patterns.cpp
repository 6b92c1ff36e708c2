#include "tfc/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tfc/generate.hpp"

namespace tfc {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::K3: return "K3";
    case PatternKind::L0Copy: return "L0";
    case PatternKind::R: return "R";
    case PatternKind::LFamily: return "L";
    case PatternKind::LPrime: return "L-prime";
    case PatternKind::Hab: return "H";
    case PatternKind::RainbowL0: return "rainbow-L0";
  }
  return "?";
}

std::vector<std::vector<int>> find_embeddings(const Graph& p, const Graph& h, bool induced,
                                              size_t limit, const std::vector<char>* allowed) {
  const int pn = p.n();
  std::vector<std::vector<int>> out;
  if (pn == 0) {
    out.emplace_back();
    return out;
  }
  if (pn > h.n()) return out;
  // BFS order per pattern component, starting from a max-degree vertex.
  std::vector<int> order, anchor(pn, -1);
  std::vector<char> seen(pn, 0);
  while (static_cast<int>(order.size()) < pn) {
    int s = -1;
    for (int v = 0; v < pn; ++v)
      if (!seen[v] && (s < 0 || p.deg(v) > p.deg(s))) s = v;
    seen[s] = 1;
    size_t head = order.size();
    order.push_back(s);
    for (size_t i = head; i < order.size(); ++i)
      for (int w : p.nbrs(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          anchor[w] = order[i];
          order.push_back(w);
        }
  }
  std::vector<int> img(pn, -1);
  std::vector<int> pos(pn);
  for (int i = 0; i < pn; ++i) pos[order[i]] = i;
  std::vector<char> used(h.n(), 0);

  auto ok = [&](int pv, int hv) {
    if (used[hv] || h.deg(hv) < p.deg(pv)) return false;
    if (allowed && !(*allowed)[hv]) return false;
    for (int i = 0; i < pos[pv]; ++i) {
      int q = order[i];
      bool pe = p.has_edge(pv, q);
      bool he = h.has_edge(hv, img[q]);
      if (pe && !he) return false;
      if (induced && !pe && he) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == pn) {
      out.push_back(img);
      return limit && out.size() >= limit;
    }
    int pv = order[i];
    auto try_hv = [&](int hv) -> bool {
      if (!ok(pv, hv)) return false;
      img[pv] = hv;
      used[hv] = 1;
      bool stop = rec(i + 1);
      used[hv] = 0;
      img[pv] = -1;
      return stop;
    };
    if (anchor[pv] >= 0) {
      for (int hv : h.nbrs(img[anchor[pv]]))
        if (try_hv(hv)) return true;
    } else {
      for (int hv = 0; hv < h.n(); ++hv)
        if (try_hv(hv)) return true;
    }
    return false;
  };
  rec(0);
  return out;
}

bool is_isomorphic(const Graph& a, const Graph& b, std::vector<int>* map) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  auto e = find_embeddings(a, b, true, 1);
  if (e.empty()) return false;
  if (map) *map = e[0];
  return true;
}

std::vector<L0Copy> find_l0_copies(const Graph& g) {
  std::vector<L0Copy> out;
  for (int v1 = 0; v1 < g.n(); ++v1) {
    const auto& n1 = g.nbrs(v1);
    for (int u1 : n1)
      for (int u2 : n1) {
        if (u1 == u2) continue;
        for (int v4 : g.nbrs(u1)) {
          if (v4 == v1 || !g.has_edge(u2, v4)) continue;
          for (int v2 : n1) {
            if (v2 == u1 || v2 == u2) continue;
            for (int v3 : g.nbrs(v2)) {
              if (v3 == v1 || v3 == v4 || v3 == u1 || v3 == u2 || !g.has_edge(v3, v4)) continue;
              if (v2 == v4) continue;
              L0Copy c{v1, v2, v3, v4, u1, u2};
              // Reject non-induced copies (only possible with triangles).
              std::vector<int> vs(c.begin(), c.end());
              if (g.induced(vs).num_edges() != 7) continue;
              out.push_back(c);
            }
          }
        }
      }
  }
  return out;
}

std::vector<Edge> l0_edges(const L0Copy& c) {
  auto e = [](int a, int b) { return Edge(std::min(a, b), std::max(a, b)); };
  return {e(c[0], c[1]), e(c[1], c[2]), e(c[2], c[3]), e(c[0], c[4]),
          e(c[4], c[3]), e(c[0], c[5]), e(c[5], c[3])};
}

std::vector<std::vector<int>> l0_clusters(const Graph& g) {
  auto copies = find_l0_copies(g);
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<char> in(g.n(), 0);
  for (const auto& c : copies)
    for (int v : c) {
      in[v] = 1;
      parent[find(v)] = find(c[0]);
    }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.n(); ++v)
    if (in[v]) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(vs);
  return out;
}

ClusterClass classify_cluster(const Graph& g, const std::vector<int>& cluster) {
  ClusterClass cc;
  Graph h = g.induced(cluster);
  std::vector<int> m;
  if (h.n() == 7 && is_isomorphic(make_R(0), h, &m)) {
    cc.r0 = true;
    for (int& x : m) x = cluster[x];
    cc.map = m;
    return cc;
  }
  for (int k = 0; l_order(alternating_seq(1, k)) <= h.n(); ++k)
    for (int first : {1, 2}) {
      if (k == 0 && first == 2) break;
      auto seq = alternating_seq(first, k);
      if (l_order(seq) != h.n()) continue;
      if (is_isomorphic(make_L(seq), h, &m)) {
        cc.k = k;
        cc.seq = seq;
        for (int& x : m) x = cluster[x];
        cc.map = m;
        return cc;
      }
    }
  return cc;
}

std::vector<L0Copy> rainbow_l0(const Graph& g, const std::vector<int>& f, const std::vector<Edge>* skip) {
  std::set<Edge> sk;
  if (skip)
    for (auto [a, b] : *skip) sk.insert({std::min(a, b), std::max(a, b)});
  std::vector<L0Copy> out;
  for (const auto& c : find_l0_copies(g)) {
    int a = f[c[4]], b = f[c[0]], d = f[c[1]];
    if (f[c[5]] != a || f[c[2]] != b || f[c[3]] != d) continue;
    if (a == b || b == d || a == d) continue;
    bool hit = false;
    for (auto e : l0_edges(c))
      if (sk.count(e)) hit = true;
    if (!hit) out.push_back(c);
  }
  return out;
}

namespace {

void add_hits(const Graph& g, const Graph& pat, PatternKind kind, int index, const std::vector<int>& seq,
              const std::vector<char>* allowed, bool need_extra, std::set<std::vector<int>>& seen,
              std::vector<SubgraphWitness>& out, bool first_only) {
  for (auto& m : find_embeddings(pat, g, false, 0, allowed)) {
    std::vector<int> vs = m;
    std::sort(vs.begin(), vs.end());
    if (seen.count(vs)) continue;
    if (need_extra && g.induced(vs).num_edges() <= pat.num_edges()) continue;
    seen.insert(vs);
    SubgraphWitness w;
    w.kind = kind;
    w.index = index;
    w.seq = seq;
    w.map = m;
    w.vertices = vs;
    out.push_back(std::move(w));
    if (first_only) return;
  }
}

}  // namespace

std::vector<SubgraphWitness> find_forbidden(const Graph& g, bool first_only) {
  std::vector<SubgraphWitness> out;
  std::set<std::vector<int>> seen;
  auto clusters = l0_clusters(g);
  if (clusters.empty()) return out;
  std::vector<char> near(g.n(), 0);
  // Every R_i vertex lies within distance two of its base L_0.
  for (const auto& c : clusters)
    for (int v : c) {
      near[v] = 1;
      for (int w : g.nbrs(v)) {
        near[w] = 1;
        for (int x : g.nbrs(w)) near[x] = 1;
      }
    }
  for (int i = 1; i <= 7; ++i) {
    if (i == 6) continue;  // same graph as R_5
    add_hits(g, make_R(i), PatternKind::R, i, {}, &near, false, seen, out, first_only);
    if (first_only && !out.empty()) return out;
  }
  for (const auto& c : clusters) {
    std::vector<char> in(g.n(), 0);
    for (int v : c) in[v] = 1;
    const int cs = static_cast<int>(c.size());
    for (int k = 1; l_order(alternating_seq(1, k)) <= cs; ++k)
      for (int first : {1, 2}) {
        if (k % 2 == 0 && first == 2) continue;  // isomorphic to the first-1 sequence
        auto seq = alternating_seq(first, k);
        if (l_order(seq) > cs) continue;
        add_hits(g, make_L(seq), PatternKind::LPrime, k, seq, &in, true, seen, out, first_only);
        if (first_only && !out.empty()) return out;
      }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SubgraphWitness& a, const SubgraphWitness& b) { return a.vertices.size() < b.vertices.size(); });
  return out;
}

bool is_forbidden_free(const Graph& g) { return is_triangle_free(g) && find_forbidden(g, true).empty(); }

std::vector<SubgraphWitness> find_pattern(const Graph& g, PatternKind kind, int index, const std::vector<int>* colors) {
  std::vector<SubgraphWitness> out;
  auto push_map = [&](PatternKind k, int idx, std::vector<int> m) {
    SubgraphWitness w;
    w.kind = k;
    w.index = idx;
    w.vertices = m;
    std::sort(w.vertices.begin(), w.vertices.end());
    w.map = std::move(m);
    out.push_back(std::move(w));
  };
  switch (kind) {
    case PatternKind::K3:
      for (auto [u, v] : g.edges())
        for (int w : g.nbrs(v))
          if (w > v && g.has_edge(u, w)) push_map(kind, -1, {u, v, w});
      break;
    case PatternKind::L0Copy:
      for (const auto& c : find_l0_copies(g)) push_map(kind, -1, std::vector<int>(c.begin(), c.end()));
      break;
    case PatternKind::R: {
      if (index < 0 || index > 7) throw std::invalid_argument("R index out of range");
      for (auto& m : find_embeddings(make_R(index), g, false)) push_map(kind, index, m);
      break;
    }
    case PatternKind::LPrime:
      for (const auto& c : l0_clusters(g)) {
        auto cc = classify_cluster(g, c);
        SubgraphWitness w;
        w.kind = kind;
        w.index = cc.r0 ? -1 : cc.k;
        w.seq = cc.seq;
        w.map = cc.map;
        w.vertices = c;
        out.push_back(std::move(w));
      }
      break;
    case PatternKind::LFamily: {
      if (index < 0) throw std::invalid_argument("L pattern needs k");
      for (int first : {1, 2}) {
        auto seq = alternating_seq(first, index);
        for (auto& m : find_embeddings(make_L(seq), g, false)) {
          push_map(kind, index, m);
          out.back().seq = seq;
        }
        if (index == 0) break;
      }
      break;
    }
    case PatternKind::Hab: {
      std::vector<int> order;
      int a, b;
      if (as_H(g, &order, &a, &b)) push_map(kind, a * 100 + b, order);
      break;
    }
    case PatternKind::RainbowL0:
      if (!colors) throw std::invalid_argument("rainbow detection needs a coloring");
      for (const auto& c : rainbow_l0(g, *colors)) push_map(kind, -1, std::vector<int>(c.begin(), c.end()));
      break;
  }
  return out;
}

bool as_path(const Graph& g, std::vector<int>* order) {
  if (g.n() == 0 || !is_connected(g) || g.num_edges() != g.n() - 1 || g.max_degree() > 2) return false;
  if (order) {
    int s = 0;
    for (int v = 0; v < g.n(); ++v)
      if (g.deg(v) <= 1) {
        s = v;
        break;
      }
    order->assign(1, s);
    int prev = -1, cur = s;
    while (static_cast<int>(order->size()) < g.n()) {
      int nxt = -1;
      for (int w : g.nbrs(cur))
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
      order->push_back(cur);
    }
  }
  return true;
}

bool as_H(const Graph& g, std::vector<int>* order, int* pa, int* pb) {
  if (!is_connected(g) || g.num_edges() != g.n() - 1 || g.max_degree() > 3) return false;
  std::vector<int> d3;
  for (int v = 0; v < g.n(); ++v)
    if (g.deg(v) == 3) d3.push_back(v);
  if (d3.size() != 2 || !g.has_edge(d3[0], d3[1])) return false;
  Graph h = g;
  h.remove_edge(d3[0], d3[1]);
  auto comps = components(h);
  if (comps.size() != 2) return false;
  std::vector<std::vector<int>> sides;
  for (int s = 0; s < 2; ++s) {
    int hub = d3[s];
    auto& comp = (std::find(comps[0].begin(), comps[0].end(), hub) != comps[0].end()) ? comps[0] : comps[1];
    Graph p = h.induced(comp);
    std::vector<int> ord;
    if (!as_path(p, &ord)) return false;
    for (int& x : ord) x = comp[x];
    if (ord.size() < 4 || ord.size() % 2) return false;
    if (ord[1] != hub) std::reverse(ord.begin(), ord.end());
    if (ord[1] != hub) return false;
    sides.push_back(ord);
  }
  if (order) {
    order->clear();
    for (auto& s : sides) order->insert(order->end(), s.begin(), s.end());
  }
  if (pa) *pa = static_cast<int>(sides[0].size());
  if (pb) *pb = static_cast<int>(sides[1].size());
  return true;
}

}  // namespace tfc
