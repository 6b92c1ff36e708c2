#include "tfc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"

namespace tfc {

ColorSet set_intersection(const ColorSet& x, const ColorSet& y) {
  ColorSet r;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
  return r;
}

ColorSet set_union(const ColorSet& x, const ColorSet& y) {
  ColorSet r;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
  return r;
}

ColorSet set_minus(const ColorSet& x, const ColorSet& y) {
  ColorSet r;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
  return r;
}

bool disjoint(const ColorSet& x, const ColorSet& y) {
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return false;
    x[i] < y[j] ? ++i : ++j;
  }
  return true;
}

Verdict verify_set_coloring(const Graph& g, const SetColoring& f, int a, int b) {
  Verdict out;
  if (static_cast<int>(f.sets.size()) != g.n()) {
    out.fail("coloring has " + std::to_string(f.sets.size()) + " sets for " +
             std::to_string(g.n()) + " vertices");
    return out;
  }
  for (int v = 0; v < g.n(); ++v) {
    const auto& s = f.sets[v];
    if (static_cast<int>(s.size()) != b)
      out.fail("vertex " + std::to_string(v) + " has " + std::to_string(s.size()) + " colors");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > a) out.fail("vertex " + std::to_string(v) + " uses color " + std::to_string(s[i]));
      if (i > 0 && s[i - 1] >= s[i]) out.fail("vertex " + std::to_string(v) + " set not strictly sorted");
    }
  }
  for (auto [u, v] : g.edges())
    if (!disjoint(f.sets[u], f.sets[v]))
      out.fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " shares a color");
  return out;
}

SetColoring uplus(const SetColoring& f, const SetColoring& g) {
  if (f.sets.size() != g.sets.size()) throw std::invalid_argument("uplus: vertex sets differ");
  SetColoring r;
  r.a = f.a + g.a;
  r.b = (f.b && g.b) ? f.b + g.b : 0;
  r.sets.resize(f.sets.size());
  for (size_t v = 0; v < f.sets.size(); ++v) {
    r.sets[v] = f.sets[v];
    for (int y : g.sets[v]) r.sets[v].push_back(y + f.a);
  }
  return r;
}

SetColoring trim(const SetColoring& f, int b) {
  SetColoring r = f;
  r.b = b;
  for (auto& s : r.sets) {
    if (static_cast<int>(s.size()) < b) throw std::invalid_argument("trim: set smaller than fold");
    s.resize(b);
  }
  return r;
}

SetColoring scale(const SetColoring& f, int t) {
  SetColoring r;
  r.a = f.a * t;
  r.b = f.b * t;
  r.sets.resize(f.sets.size());
  for (size_t v = 0; v < f.sets.size(); ++v)
    for (int c : f.sets[v])
      for (int i = 1; i <= t; ++i) r.sets[v].push_back((c - 1) * t + i);
  return r;
}

namespace {

using Mask = uint64_t;

Mask to_mask(const ColorSet& s) {
  Mask m = 0;
  for (int c : s) m |= Mask{1} << (c - 1);
  return m;
}

ColorSet from_mask(Mask m) {
  ColorSet s;
  for (int c = 0; m; ++c, m >>= 1)
    if (m & 1) s.push_back(c + 1);
  return s;
}

struct Search {
  const Graph& g;
  int a, b;
  Mask full;
  std::vector<Mask> req, forb;
  std::vector<std::vector<const PairBound*>> pairs_at;
  Mask constrained = 0;  // colors named by some constraint
  std::vector<int> order;
  std::vector<Mask> col;
  std::vector<char> done;
  size_t nodes = 0, limit;

  Search(const Graph& g_, int a_, int b_, const SearchConstraints* c)
      : g(g_), a(a_), b(b_), limit(c ? c->node_limit : 2'000'000) {
    full = a == 64 ? ~Mask{0} : (Mask{1} << a) - 1;
    int n = g.n();
    req.assign(n, 0);
    forb.assign(n, 0);
    pairs_at.assign(n, {});
    if (c) {
      for (size_t v = 0; v < c->required.size() && v < req.size(); ++v) req[v] = to_mask(c->required[v]);
      for (size_t v = 0; v < c->forbidden.size() && v < forb.size(); ++v) forb[v] = to_mask(c->forbidden[v]);
      for (const auto& p : c->pairs) {
        pairs_at[p.u].push_back(&p);
        pairs_at[p.v].push_back(&p);
      }
    }
    for (int v = 0; v < n; ++v) constrained |= req[v] | forb[v];
    col.assign(n, 0);
    done.assign(n, 0);
    // Order: repeatedly take the vertex with most placed neighbours.
    std::vector<int> placed(n, 0);
    std::vector<char> in(n, 0);
    for (int it = 0; it < n; ++it) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        if (best < 0 || placed[v] > placed[best] ||
            (placed[v] == placed[best] && g.deg(v) > g.deg(best)))
          best = v;
      }
      in[best] = 1;
      order.push_back(best);
      for (int w : g.nbrs(best)) ++placed[w];
    }
  }

  Mask allowed(int v) const {
    Mask m = full & ~forb[v];
    for (int w : g.nbrs(v))
      if (done[w]) m &= ~col[w];
    return m;
  }

  bool pair_ok(int v) const {
    for (const PairBound* p : pairs_at[v]) {
      int o = p->u == v ? p->v : p->u;
      if (!done[o]) continue;
      int k = std::popcount(col[v] & col[o]);
      if (k < p->lo || k > p->hi) return false;
    }
    return true;
  }

  bool forward_ok(int v) const {
    for (int w : g.nbrs(v)) {
      if (done[w]) continue;
      Mask m = allowed(w);
      if ((m & req[w]) != req[w] || std::popcount(m) < b) return false;
    }
    return true;
  }

  void subsets(Mask pool, int k, Mask acc, std::vector<Mask>& out) const {
    if (k == 0) {
      out.push_back(acc);
      return;
    }
    if (std::popcount(pool) < k) return;
    Mask low = pool & (~pool + 1);
    subsets(pool & ~low, k - 1, acc | low, out);
    subsets(pool & ~low, k, acc, out);
  }

  bool rec(size_t i) {
    if (i == order.size()) return true;
    if (++nodes > limit) throw std::runtime_error("search_ab_coloring: node limit reached");
    int v = order[i];
    Mask avail = allowed(v);
    if ((avail & req[v]) != req[v]) return false;
    int k = b - std::popcount(req[v]);
    if (k < 0) return false;
    Mask used = 0;
    for (int u = 0; u < g.n(); ++u)
      if (done[u]) used |= col[u];
    Mask fresh = avail & ~used & ~constrained & ~req[v];
    Mask other = avail & ~fresh & ~req[v];
    std::vector<Mask> cands;
    // Fresh colors are interchangeable: only their lowest j are tried.
    for (int j = 0; j <= k && j <= std::popcount(fresh); ++j) {
      Mask fj = 0, rest = fresh;
      for (int t = 0; t < j; ++t) {
        Mask low = rest & (~rest + 1);
        fj |= low;
        rest &= ~low;
      }
      std::vector<Mask> part;
      subsets(other, k - j, 0, part);
      for (Mask p : part) cands.push_back(p | fj | req[v]);
    }
    std::sort(cands.begin(), cands.end(), [](Mask x, Mask y) {
      // Lexicographic on sorted color lists.
      Mask d = x ^ y;
      Mask low = d & (~d + 1);
      return (x & low) != 0;
    });
    done[v] = 1;
    for (Mask c : cands) {
      col[v] = c;
      if (!pair_ok(v) || !forward_ok(v)) continue;
      if (rec(i + 1)) return true;
    }
    done[v] = 0;
    col[v] = 0;
    return false;
  }
};

}  // namespace

std::optional<SetColoring> search_ab_coloring(const Graph& g, int a, int b, const SearchConstraints* cons) {
  if (a < 1 || a > 64 || b < 0 || b > a) throw std::invalid_argument("search_ab_coloring: need 1 <= b <= a <= 64");
  Search s(g, a, b, cons);
  if (!s.rec(0)) return std::nullopt;
  SetColoring f;
  f.a = a;
  f.b = b;
  for (int v = 0; v < g.n(); ++v) f.sets.push_back(from_mask(s.col[v]));
  return f;
}

std::string coloring_to_json(const SetColoring& f) {
  nlohmann::json j;
  j["a"] = f.a;
  if (f.b)
    j["b"] = f.b;
  else
    j["b"] = nullptr;
  j["sets"] = f.sets;
  return j.dump();
}

SetColoring coloring_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SetColoring f;
  f.a = j.at("a").get<int>();
  f.b = j.at("b").is_null() ? 0 : j.at("b").get<int>();
  f.sets = j.at("sets").get<std::vector<ColorSet>>();
  for (auto& s : f.sets) std::sort(s.begin(), s.end());
  return f;
}

}  // namespace tfc
