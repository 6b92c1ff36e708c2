#pragma once
// Random inputs and brute-force oracles shared by the tests, the acceptance
// binary and the suite runner. Nothing here calls into the code under test
// except graph builders.

#include <algorithm>
#include <random>
#include <vector>

#include "tfc/avoid.hpp"
#include "tfc/generate.hpp"
#include "tfc/graph.hpp"

namespace tfc::testing {

using Rng = std::mt19937_64;

inline int popcount14(Mask m) { return __builtin_popcount(m); }

// Random subset of [14] - avoid with `size` colors (fewer if unavailable).
inline Mask rnd(Rng& rng, int size, Mask avoid = 0) {
  std::vector<int> pool;
  for (int c = 0; c < 14; ++c)
    if (!(avoid >> c & 1)) pool.push_back(c);
  std::shuffle(pool.begin(), pool.end(), rng);
  Mask m = 0;
  for (int i = 0; i < size && i < static_cast<int>(pool.size()); ++i) m |= static_cast<Mask>(1u << pool[i]);
  return m;
}

// Random subset of `from` with at most `size` colors.
inline Mask pick(Rng& rng, Mask from, int size) { return rnd(rng, size, static_cast<Mask>(kFull14 & ~from)); }

// Sizes skewed toward the maximum.
inline int sz(Rng& rng, int cap) { return rng() % 4 == 0 ? static_cast<int>(rng() % (cap + 1)) : cap; }

inline bool oracle_avoiding(const Graph& g, const std::vector<Mask>& F, const std::vector<Mask>& f) {
  if (static_cast<int>(f.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (f[v] & F[v] || f[v] & ~kFull14) return false;
  for (auto [u, v] : g.edges())
    if (f[u] & f[v]) return false;
  return true;
}

inline std::vector<Mask> sample_odd_path(Rng& rng, int n, int r1, int rend) {
  std::vector<Mask> F(n);
  for (int i = 1; i + 1 < n; ++i) F[i] = rnd(rng, sz(rng, 2));
  // End sets: at most r overlap with the neighbour's set.
  auto end = [&](int e, int nb, int r) {
    Mask ov = pick(rng, F[nb], static_cast<int>(rng() % (r + 1)));
    F[e] = ov | rnd(rng, sz(rng, 3 + r) - popcount14(ov), F[nb] | ov);
  };
  end(0, 1, r1);
  end(n - 1, n - 2, rend);
  return F;
}

// F on v_1..v_2k satisfying the hypothesis of the given statement. Index 0 is
// unused so that F[i] is F(v_i).
inline std::vector<Mask> sample_even_statement(Rng& rng, int s) {
  int k;
  switch (s) {
    case 1: k = 1; break;
    case 2: k = 2; break;
    case 9: k = 4; break;
    case 7: case 12: k = 2 + rng() % 5; break;
    case 6: case 11: k = 4 + rng() % 4; break;
    case 10: k = 5 + rng() % 3; break;
    default: k = 3 + rng() % 5; break;
  }
  int n = 2 * k;
  std::vector<Mask> F(n + 1, 0);
  auto cap = [&](int i) { return (i == 1 || i == n) ? 4 : 2; };
  auto fill_rest = [&](const std::vector<char>& set) {
    for (int i = 1; i <= n; ++i)
      if (!set[i]) F[i] = rnd(rng, sz(rng, cap(i)));
  };
  auto last_pair = [&]() { F[n] = rnd(rng, sz(rng, cap(n)), F[n - 1]); };
  std::vector<char> set(n + 1, 0);
  switch (s) {
    case 1:
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 4), F[1]);
      break;
    case 2:
      do {
        F[1] = rnd(rng, sz(rng, 4));
        F[2] = rnd(rng, sz(rng, 2), F[1]);
        F[3] = rnd(rng, sz(rng, 2));
        F[4] = rnd(rng, sz(rng, 4), F[3]);
      } while (popcount14(F[1] & F[4]) > 2);
      break;
    case 3: case 5: {
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      for (int j = 2; j <= k; ++j) {
        // F(v_{2j-1}) first, then F(v_{2j}) inside F(v_{2j-3}) and outside it.
        Mask avoid = (j == k) ? F[2 * k - 3] : 0;
        F[2 * j - 1] = rnd(rng, sz(rng, 2), avoid);
        if (j < k) F[2 * j] = pick(rng, static_cast<Mask>(F[2 * j - 3] & ~F[2 * j - 1]), sz(rng, 2));
      }
      if (s == 3) {
        Mask extra = rnd(rng, 4 - popcount14(F[2 * k - 3]), F[2 * k - 3] | F[2 * k - 1] | F[1]);
        F[n] = F[2 * k - 3] | pick(rng, extra, static_cast<int>(rng() % 5));
      } else {
        F[n] = rnd(rng, sz(rng, 4), F[2 * k - 3] | F[2 * k - 1]);
      }
      return F;
    }
    case 4:
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      F[3] = rnd(rng, sz(rng, 2));
      F[4] = rnd(rng, sz(rng, 2), F[1] | F[3]);
      set[1] = set[2] = set[3] = set[4] = 1;
      fill_rest(set);
      last_pair();
      break;
    case 6: {
      int t = rng() % (k - 3);
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      F[3] = rnd(rng, sz(rng, 2));
      F[4] = pick(rng, static_cast<Mask>(F[1] & ~F[3]), sz(rng, 2));
      for (int i = 1; i <= t; ++i) {
        F[2 * i + 3] = rnd(rng, sz(rng, 2));
        F[2 * i + 4] = pick(rng, static_cast<Mask>(F[2 * i + 1] & ~F[2 * i + 3]), sz(rng, 2));
      }
      F[2 * t + 5] = rnd(rng, sz(rng, 2));
      F[2 * t + 6] = rnd(rng, sz(rng, cap(2 * t + 6)), F[2 * t + 3] | F[2 * t + 5] | (F[1] & ~F[4]));
      for (int i = 1; i <= 2 * t + 6; ++i) set[i] = 1;
      fill_rest(set);
      if (2 * t + 6 < n) last_pair();
      break;
    }
    case 7: {
      F[1] = rnd(rng, sz(rng, 2));
      Mask ov = pick(rng, F[1], 1);
      F[2] = ov | rnd(rng, sz(rng, 2) - popcount14(ov), F[1]);
      set[1] = set[2] = 1;
      fill_rest(set);
      last_pair();
      break;
    }
    case 8:
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      F[3] = pick(rng, F[1], sz(rng, 2));
      set[1] = set[2] = set[3] = 1;
      fill_rest(set);
      last_pair();
      break;
    case 9: case 10: {
      F[4] = rnd(rng, sz(rng, 2));
      F[6] = rnd(rng, sz(rng, 2));
      F[1] = F[4] | F[6];
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      F[3] = rnd(rng, sz(rng, 2));
      F[5] = rnd(rng, sz(rng, 2));
      F[7] = rnd(rng, sz(rng, 2));
      Mask avoid = F[5] | F[7] | (s == 10 ? F[3] : 0);
      F[8] = rnd(rng, sz(rng, cap(8)), avoid);
      for (int i = 1; i <= 8; ++i) set[i] = 1;
      fill_rest(set);
      if (s == 10) last_pair();
      break;
    }
    case 11: {
      int t = rng() % (k - 3);
      int variant = t == k - 4 ? 0 : t == k - 5 ? 1 : 2;
      F[6] = rnd(rng, sz(rng, 2));
      F[4] = rnd(rng, sz(rng, 2));
      F[1] = F[4] | F[6];
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      F[3] = rnd(rng, sz(rng, 2));
      F[5] = rnd(rng, sz(rng, 2), F[6]);
      set[1] = set[2] = set[3] = set[4] = set[5] = set[6] = 1;
      for (int i = 0; i <= t; ++i) {
        // F(v_{2i+7}) before F(v_{2i+8}) = F(v_{2i+5}).
        int o = 2 * i + 7, e = 2 * i + 8;
        if (!set[o]) F[o] = rnd(rng, sz(rng, cap(o)), i < t || variant == 0 ? F[2 * i + 5] : 0), set[o] = 1;
        if (e == n && variant == 0)
          F[e] = F[2 * i + 5] | rnd(rng, static_cast<int>(rng() % 3), F[2 * i + 5] | F[3] | F[o]);
        else
          F[e] = F[2 * i + 5];
        set[e] = 1;
      }
      if (variant == 1) {
        if (!set[n - 1]) F[n - 1] = rnd(rng, sz(rng, 2)), set[n - 1] = 1;
        if (!set[n - 3]) F[n - 3] = rnd(rng, sz(rng, 2)), set[n - 3] = 1;
        F[n] = rnd(rng, sz(rng, 4), F[n - 1] | F[n - 3]);
        set[n] = 1;
      } else if (variant == 2) {
        int a = 2 * t + 7, b = 2 * t + 9, c = 2 * t + 10;
        if (!set[a]) F[a] = rnd(rng, sz(rng, 2)), set[a] = 1;
        if (!set[b]) F[b] = rnd(rng, sz(rng, 2)), set[b] = 1;
        F[c] = rnd(rng, sz(rng, cap(c)), F[3] | F[a] | F[b]);
        set[c] = 1;
      }
      fill_rest(set);
      if (variant == 2) F[n] &= ~F[n - 1];
      break;
    }
    case 12: {
      std::vector<int> choices;
      for (int i = 1; i <= n; ++i)
        if (i != 2 && i != n - 1) choices.push_back(i);
      int i = choices[rng() % choices.size()];
      F[1] = rnd(rng, sz(rng, 4));
      F[2] = rnd(rng, sz(rng, 2), F[1]);
      set[1] = set[2] = 1;
      fill_rest(set);
      last_pair();
      F[i] = (i == 1 || i == n) ? pick(rng, F[i], 2) : Mask{0};
      break;
    }
  }
  return F;
}

// (a:b)-coloring check written against the definition.
inline bool oracle_ab(const Graph& g, const std::vector<std::vector<int>>& sets, int a, int b) {
  if (static_cast<int>(sets.size()) != g.n()) return false;
  std::vector<std::vector<char>> mark(g.n(), std::vector<char>(a + 1, 0));
  for (int v = 0; v < g.n(); ++v) {
    int distinct = 0;
    for (int c : sets[v]) {
      if (c < 1 || c > a || mark[v][c]) return false;
      mark[v][c] = 1;
      ++distinct;
    }
    if (distinct != b) return false;
  }
  for (auto [u, v] : g.edges())
    for (int c : sets[u])
      if (mark[v][c]) return false;
  return true;
}

// Drops the unused slot 0.
inline std::vector<Mask> path_F(const std::vector<Mask>& F1) { return {F1.begin() + 1, F1.end()}; }

// Kernel existence by subset enumeration.
inline bool brute_has_kernel(const Digraph& d) {
  int n = d.n();
  for (uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      bool in = m >> v & 1, hit = false;
      for (int w : d.out(v)) {
        if (in && (m >> w & 1)) ok = false;
        hit = hit || (m >> w & 1);
      }
      if (!in && !hit) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Odd closed directed walk through some vertex, found on the parity cover.
inline bool brute_odd_dicycle(const Digraph& d) {
  int n = d.n();
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(2 * n, 0);
    std::vector<int> st{2 * s};
    seen[2 * s] = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int w : d.out(x / 2)) {
        int y = 2 * w + (x % 2 ^ 1);
        if (y == 2 * s + 1) return true;
        if (!seen[y]) seen[y] = 1, st.push_back(y);
      }
    }
  }
  return false;
}

// F meeting the |F(v)| <= 6-2deg, leaf-disjointness and M-sharing clauses of
// obedience.
inline std::vector<Mask> obedient_F(Rng& rng, const Graph& g, const std::vector<Edge>& Mt) {
  int n = g.n();
  std::vector<Mask> F(n, 0);
  for (int v = 0; v < n; ++v) {
    Mask avoid = 0, part = 0;
    for (int w : g.nbrs(v))
      if (g.deg(v) == 1 || g.deg(w) == 1) avoid |= F[w];
    for (auto [x, y] : Mt) {
      if (x == v) part = F[y];
      if (y == v) part = F[x];
    }
    int want = sz(rng, std::max(0, 6 - 2 * g.deg(v)));
    Mask m = want > 0 ? pick(rng, part, 1) : Mask{0};
    F[v] = m | rnd(rng, want - popcount14(m), avoid | part);
  }
  return F;
}

// Bipartite subcubic graph: random tree plus a few edges across the sides.
// Goodness is left to the caller.
inline Graph sample_bipartite_subcubic(Rng& rng, int n, int extra = 4) {
  Graph g(n);
  std::vector<int> side(n, 0);
  for (int i = 1; i < n; ++i) {
    std::vector<int> open;
    for (int j = 0; j < i; ++j)
      if (g.deg(j) < 3) open.push_back(j);
    int p = open[rng() % open.size()];
    g.add_edge(p, i);
    side[i] = 1 - side[p];
  }
  for (int e = 0; e < extra; ++e) {
    int a = rng() % n, b = rng() % n;
    if (side[a] != side[b] && !g.has_edge(a, b) && g.deg(a) < 3 && g.deg(b) < 3) g.add_edge(a, b);
  }
  return g;
}

// F on make_H(a, b) inside the color_H hypotheses. The v-side is redrawn
// until some even-path statement holds for it in either direction.
inline std::vector<Mask> sample_H_F(Rng& rng, int a, int b, bool (*holds)(const std::vector<Mask>&)) {
  Graph h = make_H(a, b);
  std::vector<Mask> F(h.n(), 0);
  auto cap = [&](int v) { return std::max(0, 6 - 2 * h.deg(v)); };
  for (;;) {
    for (int v = 0; v < a; ++v) F[v] = rnd(rng, sz(rng, cap(v)));
    if (holds({F.begin(), F.begin() + a})) break;
  }
  for (int v = a; v < a + b; ++v) F[v] = rnd(rng, sz(rng, cap(v)));
  F[a + b - 1] = rnd(rng, sz(rng, cap(a + b - 1)), F[a + b - 2]);
  return F;
}

// Digraph without odd directed cycles: either arcs only across a random
// bipartition (both directions allowed) or a sparse random digraph that
// passes the parity-cover check.
inline Digraph sample_even_digraph(Rng& rng, int n) {
  for (;;) {
    Digraph d(n);
    bool split = rng() % 2;
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = rng() % 2;
    int pct = split ? 20 + rng() % 30 : 5 + rng() % 15;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && (!split || side[u] != side[v]) && static_cast<int>(rng() % 100) < pct) d.add_arc(u, v);
    if (!brute_odd_dicycle(d)) return d;
  }
}

inline MultiGraph sample_multigraph(Rng& rng, int n) {
  MultiGraph g;
  g.n = n;
  int m = rng() % (3 * n + 1);
  for (int i = 0; i < m; ++i) {
    int u = rng() % n, v = rng() % n;
    if (u != v) g.edges.push_back({u, v});
    if (u != v && rng() % 6 == 0) g.edges.push_back({v, u});  // parallel edge
  }
  return g;
}

// alpha by bitmask enumeration, n <= 24.
inline int brute_alpha(const Graph& g) {
  int n = g.n(), best = 0;
  std::vector<uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) nb[u] |= 1u << v, nb[v] |= 1u << u;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    int c = __builtin_popcount(m);
    if (c <= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (m >> v & 1 && nb[v] & m) ok = false;
    if (ok) best = c;
  }
  return best;
}

}  // namespace tfc::testing
