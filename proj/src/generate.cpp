#include "tfc/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tfc {

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_star(int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("negative star parameter");
  Graph g(1 + alpha + 2 * beta);
  for (int i = 0; i < alpha; ++i) g.add_edge(0, 1 + i);
  for (int j = 0; j < beta; ++j) {
    int y = 1 + alpha + 2 * j;
    g.add_edge(0, y);
    g.add_edge(y, y + 1);
  }
  return g;
}

Graph make_spider(const std::vector<int>& legs) {
  int n = 1;
  for (int l : legs) {
    if (l < 1) throw std::invalid_argument("spider legs must be positive");
    n += l;
  }
  Graph g(n);
  int next = 1;
  for (int l : legs) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph make_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw std::invalid_argument("bad generalized Petersen parameters");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    g.add_edge(i, n + i);
    int a = n + i, b = n + (i + k) % n;
    if (!g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

namespace {

Graph l0_base() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  g.add_edge(0, 5);
  g.add_edge(3, 5);
  return g;
}

}  // namespace

Graph make_R(int i) {
  if (i < 0 || i > 7) throw std::invalid_argument("R index must be in 0..7");
  constexpr int T = 4, Bt = 5, e1 = 6, e2 = 7;
  Graph g = l0_base();
  g.add_vertex();
  if (i == 0 || i == 3) {
    g.add_edge(T, e1);
    g.add_edge(2, e1);
    if (i == 3) g.add_edge(Bt, e1);
    return g;
  }
  g.add_vertex();
  switch (i) {
    case 1:
      g.add_edge(T, e1), g.add_edge(2, e1), g.add_edge(e1, e2), g.add_edge(1, e2);
      break;
    case 2:
      g.add_edge(T, e1), g.add_edge(2, e1), g.add_edge(e1, e2), g.add_edge(Bt, e2);
      break;
    case 4:
      g.add_edge(T, e1), g.add_edge(Bt, e1), g.add_edge(e1, e2), g.add_edge(1, e2);
      break;
    case 5:
    case 6:
      g.add_edge(T, e1), g.add_edge(2, e1), g.add_edge(e1, e2);
      g.add_edge(Bt, e2), g.add_edge(1, e2);
      break;
    case 7:
      g.add_edge(T, e1), g.add_edge(2, e1), g.add_edge(1, e2), g.add_edge(Bt, e2);
      break;
  }
  return g;
}

std::vector<int> alternating_seq(int first, int k) {
  std::vector<int> s;
  for (int i = 0; i < k; ++i) s.push_back(i % 2 == 0 ? first : 3 - first);
  return s;
}

int l_order(const std::vector<int>& seq) {
  int n = 6;
  for (int op : seq) n += op == 1 ? 2 : 4;
  return n;
}

Graph make_L(const std::vector<int>& seq, LInfo* info) {
  Graph g = l0_base();
  struct Pair {
    int a, b;
    bool adjacent;
  };
  std::vector<Pair> pairs{{1, 2, true}, {4, 5, false}};
  for (int op : seq) {
    if (op != 1 && op != 2) throw std::invalid_argument("L sequence values must be 1 or 2");
    bool want_adjacent = (op == 2);
    int idx = -1;
    for (int i = static_cast<int>(pairs.size()) - 1; i >= 0; --i)
      if (pairs[i].adjacent == want_adjacent) {
        idx = i;
        break;
      }
    if (idx < 0) throw std::invalid_argument("no free pair for this operation");
    Pair p = pairs[idx];
    pairs.erase(pairs.begin() + idx);
    if (op == 1) {
      int y = g.add_vertex(), z = g.add_vertex();
      g.add_edge(p.a, y);
      g.add_edge(y, z);
      g.add_edge(z, p.b);
      pairs.push_back({y, z, true});
    } else {
      int c0 = g.add_vertex(), c1 = g.add_vertex(), c2 = g.add_vertex(), c3 = g.add_vertex();
      g.add_edge(c0, c1);
      g.add_edge(c1, c2);
      g.add_edge(c2, c3);
      g.add_edge(c0, c3);
      g.add_edge(p.a, c1);
      g.add_edge(p.b, c3);
      pairs.push_back({c0, c2, false});
    }
  }
  if (info) {
    info->seq = seq;
    info->w = pairs[0].a;
    info->x = pairs[0].b;
    info->wx_adjacent = pairs[0].adjacent;
    info->y = pairs[1].a;
    info->z = pairs[1].b;
    info->yz_adjacent = pairs[1].adjacent;
  }
  return g;
}

Graph make_H(int a, int b) {
  if (a < 4 || b < 4 || a % 2 || b % 2) throw std::invalid_argument("H(a,b) needs even a,b >= 4");
  Graph g(a + b);
  for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
  for (int j = 0; j + 1 < b; ++j) g.add_edge(a + j, a + j + 1);
  g.add_edge(1, a + 1);
  return g;
}

int superH_index(int t, int ui) {
  if (ui <= 4) return ui - 1;
  return 4 + 2 * t + (ui - 5);
}

Graph make_superH(int t) {
  if (t < 0) throw std::invalid_argument("superH needs t >= 0");
  int len = 8 + 2 * t;
  Graph g = make_path(len);
  for (int ui = 3; ui <= 6; ++ui) {
    int leaf = g.add_vertex();
    g.add_edge(superH_index(t, ui), leaf);
  }
  return g;
}

Graph random_tf_subcubic(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(n));
  auto uni = [&](int k) { return static_cast<int>(rng() % static_cast<uint64_t>(k)); };
  Graph g(n);
  // Random spanning tree with degree at most 3.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uni(i + 1)]);
  for (int i = 1; i < n; ++i) {
    std::vector<int> open;
    for (int j = 0; j < i; ++j)
      if (g.deg(order[j]) < 3) open.push_back(order[j]);
    int p = open[uni(static_cast<int>(open.size()))];
    g.add_edge(std::min(p, order[i]), std::max(p, order[i]));
  }
  // Extra edges toward cubic, skipping anything that closes a triangle.
  int density = 40 + uni(61);  // percent of deficient degree to fill
  int deficit = 0;
  for (int v = 0; v < n; ++v) deficit += 3 - g.deg(v);
  int target = deficit * density / 200;
  for (int tries = 0; tries < 40 * n && target > 0; ++tries) {
    int u = uni(n), v = uni(n);
    if (u == v || g.deg(u) >= 3 || g.deg(v) >= 3 || g.has_edge(u, v)) continue;
    bool tri = false;
    for (int w : g.nbrs(u))
      if (g.has_edge(v, w)) tri = true;
    if (tri) continue;
    g.add_edge(std::min(u, v), std::max(u, v));
    --target;
  }
  return g;
}

Graph generate(const std::string& family, const std::vector<int>& params, uint64_t seed) {
  auto need = [&](size_t k) {
    if (params.size() < k) throw std::invalid_argument(family + " needs " + std::to_string(k) + " params");
  };
  if (family == "path") return need(1), make_path(params[0]);
  if (family == "cycle") return need(1), make_cycle(params[0]);
  if (family == "star") return need(2), make_star(params[0], params[1]);
  if (family == "spider") return make_spider(params);
  if (family == "petersen") return need(2), make_petersen(params[0], params[1]);
  if (family == "R") return need(1), make_R(params[0]);
  if (family == "L") return make_L(params);
  if (family == "H") return need(2), make_H(params[0], params[1]);
  if (family == "superH") return need(1), make_superH(params[0]);
  if (family == "random") return need(1), random_tf_subcubic(params[0], seed);
  throw std::invalid_argument("unknown family " + family);
}

}  // namespace tfc
