#include "tfc/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tfc {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

using Mask = uint64_t;

struct MisEnum {
  std::vector<Mask> non;  // complement adjacency
  size_t cap;
  std::vector<Mask> out;

  void rec(Mask r, Mask p, Mask x) {
    if (!p && !x) {
      if (out.size() >= cap) throw std::length_error("maximal_independent_sets: cap exceeded");
      out.push_back(r);
      return;
    }
    // Pivot with the most complement-neighbours in p.
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask t = px; t; t &= t - 1) {
      int u = std::countr_zero(t);
      int c = std::popcount(p & non[u]);
      if (c > best) best = c, pivot = u;
    }
    for (Mask t = p & ~non[pivot]; t; t &= t - 1) {
      int v = std::countr_zero(t);
      Mask bit = Mask{1} << v;
      rec(r | bit, p & non[v], x & non[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

std::vector<int> bits(Mask m) {
  std::vector<int> r;
  for (; m; m &= m - 1) r.push_back(std::countr_zero(m));
  return r;
}

}  // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, size_t cap) {
  int n = g.n();
  if (n > 64) throw std::length_error("maximal_independent_sets: n > 64");
  if (n == 0) return {{}};
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  MisEnum e;
  e.cap = cap;
  e.non.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    Mask adj = Mask{1} << v;
    for (int w : g.nbrs(v)) adj |= Mask{1} << w;
    e.non[v] = all & ~adj;
  }
  e.rec(0, all, 0);
  std::vector<std::vector<int>> res;
  for (Mask m : e.out) res.push_back(bits(m));
  std::sort(res.begin(), res.end());
  return res;
}

RationalLP chi_f_exact(const Graph& g, size_t cap) {
  int n = g.n();
  RationalLP lp;
  if (n == 0) return lp;
  auto sets = maximal_independent_sets(g, cap);
  int m = static_cast<int>(sets.size());
  // Dual LP: max sum y_v  s.t.  sum_{v in I} y_v <= 1 for every I, y >= 0.
  // Tableau columns: y_0..y_{n-1}, slacks s_0..s_{m-1}; last column is the rhs.
  int cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  for (int i = 0; i < m; ++i) {
    for (int v : sets[i]) t[i][v] = 1;
    t[i][n + i] = 1;
    t[i][cols] = 1;
  }
  std::vector<Rational> obj(cols + 1);
  for (int v = 0; v < n; ++v) obj[v] = -1;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Bland's rule: smallest entering index, smallest leaving basic index on ties.
  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("chi_f_exact: unbounded dual");
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational fct = t[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= fct * t[leave][j];
    }
    if (sgn(obj[enter]) != 0) {
      Rational fct = obj[enter];
      for (int j = 0; j <= cols; ++j)
        if (sgn(t[leave][j]) != 0) obj[j] -= fct * t[leave][j];
    }
    basis[leave] = enter;
  }

  lp.value = obj[cols];
  lp.dual.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) lp.dual[basis[i]] = t[i][cols];
  for (int i = 0; i < m; ++i)
    if (sgn(obj[n + i]) > 0) lp.weights.emplace_back(sets[i], obj[n + i]);
  return lp;
}

bool check_lp_certificate(const Graph& g, const RationalLP& lp, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  int n = g.n();
  std::vector<Rational> cover(n);
  Rational primal = 0;
  for (const auto& [set, w] : lp.weights) {
    if (sgn(w) < 0) return fail("negative weight");
    if (!is_independent(g, set)) return fail("weighted set is not independent");
    for (int v : set) cover[v] += w;
    primal += w;
  }
  for (int v = 0; v < n; ++v)
    if (cover[v] < 1) return fail("vertex " + std::to_string(v) + " covered less than once");
  if (static_cast<int>(lp.dual.size()) != n) return fail("dual has wrong length");
  Rational dual = 0;
  for (const auto& y : lp.dual) {
    if (sgn(y) < 0) return fail("negative dual value");
    dual += y;
  }
  for (const auto& set : maximal_independent_sets(g)) {
    Rational s = 0;
    for (int v : set) s += lp.dual[v];
    if (s > 1) return fail("dual violated on an independent set");
  }
  if (primal != dual || primal != lp.value) return fail("primal and dual values differ");
  return true;
}

}  // namespace tfc
