#include "tfc/avoid.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>

#include "tfc/generate.hpp"

namespace tfc {

namespace detail {
std::atomic<long> even_dp{0}, pinned_retry{0}, exact_single{0};
}

FallbackCounters fallback_counters() {
  return {detail::even_dp.load(), detail::pinned_retry.load(), detail::exact_single.load()};
}

void reset_fallback_counters() {
  detail::even_dp = 0;
  detail::pinned_retry = 0;
  detail::exact_single = 0;
}

Mask mask_of(const ColorSet& s) {
  Mask m = 0;
  for (int c : s) {
    if (c < 1 || c > 14) throw std::invalid_argument("color outside [14]: " + std::to_string(c));
    m |= static_cast<Mask>(1u << (c - 1));
  }
  return m;
}

ColorSet colors_of(Mask m) {
  ColorSet s;
  for (int c = 1; c <= 14; ++c)
    if (m >> (c - 1) & 1) s.push_back(c);
  return s;
}

int popc(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

std::string mask_str(Mask m) {
  std::string s = "{";
  for (int c : colors_of(m)) s += (s.size() > 1 ? "," : "") + std::to_string(c);
  return s + "}";
}

Mask lowest(Mask m, int k) {
  Mask r = 0;
  for (int c = 0; c < 14 && k > 0; ++c)
    if (m >> c & 1) r |= static_cast<Mask>(1u << c), --k;
  return r;
}

Mask highest(Mask m, int k) {
  Mask r = 0;
  for (int c = 13; c >= 0 && k > 0; --c)
    if (m >> c & 1) r |= static_cast<Mask>(1u << c), --k;
  return r;
}

SetColoring to_set_coloring(const std::vector<Mask>& f) {
  SetColoring s;
  s.a = 14;
  s.b = 0;
  for (Mask m : f) s.sets.push_back(colors_of(m));
  return s;
}

Verdict verify_avoiding(const Graph& g, const std::vector<Mask>& F, const std::vector<Mask>& f) {
  Verdict out;
  if (static_cast<int>(f.size()) != g.n() || static_cast<int>(F.size()) != g.n()) {
    out.fail("size mismatch between graph, F and f");
    return out;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (f[v] & ~kFull14) out.fail("vertex " + std::to_string(v) + " uses a color outside [14]");
    if (f[v] & F[v]) out.fail("vertex " + std::to_string(v) + " uses forbidden " + mask_str(f[v] & F[v]));
  }
  for (auto [u, v] : g.edges())
    if (f[u] & f[v]) out.fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " shares " + mask_str(f[u] & f[v]));
  return out;
}

// ---------------------------------------------------------------------------
// Completion engine.

namespace {

constexpr int kSubsets = 1 << 14;

}  // namespace

bool complete_avoiding(const Graph& g, Completion& c, size_t node_limit) {
  int n = g.n();
  std::vector<Mask> block(n, 0);
  std::vector<char> fr(n, 0);
  for (int v = 0; v < n; ++v) fr[v] = c.size[v] >= 0 && !c.fixed[v];
  for (int v = 0; v < n; ++v) {
    if (!fr[v]) continue;
    block[v] = c.forbid[v];
    for (int w : g.nbrs(v))
      if (c.size[w] >= 0 && c.fixed[w]) block[v] |= c.value[w];
    if ((c.pin[v] & block[v]) || popc(c.pin[v]) > c.size[v] || c.size[v] > 14) return false;
  }

  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!fr[s] || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    int edges2 = 0;
    for (size_t h = 0; h < comp.size(); ++h)
      for (int w : g.nbrs(comp[h])) {
        if (!fr[w]) continue;
        ++edges2;
        if (!seen[w]) seen[w] = 1, comp.push_back(w);
      }
    int m = static_cast<int>(comp.size());
    auto pool = [&](int v) { return static_cast<Mask>(kFull14 & ~block[v] & ~c.pin[v]); };
    auto need = [&](int v) { return c.size[v] - popc(c.pin[v]); };

    if (edges2 / 2 == m - 1) {
      // Tree DP: ok[i][S] = S is a valid set for vertex i that extends to
      // its subtree; sub[i][S] = some valid set of i lies inside S.
      std::vector<int> local(n, -1), parent(m, -1);
      std::vector<std::vector<int>> kids(m);
      std::vector<int> idx{s};
      local[s] = 0;
      for (size_t h = 0; h < idx.size(); ++h)
        for (int w : g.nbrs(idx[h])) {
          if (!fr[w] || local[w] >= 0) continue;
          local[w] = static_cast<int>(idx.size());
          parent[local[w]] = static_cast<int>(h);
          kids[h].push_back(local[w]);
          idx.push_back(w);
        }
      std::vector<std::vector<uint8_t>> ok(m), sub(m);
      for (int i = m - 1; i >= 0; --i) {
        int v = idx[i];
        ok[i].assign(kSubsets, 0);
        for_each_subset(pool(v), need(v), [&](Mask x) {
          Mask S = x | c.pin[v];
          Mask rest = static_cast<Mask>(kFull14 & ~S);
          bool good = true;
          for (int j : kids[i])
            if (!sub[j][rest]) {
              good = false;
              break;
            }
          ok[i][S] = good;
          return false;
        });
        sub[i] = ok[i];
        for (int b = 0; b < 14; ++b)
          for (int S = 0; S < kSubsets; ++S)
            if (S >> b & 1) sub[i][S] |= sub[i][S ^ (1 << b)];
      }
      for (int i = 0; i < m; ++i) {
        int v = idx[i];
        Mask avoid = i == 0 ? 0 : c.value[idx[parent[i]]];
        bool found = for_each_subset(static_cast<Mask>(pool(v) & ~avoid), need(v), [&](Mask x) {
          Mask S = x | c.pin[v];
          if (!ok[i][S]) return false;
          c.value[v] = S;
          return true;
        });
        if (!found) return false;
      }
      continue;
    }

    // Cyclic component: backtracking in BFS order with forward checking.
    size_t nodes = 0;
    std::vector<char> done(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == m) return true;
      if (++nodes > node_limit) return false;
      int v = comp[i];
      Mask avail = pool(v);
      for (int w : g.nbrs(v))
        if (fr[w] && done[w]) avail &= ~c.value[w];
      done[v] = 1;
      bool hit = for_each_subset(avail, need(v), [&](Mask x) {
        c.value[v] = x | c.pin[v];
        for (int w : g.nbrs(v)) {
          if (!fr[w] || done[w]) continue;
          Mask aw = static_cast<Mask>(kFull14 & ~block[w]);
          for (int z : g.nbrs(w))
            if (fr[z] && done[z]) aw &= ~c.value[z];
          if ((aw & c.pin[w]) != c.pin[w] || popc(aw) < c.size[w]) return false;
        }
        return rec(i + 1);
      });
      if (!hit) done[v] = 0;
      return hit;
    };
    if (!rec(0)) return false;
  }
  return true;
}

namespace {

Graph path_graph(int n) { return make_path(n); }

bool path_dp(const std::vector<Mask>& F, const std::vector<int>& size, std::vector<Mask>& out,
             const std::vector<Mask>* pin = nullptr) {
  int n = static_cast<int>(F.size());
  Graph p = path_graph(n);
  Completion c(n);
  c.size = size;
  c.forbid = F;
  if (pin) c.pin = *pin;
  if (!complete_avoiding(p, c)) return false;
  out = c.value;
  return true;
}

std::vector<int> even_sizes(int n) {
  std::vector<int> s(n, 6);
  s.front() = s.back() = 7;
  return s;
}

void check_path_result(const std::vector<Mask>& F, const std::vector<Mask>& f, const std::vector<int>& size,
                       const char* who) {
  Verdict v = verify_avoiding(path_graph(static_cast<int>(F.size())), F, f);
  for (size_t i = 0; i < f.size(); ++i)
    if (popc(f[i]) != size[i]) v.fail("size at position " + std::to_string(i));
  if (!v) throw std::logic_error(std::string(who) + ": construction failed: " + v.reasons.front());
}

Mask add_highest(Mask have, Mask avoid, int target) {
  Mask free = static_cast<Mask>(kFull14 & ~have & ~avoid);
  int k = target - popc(have);
  return k > 0 ? static_cast<Mask>(have | highest(free, k)) : have;
}

std::vector<Mask> odd_rec(const std::vector<Mask>& F, int r1, int rend) {
  int n = static_cast<int>(F.size());
  Mask S1 = lowest(static_cast<Mask>(F[0] & ~F[1]), 3);
  std::vector<Mask> f(n, 0);
  if (n == 3) {
    Mask S3 = lowest(static_cast<Mask>(F[2] & ~F[1]), 3);
    Mask base = S1 | S3;
    f[1] = base | lowest(static_cast<Mask>(kFull14 & ~base & ~F[1]), 6 - popc(base));
    f[0] = lowest(static_cast<Mask>(kFull14 & ~(F[0] | f[1])), 8 - r1);
    f[2] = lowest(static_cast<Mask>(kFull14 & ~(F[2] | f[1])), 8 - rend);
    return f;
  }
  std::vector<Mask> Fp(F.begin() + 2, F.end());
  Fp[0] |= S1;
  std::vector<Mask> fp = color_odd_path(Fp, 2, rend);
  std::copy(fp.begin(), fp.end(), f.begin() + 2);
  Mask T2 = lowest(static_cast<Mask>(kFull14 & ~(F[1] | f[2] | S1)), 3);
  f[1] = S1 | T2;
  f[0] = lowest(static_cast<Mask>(kFull14 & ~(F[0] | f[1])), 8 - r1);
  return f;
}

}  // namespace

std::vector<Mask> color_odd_path(std::vector<Mask> F, int r1, int rend) {
  int n = static_cast<int>(F.size());
  if (n < 3 || n % 2 == 0) throw AvoidanceError("odd path: need 2k+1 >= 3 vertices, got " + std::to_string(n));
  if (r1 < 0 || r1 > 2 || rend < 0 || rend > 2) throw AvoidanceError("odd path: r1 and rend must lie in 0..2");
  if (popc(F[0]) > 3 + r1) throw AvoidanceError("odd path: |F(v_1)| > 3+r1");
  if (popc(F[n - 1]) > 3 + rend) throw AvoidanceError("odd path: |F(v_2k+1)| > 3+rend");
  for (int i = 1; i < n - 1; ++i)
    if (popc(F[i]) > 2) throw AvoidanceError("odd path: |F(v_" + std::to_string(i + 1) + ")| > 2");
  if (popc(F[0] & F[1]) > r1) throw AvoidanceError("odd path: |F(v_1) ∩ F(v_2)| > r1");
  if (popc(F[n - 2] & F[n - 1]) > rend) throw AvoidanceError("odd path: |F(v_2k) ∩ F(v_2k+1)| > rend");
  std::vector<Mask> orig = F;
  F[0] = add_highest(F[0], F[1], 3 + r1);
  F[n - 1] = add_highest(F[n - 1], F[n - 2], 3 + rend);
  for (int i = 1; i < n - 1; ++i) F[i] = add_highest(F[i], F[i - 1] | F[i + 1], 2);
  std::vector<Mask> f = odd_rec(F, r1, rend);
  std::vector<int> size(n, 6);
  size[0] = 8 - r1;
  size[n - 1] = 8 - rend;
  check_path_result(orig, f, size, "odd path");
  return f;
}

// ---------------------------------------------------------------------------
// Even paths.

namespace {

struct PF {
  const std::vector<Mask>& F;
  // 1-indexed access; out-of-range positions read as empty.
  Mask operator()(int j) const { return j >= 1 && j <= static_cast<int>(F.size()) ? F[j - 1] : Mask{0}; }
};

bool sub(Mask a, Mask b) { return (a & ~b) == 0; }
bool dis(Mask a, Mask b) { return (a & b) == 0; }

bool statement_impl(const std::vector<Mask>& Fv, int s, int* param) {
  int n = static_cast<int>(Fv.size());
  if (n < 2 || n % 2) return false;
  int k = n / 2;
  PF F{Fv};
  switch (s) {
    case 1:
      return k == 1 && dis(F(1), F(2));
    case 2:
      return k == 2 && dis(F(1), F(2)) && dis(F(3), F(4)) && popc(F(1) & F(4)) <= 2;
    case 3: {
      if (k < 3) return false;
      for (int i = 0; i <= k - 3; ++i)
        if (!sub(F(2 * i + 4), F(2 * i + 1))) return false;
      if (!sub(F(2 * k - 3), F(2 * k))) return false;
      if (!dis(F(1) & ~F(4), F(2 * k) & ~F(2 * k - 3))) return false;
      for (int j = 1; j <= k; ++j)
        if (!dis(F(2 * j - 1), F(2 * j))) return false;
      return true;
    }
    case 4:
      return k >= 3 && dis(F(1), F(2)) && dis(F(1), F(4)) && dis(F(3), F(4)) && dis(F(2 * k - 1), F(2 * k));
    case 5: {
      if (k < 3) return false;
      for (int i = 0; i <= k - 3; ++i)
        if (!sub(F(2 * i + 4), F(2 * i + 1))) return false;
      for (int j = 1; j <= k - 2; ++j)
        if (!dis(F(2 * j - 1), F(2 * j))) return false;
      return dis(F(2 * k - 3), F(2 * k)) && dis(F(2 * k - 1), F(2 * k));
    }
    case 6: {
      if (k < 4 || !dis(F(1), F(2)) || !dis(F(2 * k - 1), F(2 * k))) return false;
      for (int t = 0; t <= k - 4; ++t) {
        bool ok = true;
        for (int i = 0; i <= t && ok; ++i) ok = sub(F(2 * i + 4), F(2 * i + 1));
        for (int i = 0; i <= t - 1 && ok; ++i) ok = dis(F(2 * i + 3), F(2 * i + 4));
        ok = ok && dis(F(2 * t + 3), F(2 * t + 6)) && dis(F(2 * t + 5), F(2 * t + 6)) &&
             dis(F(1) & ~F(4), F(2 * t + 6));
        if (ok) {
          if (param) *param = t;
          return true;
        }
      }
      return false;
    }
    case 7:
      return k >= 2 && popc(F(1)) <= 2 && popc(F(1) & F(2)) <= 1 && dis(F(2 * k - 1), F(2 * k));
    case 8:
      return k >= 3 && sub(F(3), F(1)) && dis(F(1), F(2)) && dis(F(2 * k - 1), F(2 * k));
    case 9:
      return k == 4 && F(1) == (F(4) | F(6)) && dis(F(1), F(2)) && dis(F(5) | F(7), F(8));
    case 10:
      return k >= 5 && F(1) == (F(4) | F(6)) && dis(F(1), F(2)) && dis(F(3) | F(5) | F(7), F(8)) &&
             dis(F(2 * k - 1), F(2 * k));
    case 11: {
      if (k < 4 || F(1) != (F(4) | F(6))) return false;
      if (!dis(F(1), F(2)) || !dis(F(5), F(6)) || !dis(F(2 * k - 1), F(2 * k))) return false;
      for (int t = 0; t <= k - 4; ++t) {
        bool ok = true;
        for (int i = 0; i <= t - 1 && ok; ++i) ok = F(2 * i + 5) == F(2 * i + 8);
        // The inclusion/equality clause is read at i = t.
        if (ok) ok = t == k - 4 ? sub(F(2 * t + 5), F(2 * t + 8)) : F(2 * t + 5) == F(2 * t + 8);
        for (int j = 0; j <= t - 1 && ok; ++j) ok = dis(F(2 * j + 7), F(2 * j + 8));
        if (!ok) continue;
        bool a = t == k - 4 && dis(F(3), F(2 * k) & ~F(2 * k - 3));
        bool b = k >= 5 && t == k - 5 && dis(F(2 * k - 3), F(2 * k));
        bool c = k >= 6 && t <= k - 6 && dis(F(3) | F(2 * t + 7) | F(2 * t + 9), F(2 * t + 10));
        if (a || b || c) {
          if (param) *param = t;
          return true;
        }
      }
      return false;
    }
    case 12: {
      if (k < 2 || !dis(F(1), F(2)) || !dis(F(2 * k - 1), F(2 * k))) return false;
      for (int i = 1; i <= n; ++i) {
        if (i == 2 || i == 2 * k - 1) continue;
        int deg = (i == 1 || i == n) ? 1 : 2;
        if (popc(F(i)) <= 4 - 2 * deg) {
          if (param) *param = i;
          return true;
        }
      }
      return false;
    }
    default:
      throw AvoidanceError("even path: statement must be 1..12");
  }
}

std::vector<Mask> reversed(std::vector<Mask> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::optional<std::vector<Mask>> recipe1(const std::vector<Mask>& F) {
  Mask X1 = F[1];
  X1 |= lowest(static_cast<Mask>(kFull14 & ~F[0] & ~X1), 7 - popc(X1));
  return std::vector<Mask>{X1, static_cast<Mask>(kFull14 & ~X1)};
}

std::optional<std::vector<Mask>> recipe2(std::vector<Mask> F) {
  F[0] = add_highest(F[0], F[1] | F[3], 4);
  F[3] = add_highest(F[3], F[2] | F[0], 4);
  Mask X = lowest(static_cast<Mask>(F[0] & ~F[3]), 3);
  X |= lowest(static_cast<Mask>(F[0] & ~X), 3 - popc(X));
  Mask Y = lowest(static_cast<Mask>(F[3] & ~X), 3);
  Mask Yp = lowest(static_cast<Mask>(kFull14 & ~(X | Y | F[2])), 3);
  std::vector<Mask> f(4);
  f[2] = Y | Yp;
  f[1] = X | lowest(static_cast<Mask>(kFull14 & ~(f[2] | F[1] | X)), 3);
  f[0] = lowest(static_cast<Mask>(kFull14 & ~(f[1] | F[0])), 7);
  f[3] = lowest(static_cast<Mask>(kFull14 & ~(f[2] | F[3])), 7);
  return f;
}

std::optional<std::vector<Mask>> recipe4(std::vector<Mask> F) {
  int n = static_cast<int>(F.size());
  F[0] = add_highest(F[0], F[1] | F[3], 4);
  F[n - 1] = add_highest(F[n - 1], F[n - 2], 4);
  F[3] = add_highest(F[3], F[0] | F[2], 2);
  Mask S = lowest(static_cast<Mask>(kFull14 & ~(F[0] | F[2] | F[3])), 3);
  std::vector<Mask> Fp(F.begin() + 3, F.end());
  Fp[0] |= S;
  std::vector<Mask> fp = color_odd_path(Fp, 2, 1);
  std::vector<Mask> f(n);
  std::copy(fp.begin(), fp.end(), f.begin() + 3);
  Mask Sp = lowest(static_cast<Mask>(kFull14 & ~(f[3] | F[2] | F[3] | S)), 1);
  f[2] = F[3] | S | Sp;
  Mask keep = static_cast<Mask>(F[0] & ~Sp);
  Mask T = lowest(static_cast<Mask>(kFull14 & ~(F[1] | f[2] | keep)), 6 - popc(keep));
  f[1] = keep | T;
  f[0] = lowest(static_cast<Mask>(kFull14 & ~(F[0] | f[1])), 7);
  return f;
}

std::optional<std::vector<Mask>> recipe7(std::vector<Mask> F) {
  int n = static_cast<int>(F.size());
  if (n == 4) {
    std::vector<Mask> f;
    if (!path_dp(F, even_sizes(n), f)) return std::nullopt;
    return f;
  }
  F[0] = add_highest(F[0], F[1], 2);
  Mask S = lowest(static_cast<Mask>(F[0] & ~F[1]), 1);
  Mask A = S | F[2];
  // Drop one color of A, preferring one that meets F(v_4).
  Mask drop = (A & F[3]) ? highest(static_cast<Mask>(A & F[3]), 1) : highest(A, 1);
  if (popc(A & F[3]) > 2) return std::nullopt;
  Mask F3p = static_cast<Mask>(A & ~drop);
  std::vector<Mask> Fp(F.begin() + 2, F.end());
  Fp[0] = F3p;
  auto fp = recipe7(Fp);
  if (!fp) return std::nullopt;
  std::vector<Mask> f(n);
  std::copy(fp->begin(), fp->end(), f.begin() + 2);
  Mask f3 = static_cast<Mask>((*fp)[0] & ~A);
  f[2] = lowest(f3, 6);
  if (popc(f[2]) < 6) return std::nullopt;
  f[1] = S | lowest(static_cast<Mask>(kFull14 & ~(F[1] | f[2] | S)), 5);
  f[0] = lowest(static_cast<Mask>(kFull14 & ~(f[1] | F[0])), 7);
  return f;
}

std::optional<std::vector<Mask>> recipe12(const std::vector<Mask>& F, int i) {
  int n = static_cast<int>(F.size());
  int k = n / 2;
  if (i % 2 == 0) {
    auto r = recipe12(reversed(F), n + 1 - i);
    if (!r) return r;
    return reversed(*r);
  }
  PF Fp{F};
  std::vector<Mask> S(n + 1, 0);  // S[j] pins v_j (1-indexed)
  S[2] = lowest(Fp(1), std::max(0, popc(Fp(1)) - 1));
  for (int j = 2; j <= k - 1; ++j) {
    Mask A = S[2 * j - 2] | Fp(2 * j - 1);
    S[2 * j] = lowest(static_cast<Mask>(A & ~Fp(2 * j)), std::max(0, popc(A) - 2));
  }
  Mask Sl = S[2 * k - 2];
  Mask avail = static_cast<Mask>(kFull14 & ~(Sl | Fp(2 * k - 1)));
  Mask fl = lowest(static_cast<Mask>(avail & Fp(2 * k)), std::max(0, popc(Fp(2 * k)) - 1));
  fl |= lowest(static_cast<Mask>(avail & ~fl), 6 - popc(fl));
  Graph p = path_graph(n);
  Completion c(n);
  c.size = even_sizes(n);
  c.forbid = F;
  for (int j = 1; j <= n; ++j) c.pin[j - 1] = S[j];
  c.fixed[2 * k - 2] = 1;
  c.value[2 * k - 2] = fl;
  if (!complete_avoiding(p, c)) return std::nullopt;
  return c.value;
}

}  // namespace

bool even_statement_holds(const std::vector<Mask>& F, int s, int* param) {
  return statement_impl(F, s, param);
}

EvenPathResult color_even_path(const std::vector<Mask>& F, int statement, bool allow_reverse) {
  int n = static_cast<int>(F.size());
  if (n < 2 || n % 2) throw AvoidanceError("even path: need an even number of vertices >= 2");
  if (popc(F.front()) > 4 || popc(F.back()) > 4) throw AvoidanceError("even path: |F(end)| > 4");
  for (int i = 1; i < n - 1; ++i)
    if (popc(F[i]) > 2) throw AvoidanceError("even path: |F(v_" + std::to_string(i + 1) + ")| > 2");
  static const int kOrder[] = {1, 2, 7, 8, 12, 3, 4, 5, 6, 9, 10, 11};
  EvenPathResult res;
  int param = -1;
  auto find = [&](const std::vector<Mask>& G) {
    if (statement) return even_statement_holds(G, statement, &param) ? statement : 0;
    for (int s : kOrder)
      if (even_statement_holds(G, s, &param)) return s;
    return 0;
  };
  std::vector<Mask> G = F;
  int s = find(G);
  if (!s && allow_reverse) {
    G = reversed(F);
    s = find(G);
    res.reversed = s != 0;
  }
  if (!s) {
    if (statement) throw AvoidanceError("even path: hypothesis of Statement " + std::to_string(statement) + " fails");
    throw AvoidanceError("even path: no statement hypothesis holds");
  }
  res.statement = s;
  std::optional<std::vector<Mask>> f;
  switch (s) {
    case 1: f = recipe1(G); break;
    case 2: f = recipe2(G); break;
    case 4: f = recipe4(G); break;
    case 7: f = recipe7(G); break;
    case 12: f = recipe12(G, param); break;
    default: break;
  }
  auto sizes = n == 2 ? std::vector<int>{7, 7} : even_sizes(n);
  if (f && verify_avoiding(path_graph(n), G, *f)) {
    bool sized = true;
    for (int i = 0; i < n; ++i) sized = sized && popc((*f)[i]) == sizes[i];
    res.recipe = sized;
    if (!sized) f.reset();
  } else {
    f.reset();
  }
  if (!f) {
    ++detail::even_dp;
    std::vector<Mask> out;
    if (!path_dp(G, sizes, out))
      throw AvoidanceError("even path: Statement " + std::to_string(s) + " holds but no coloring exists");
    f = out;
  }
  res.f = res.reversed ? reversed(*f) : *f;
  check_path_result(F, res.f, sizes, "even path");
  return res;
}

// ---------------------------------------------------------------------------

std::vector<Mask> color_H(int a, int b, const std::vector<Mask>& F) {
  if (a < 4 || b < 4 || a % 2 || b % 2) throw AvoidanceError("H: a and b must be even and >= 4");
  Graph h = make_H(a, b);
  if (static_cast<int>(F.size()) != h.n()) throw AvoidanceError("H: F has the wrong length");
  for (int v = 0; v < h.n(); ++v)
    if (popc(F[v]) > 6 - 2 * h.deg(v))
      throw AvoidanceError("H: |F(" + std::to_string(v) + ")| > 6-2deg");
  int ub = a + b - 1, ub1 = a + b - 2, u1 = a, u2 = a + 1, v2 = 1;
  if (F[ub1] & F[ub]) throw AvoidanceError("H: F(u_{b-1}) ∩ F(u_b) != ∅");

  Mask S2 = F[u1] ? lowest(F[u1], 1) : highest(kFull14, 1);
  std::vector<Mask> Fv(F.begin(), F.begin() + a);
  EvenPathResult ep = color_even_path(Fv, 0, true);
  std::vector<Mask> f(h.n(), 0);
  std::copy(ep.f.begin(), ep.f.end(), f.begin());
  f[v2] = lowest(static_cast<Mask>(f[v2] & ~S2), 5);

  Completion c(h.n());
  c.forbid = F;
  for (int v = 0; v < a; ++v) c.size[v] = popc(f[v]), c.fixed[v] = 1, c.value[v] = f[v];
  for (int j = 0; j < b; ++j) c.size[a + j] = 8 - h.deg(a + j);
  c.size[u2] = 4;
  c.pin[u2] = S2;
  if (!complete_avoiding(h, c)) throw AvoidanceError("H: no completion on the u-side");
  f = c.value;
  Verdict v = verify_avoiding(h, F, f);
  if (!v) throw std::logic_error("H: construction failed: " + v.reasons.front());
  return f;
}

// ---------------------------------------------------------------------------
// Kernels.

namespace {

// Strongly connected components of d restricted to in[], sinks first.
std::vector<std::vector<int>> sccs(const Digraph& d, const std::vector<char>& in) {
  int n = d.n(), counter = 0;
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on(n, 0);
  std::vector<std::vector<int>> out;
  std::function<void(int)> dfs = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = 1;
    for (int w : d.out(v)) {
      if (!in[w]) continue;
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(comp);
    }
  };
  for (int v = 0; v < n; ++v)
    if (in[v] && index[v] < 0) dfs(v);
  return out;
}

// Shortest directed path a -> b inside comp (vertices listed from a to b).
std::vector<int> dpath(const Digraph& d, const std::vector<char>& in, int a, int b) {
  std::vector<int> prev(d.n(), -2);
  std::vector<int> q{a};
  prev[a] = -1;
  for (size_t h = 0; h < q.size(); ++h)
    for (int w : d.out(q[h]))
      if (in[w] && prev[w] == -2) prev[w] = q[h], q.push_back(w);
  std::vector<int> p;
  for (int x = b; x != -1; x = prev[x]) p.push_back(x);
  std::reverse(p.begin(), p.end());
  return p;
}

[[noreturn]] void report_odd_cycle(const Digraph& d, const std::vector<char>& in, int u, int v) {
  // Arc u->v closes two walks through the root whose lengths differ in
  // parity; the odd one decomposes into cycles, one of them odd.
  int r = u;
  std::vector<int> walk = dpath(d, in, v, r);  // v .. r
  walk.insert(walk.begin(), u);                // u v .. r(=u)
  std::vector<int> stack;
  std::vector<int> pos(d.n(), -1);
  std::vector<std::vector<int>> cycles;
  for (int x : walk) {
    if (pos[x] >= 0) {
      std::vector<int> cyc(stack.begin() + pos[x], stack.end());
      for (size_t i = pos[x] + 1; i < stack.size(); ++i) pos[stack[i]] = -1;
      stack.resize(pos[x] + 1);
      cycles.push_back(cyc);
    } else {
      pos[x] = static_cast<int>(stack.size());
      stack.push_back(x);
    }
  }
  std::string msg = "odd directed cycle";
  for (const auto& c : cycles)
    if (c.size() % 2) {
      msg += ":";
      for (int x : c) msg += " " + std::to_string(x);
      throw AvoidanceError(msg);
    }
  msg += " through arc " + std::to_string(u) + "->" + std::to_string(v);
  throw AvoidanceError(msg);
}

std::vector<int> kernel_on(const Digraph& d, const std::vector<char>& in) {
  std::vector<char> inK(d.n(), 0);
  std::vector<int> K;
  for (const auto& comp : sccs(d, in)) {
    std::vector<int> rest;
    for (int v : comp) {
      bool absorbed = false;
      for (int w : d.out(v)) absorbed = absorbed || inK[w];
      if (!absorbed) rest.push_back(v);
    }
    if (rest.empty()) continue;
    std::vector<int> add;
    if (rest.size() < comp.size()) {
      std::vector<char> sub(d.n(), 0);
      for (int v : rest) sub[v] = 1;
      add = kernel_on(d, sub);
    } else if (comp.size() == 1) {
      add = comp;
    } else {
      std::vector<char> cin(d.n(), 0);
      for (int v : comp) cin[v] = 1;
      // Directed-distance parity from the first vertex; a strongly connected
      // digraph without odd directed cycles is bipartite along these layers.
      std::vector<int> side(d.n(), -1);
      std::vector<int> q{comp[0]};
      side[comp[0]] = 0;
      for (size_t h = 0; h < q.size(); ++h)
        for (int w : d.out(q[h]))
          if (cin[w] && side[w] < 0) side[w] = side[q[h]] ^ 1, q.push_back(w);
      for (int x : comp)
        for (int w : d.out(x))
          if (cin[w] && side[w] == side[x]) report_odd_cycle(d, cin, x, w);
      for (int x : comp)
        if (side[x] == 0) add.push_back(x);
    }
    for (int v : add) inK[v] = 1, K.push_back(v);
  }
  std::sort(K.begin(), K.end());
  return K;
}

}  // namespace

std::vector<int> find_kernel(const Digraph& d) {
  return kernel_on(d, std::vector<char>(d.n(), 1));
}

bool is_kernel(const Digraph& d, const std::vector<int>& k) {
  std::vector<char> in(d.n(), 0);
  for (int v : k) in[v] = 1;
  for (int v : k)
    for (int w : d.out(v))
      if (in[w]) return false;
  for (int v = 0; v < d.n(); ++v) {
    if (in[v]) continue;
    bool hit = false;
    for (int w : d.out(v)) hit = hit || in[w];
    if (!hit) return false;
  }
  return true;
}

std::vector<Mask> kernel_list_color(const Digraph& d, const std::vector<int>& r, const std::vector<Mask>& S) {
  int n = d.n();
  for (int v = 0; v < n; ++v) {
    int need = r[v];
    for (int w : d.out(v)) need += r[w];
    if (popc(S[v]) < need)
      throw AvoidanceError("kernel list coloring: list of vertex " + std::to_string(v) + " has " +
                           std::to_string(popc(S[v])) + " colors, needs " + std::to_string(need));
  }
  std::vector<Mask> C(n, 0), L = S;
  std::vector<int> rem = r;
  for (int c = 0; c < 14; ++c) {
    Mask bit = static_cast<Mask>(1u << c);
    std::vector<char> U(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v)
      if (rem[v] > 0 && (L[v] & bit)) U[v] = 1, any = true;
    if (!any) continue;
    for (int v : kernel_on(d, U)) C[v] |= bit, --rem[v];
    for (int v = 0; v < n; ++v)
      if (U[v]) L[v] &= ~bit;
  }
  for (int v = 0; v < n; ++v)
    if (rem[v] != 0) throw std::logic_error("kernel list coloring: demand left at vertex " + std::to_string(v));
  for (auto [u, v] : d.arcs())
    if (C[u] & C[v]) throw std::logic_error("kernel list coloring: arc endpoints share a color");
  return C;
}

// ---------------------------------------------------------------------------

Verdict obeys(const Graph& g, const std::vector<Mask>& F, const std::vector<Edge>& M) {
  int n = g.n();
  std::vector<char> sat(n, 0);
  for (auto [x, y] : M) {
    if (!g.has_edge(x, y)) throw AvoidanceError("M contains a non-edge");
    if (sat[x] || sat[y]) throw AvoidanceError("M is not a matching");
    sat[x] = sat[y] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (sat[v])
      for (int w : g.nbrs(v))
        if (g.deg(w) == 1) throw AvoidanceError("M saturates support vertex " + std::to_string(v));
  Verdict out;
  for (int v = 0; v < n; ++v)
    if (popc(F[v]) > 6 - 2 * g.deg(v)) out.fail("clause 1 fails at vertex " + std::to_string(v));
  for (int v = 0; v < n; ++v)
    if (g.deg(v) == 1 && (F[v] & F[g.nbrs(v)[0]])) out.fail("clause 2 fails at leaf " + std::to_string(v));
  for (auto [x, y] : M)
    if (popc(F[x] & F[y]) > 1)
      out.fail("clause 3 fails on " + std::to_string(x) + "-" + std::to_string(y));
  return out;
}

}  // namespace tfc
