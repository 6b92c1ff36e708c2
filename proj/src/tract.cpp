// (M, I)-tractability: structural certification, then per-F execution.

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "tfc/avoid.hpp"
#include "tfc/generate.hpp"
#include "tfc/good.hpp"
#include "tfc/patterns.hpp"

namespace tfc {

namespace detail {
extern std::atomic<long> even_dp, pinned_retry, exact_single;
}

enum class Step {
  Components,
  Small,
  OddPath,
  DeleteP2,
  Star,
  DeleteP3P4,
  SuperH,
  SupportDeg3,
  CycleLeaves,
  General,
  ExactSingle
};

namespace {

const char* step_name(Step s) {
  switch (s) {
    case Step::Components: return "components";
    case Step::Small: return "small";
    case Step::OddPath: return "odd_path";
    case Step::DeleteP2: return "delete_P2";
    case Step::Star: return "spider";
    case Step::DeleteP3P4: return "delete_P3_P4";
    case Step::SuperH: return "superH";
    case Step::SupportDeg3: return "support_deg3";
    case Step::CycleLeaves: return "cycle_leaves";
    case Step::General: return "general";
    case Step::ExactSingle: return "exact_single";
  }
  return "?";
}

}  // namespace

struct TractPlan {
  Step step = Step::Small;
  std::vector<int> verts;
  std::vector<Edge> M;
  std::vector<int> I;
  std::vector<TractPlanPtr> kids;
  // delete_P2: u support, v leaf, w other neighbour of u, x as in the
  // reduction (or -1). delete_P3_P4: u = v_2, w attachment, P = path, Y =
  // leaves at w. support_deg3: u, w degree-2 neighbours, v centre, x leaf.
  int u = -1, v = -1, w = -1, x = -1;
  std::vector<int> P, Y;
  // spider: u centre, P the plain leaves, Y the y_j, Z the y'_j.
  // superH: Z maps pattern vertex -> host; t its parameter.
  // cycle_leaves: P the cycle in order, Y the matching leaves.
  std::vector<int> Z;
  int t = 0;
  // general: G' vertices in rule order with their rule, leaf (or -1) and
  // the orientation O_1.
  std::vector<int> rule, leaf_of;
  std::vector<Edge> arcs;
};

void TractPlanDeleter::operator()(TractPlan* p) const { delete p; }

namespace {

struct View {
  const Graph* g;
  std::vector<char> in;
  std::vector<int> verts;

  View(const Graph& G, std::vector<int> vs) : g(&G), in(G.n(), 0), verts(std::move(vs)) {
    std::sort(verts.begin(), verts.end());
    for (int v : verts) in[v] = 1;
  }
  int n() const { return static_cast<int>(verts.size()); }
  std::vector<int> nb(int v) const {
    std::vector<int> r;
    for (int w : g->nbrs(v))
      if (in[w]) r.push_back(w);
    return r;
  }
  int deg(int v) const {
    int d = 0;
    for (int w : g->nbrs(v)) d += in[w];
    return d;
  }
  bool support(int v) const {
    for (int w : nb(v))
      if (deg(w) == 1) return true;
    return false;
  }
  View minus(const std::vector<int>& rm) const {
    std::vector<int> keep;
    for (int v : verts)
      if (std::find(rm.begin(), rm.end(), v) == rm.end()) keep.push_back(v);
    return View(*g, keep);
  }
  Graph induced() const { return g->induced(verts); }
  std::vector<std::vector<int>> comps() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g->n(), 0);
    for (int s : verts) {
      if (seen[s]) continue;
      std::vector<int> c{s};
      seen[s] = 1;
      for (size_t h = 0; h < c.size(); ++h)
        for (int w : nb(c[h]))
          if (!seen[w]) seen[w] = 1, c.push_back(w);
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
    return out;
  }
};

TractPlanPtr make_plan(Step s, const View& V) {
  TractPlanPtr p(new TractPlan);
  p->step = s;
  p->verts = V.verts;
  return p;
}

int partner(const std::vector<Edge>& M, int v) {
  for (auto [a, b] : M) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

bool is_spider(const View& V, int* centre) {
  int edges = 0, c = -1;
  for (int v : V.verts) {
    edges += V.deg(v);
    if (V.deg(v) >= 3) {
      if (c >= 0) return false;
      c = v;
    }
  }
  if (c < 0 || edges / 2 != V.n() - 1) return false;
  *centre = c;
  return true;
}

TractPlanPtr certify_conn(const View& V);

// nullptr when some component is an even path on >= 4 vertices or in H.
TractPlanPtr certify_any(const View& V) {
  auto cs = V.comps();
  if (cs.size() == 1) return certify_conn(V);
  TractPlanPtr p = make_plan(Step::Components, V);
  for (const auto& c : cs) {
    TractPlanPtr k = certify_conn(View(*V.g, c));
    if (!k) return nullptr;
    p->M.insert(p->M.end(), k->M.begin(), k->M.end());
    p->I.insert(p->I.end(), k->I.begin(), k->I.end());
    p->kids.push_back(std::move(k));
  }
  std::sort(p->I.begin(), p->I.end());
  return p;
}

TractPlanPtr try_delete_p2(const View& V) {
  for (int u : V.verts) {
    if (V.deg(u) != 2) continue;
    auto nu = V.nb(u);
    for (int k = 0; k < 2; ++k) {
      int v = nu[k], w = nu[1 - k];
      if (V.deg(v) != 1 || V.support(w)) continue;
      View R = V.minus({u, v});
      TractPlanPtr child = certify_any(R);
      if (!child) continue;
      TractPlanPtr p = make_plan(Step::DeleteP2, V);
      p->u = u, p->v = v, p->w = w;
      if (R.deg(w) == 1)
        p->x = R.nb(w)[0];
      else
        p->x = partner(child->M, w);
      p->M = child->M;
      if (R.deg(w) == 1 && V.deg(p->x) == 2) p->M.emplace_back(std::min(w, p->x), std::max(w, p->x));
      p->I = child->I;
      p->kids.push_back(std::move(child));
      return p;
    }
  }
  return nullptr;
}

TractPlanPtr try_star(const View& V) {
  int c;
  if (!is_spider(V, &c) || V.deg(c) != 3) return nullptr;
  TractPlanPtr p = make_plan(Step::Star, V);
  p->u = c;
  for (int a : V.nb(c)) {
    if (V.deg(a) == 1) {
      p->P.push_back(a);
      continue;
    }
    if (V.deg(a) != 2) return nullptr;
    int b = V.nb(a)[0] == c ? V.nb(a)[1] : V.nb(a)[0];
    if (V.deg(b) != 1) return nullptr;  // leg longer than two
    p->Y.push_back(a);
    p->Z.push_back(b);
  }
  p->I = {c};
  return p;
}

TractPlanPtr try_delete_p3p4(const View& V) {
  for (int a : V.verts) {
    if (V.deg(a) != 3) continue;
    for (int w : V.nb(a)) {
      // Component of a after deleting the edge a-w.
      std::vector<int> C{a};
      std::vector<char> seen(V.g->n(), 0);
      seen[a] = 1;
      bool cut = true;
      for (size_t h = 0; h < C.size() && cut; ++h)
        for (int z : V.nb(C[h])) {
          if (C[h] == a && z == w) continue;
          if (z == w) cut = false;
          if (!seen[z]) seen[z] = 1, C.push_back(z);
        }
      if (!cut || C.size() < 3 || C.size() > 4) continue;
      std::vector<int> P;
      auto in_c = V.nb(a);
      in_c.erase(std::find(in_c.begin(), in_c.end(), w));
      if (C.size() == 3) {
        if (V.deg(in_c[0]) != 1 || V.deg(in_c[1]) != 1) continue;
        P = {std::min(in_c[0], in_c[1]), a, std::max(in_c[0], in_c[1])};
      } else {
        int l = V.deg(in_c[0]) == 1 ? in_c[0] : in_c[1];
        int m = l == in_c[0] ? in_c[1] : in_c[0];
        if (V.deg(l) != 1 || V.deg(m) != 2) continue;
        int e = V.nb(m)[0] == a ? V.nb(m)[1] : V.nb(m)[0];
        if (V.deg(e) != 1) continue;
        P = {l, a, m, e};
      }
      View R = V.minus(P);
      TractPlanPtr p = make_plan(Step::DeleteP3P4, V);
      p->u = a, p->w = w, p->P = P;
      for (int y : V.nb(w))
        if (V.deg(y) == 1) p->Y.push_back(y);
      if (p->Y.size() == 2) {
        p->I = {a};
        return p;
      }
      TractPlanPtr child = certify_any(R);
      if (!child) continue;
      p->x = R.deg(w) == 1 ? R.nb(w)[0] : partner(child->M, w);
      p->M = child->M;
      if (R.deg(w) == 1 && V.deg(p->x) == 2) p->M.emplace_back(std::min(w, p->x), std::max(w, p->x));
      p->I = child->I;
      p->I.push_back(a);
      std::sort(p->I.begin(), p->I.end());
      p->kids.push_back(std::move(child));
      return p;
    }
  }
  return nullptr;
}

TractPlanPtr try_superH(const View& V) {
  if (V.n() < 12 || V.n() % 2) return nullptr;
  int t = (V.n() - 12) / 2;
  std::vector<int> m;
  if (!is_isomorphic(make_superH(t), V.induced(), &m)) return nullptr;
  TractPlanPtr p = make_plan(Step::SuperH, V);
  for (int& z : m) z = V.verts[z];
  p->Z = m;
  p->t = t;
  p->I = {m[superH_index(t, 3)], m[superH_index(t, 6)]};
  std::sort(p->I.begin(), p->I.end());
  return p;
}

TractPlanPtr try_support_deg3(const View& V) {
  for (int v : V.verts)
    if (V.deg(v) == 2 && V.support(v)) return nullptr;
  for (int v : V.verts) {
    if (V.deg(v) != 3) continue;
    std::vector<int> leaves, twos;
    for (int z : V.nb(v)) {
      if (V.deg(z) == 1) leaves.push_back(z);
      if (V.deg(z) == 2) twos.push_back(z);
    }
    if (leaves.size() != 1 || twos.size() != 2) continue;
    int u = twos[0], w = twos[1];
    int up = V.nb(u)[0] == v ? V.nb(u)[1] : V.nb(u)[0];
    int wp = V.nb(w)[0] == v ? V.nb(w)[1] : V.nb(w)[0];
    if (up == wp && V.deg(up) == 2) continue;
    TractPlanPtr child = certify_any(V.minus({v, leaves[0]}));
    if (!child) continue;
    TractPlanPtr p = make_plan(Step::SupportDeg3, V);
    p->u = u, p->w = w, p->v = v, p->x = leaves[0];
    p->M = child->M;
    if (V.deg(up) == 2) p->M.emplace_back(std::min(u, up), std::max(u, up));
    if (V.deg(wp) == 2) p->M.emplace_back(std::min(w, wp), std::max(w, wp));
    p->I = child->I;
    p->I.push_back(v);
    std::sort(p->I.begin(), p->I.end());
    p->kids.push_back(std::move(child));
    return p;
  }
  return nullptr;
}

TractPlanPtr try_cycle_leaves(const View& V) {
  std::vector<int> cyc, leaf;
  for (int v : V.verts) {
    if (V.deg(v) == 1) continue;
    if (V.deg(v) != 3) return nullptr;
    int l = 0;
    for (int z : V.nb(v)) l += V.deg(z) == 1;
    if (l != 1) return nullptr;
  }
  int start = -1;
  for (int v : V.verts)
    if (V.deg(v) == 3) {
      start = v;
      break;
    }
  if (start < 0) return nullptr;
  int prev = -1, cur = start;
  do {
    cyc.push_back(cur);
    int next = -1;
    for (int z : V.nb(cur)) {
      if (V.deg(z) == 1)
        leaf.push_back(z);
      else if (z != prev && next < 0)
        next = z;
    }
    prev = cur;
    cur = next;
  } while (cur != start && cur >= 0 && cyc.size() <= V.verts.size());
  if (cur != start || cyc.size() * 2 != V.verts.size() || cyc.size() % 2) return nullptr;
  TractPlanPtr p = make_plan(Step::CycleLeaves, V);
  p->P = cyc;
  p->Y = leaf;
  return p;
}

enum Rule { kIsolated = 1, kEndInI = 2, kEndNonSupport = 3, kEndSupport = 4, kInternal = 5, kDegTwo = 6 };

TractPlanPtr try_general(const View& V) {
  std::vector<int> side;
  if (!is_bipartite(V.induced(), &side)) return nullptr;
  const Graph& g = *V.g;
  std::vector<int> leaf_of(g.n(), -1);
  for (int v : V.verts) {
    if (V.deg(v) == 1) continue;
    int l = 0;
    for (int z : V.nb(v))
      if (V.deg(z) == 1) ++l, leaf_of[v] = z;
    if (l > 1) return nullptr;                      // Claim 4
    if (l == 1 && V.deg(v) != 3) return nullptr;    // Claim 3
    if (l == 1) {
      int twos = 0;
      for (int z : V.nb(v)) twos += V.deg(z) == 2;
      if (twos > 1) return nullptr;                 // Claim 5
    }
  }
  // X: degree-3 vertices; components must be paths (Claims 6, 7).
  std::vector<int> xs;
  for (int v : V.verts)
    if (V.deg(v) == 3) xs.push_back(v);
  View X(g, xs);
  std::vector<std::vector<int>> paths;
  for (const auto& c : X.comps()) {
    int edges = 0, end = c[0];
    for (int v : c) {
      edges += X.deg(v);
      if (X.deg(v) > 2) return nullptr;
    }
    if (edges / 2 != static_cast<int>(c.size()) - 1) return nullptr;
    for (int v : c)
      if (X.deg(v) <= 1) {
        end = v;
        break;
      }
    std::vector<int> path{end};
    int prev = -1;
    while (path.size() < c.size()) {
      int cur = path.back(), next = -1;
      for (int z : X.nb(cur))
        if (z != prev) next = z;
      prev = cur;
      path.push_back(next);
    }
    bool ok = true;
    if (c.size() >= 3)
      for (int v : c) ok = ok && leaf_of[v] >= 0;
    if (c.size() == 2) ok = leaf_of[c[0]] >= 0 || leaf_of[c[1]] >= 0;
    if (c.size() == 1) ok = leaf_of[c[0]] < 0;
    if (!ok) return nullptr;
    paths.push_back(path);
  }
  TractPlanPtr p = make_plan(Step::General, V);
  std::map<int, int> rule;
  for (const auto& path : paths) {
    if (path.size() == 1) {
      p->I.push_back(path[0]);
      rule[path[0]] = kIsolated;
    } else if (path.size() == 2) {
      int a = leaf_of[path[0]] >= 0 ? path[0] : path[1];
      int b = a == path[0] ? path[1] : path[0];
      p->I.push_back(a);
      rule[a] = kEndInI;
      rule[b] = leaf_of[b] >= 0 ? kEndSupport : kEndNonSupport;
    } else {
      p->I.push_back(path.front());
      p->I.push_back(path.back());
      for (size_t i = 0; i < path.size(); ++i)
        rule[path[i]] = (i == 0 || i + 1 == path.size()) ? kEndInI : kInternal;
    }
  }
  std::sort(p->I.begin(), p->I.end());
  if (!is_independent(g, p->I)) return nullptr;

  // G' and the orientation of Claim 8.
  std::vector<int> gp;
  for (int v : V.verts)
    if (V.deg(v) > 1) gp.push_back(v);
  View Gp(g, gp);
  for (int v : gp) {
    if (V.deg(v) == 2) rule[v] = kDegTwo;
    if (Gp.deg(v) < 2) return nullptr;
  }
  auto support = [&](int v) { return leaf_of[v] >= 0; };
  auto nonsup3 = [&](int v) { return V.deg(v) == 3 && !support(v); };
  std::vector<int> J;
  for (int v : gp) {
    if (!support(v)) continue;
    bool hit = false;
    for (int z : V.nb(v)) hit = hit || nonsup3(z);
    if (hit) J.push_back(v);
  }
  if (!is_independent(g, J)) return nullptr;
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < gp.size(); ++i) local[gp[i]] = static_cast<int>(i);
  MultiGraph Y;
  Y.n = static_cast<int>(gp.size());
  std::vector<Edge> nonY;
  for (int a : gp)
    for (int b : Gp.nb(a)) {
      if (a > b) continue;
      bool cutY = (support(a) && nonsup3(b)) || (support(b) && nonsup3(a));
      if (cutY)
        nonY.emplace_back(a, b);
      else
        Y.edges.emplace_back(local[a], local[b]);
    }
  Digraph O = orient_balanced(Y);
  std::vector<Edge> arcs;
  std::vector<int> indeg(g.n(), 0), outdeg(g.n(), 0);
  for (auto [a, b] : O.arcs()) {
    arcs.emplace_back(gp[a], gp[b]);
    ++outdeg[gp[a]], ++indeg[gp[b]];
  }
  for (int j : J) {
    std::vector<Edge> mine;
    for (auto e : nonY)
      if (e.first == j || e.second == j) mine.push_back(e);
    for (auto [a, b] : mine) {
      int o = a == j ? b : a;
      // Give j in- and out-degree one.
      bool out = indeg[j] > outdeg[j] || (indeg[j] == outdeg[j] && outdeg[j] == 0 && o == std::min(a, b) && false);
      if (indeg[j] == 0 && outdeg[j] == 0) out = true;
      if (out)
        arcs.emplace_back(j, o), ++outdeg[j], ++indeg[o];
      else
        arcs.emplace_back(o, j), ++outdeg[o], ++indeg[j];
    }
  }
  if (arcs.size() != Y.edges.size() + nonY.size()) return nullptr;
  for (int v : gp)
    if (indeg[v] < 1 || outdeg[v] < 1) return nullptr;
  // Rule order: X paths first (each from one end), then the rest of G'.
  std::vector<int> order;
  for (const auto& path : paths) order.insert(order.end(), path.begin(), path.end());
  for (int v : gp)
    if (V.deg(v) == 2) order.push_back(v);
  if (order.size() != gp.size()) return nullptr;
  p->P = order;
  for (int v : order) p->rule.push_back(rule[v]), p->leaf_of.push_back(leaf_of[v]);
  p->arcs = arcs;
  return p;
}

TractPlanPtr certify_conn(const View& V) {
  if (V.n() <= 3) return make_plan(Step::Small, V);
  Graph h = V.induced();
  std::vector<int> order;
  if (as_path(h, &order)) {
    if (V.n() % 2 == 0) return nullptr;
    TractPlanPtr p = make_plan(Step::OddPath, V);
    for (int i : order) p->P.push_back(V.verts[i]);
    return p;
  }
  if (as_H(h)) return nullptr;
  // Spiders first: stripping a leg of one leaves a path.
  if (auto p = try_star(V)) return p;
  if (auto p = try_delete_p2(V)) return p;
  int c;
  if (!is_spider(V, &c))
    if (auto p = try_delete_p3p4(V)) return p;
  if (auto p = try_superH(V)) return p;
  if (auto p = try_support_deg3(V)) return p;
  if (auto p = try_cycle_leaves(V)) return p;
  if (auto p = try_general(V)) return p;
  return make_plan(Step::ExactSingle, V);
}

// ---------------------------------------------------------------------------
// Execution.

using Pair = std::pair<std::vector<Mask>, std::vector<Mask>>;

// Enlarges F to |F(v)| = 6 - 2deg(v) keeping obedience to M.
std::vector<Mask> pad(const View& V, std::vector<Mask> F, const std::vector<Edge>& M) {
  for (int v : V.verts) {
    Mask avoid = 0;
    for (int z : V.nb(v))
      if (V.deg(z) == 1 || V.deg(v) == 1) avoid |= F[z];
    int o = partner(M, v);
    if (o >= 0) avoid |= F[o];
    int target = std::max(0, 6 - 2 * V.deg(v));
    Mask free = static_cast<Mask>(kFull14 & ~F[v] & ~avoid);
    int k = target - popc(F[v]);
    if (k > 0) F[v] |= highest(free, k);
  }
  return F;
}

int target_size(const View& V, const std::vector<int>& I, int v) {
  return 8 - V.deg(v) - (std::binary_search(I.begin(), I.end(), v) ? 1 : 0);
}

// Single coloring of V with sizes 8 - deg - 1_I; pins are dropped on failure.
std::vector<Mask> complete_single(const View& V, const std::vector<int>& I, const std::vector<Mask>& F,
                                  const std::vector<Mask>& pin, const std::vector<Mask>* fixed = nullptr) {
  const Graph& g = *V.g;
  Completion c(g.n());
  for (int v : V.verts) {
    c.size[v] = target_size(V, I, v);
    c.forbid[v] = F[v];
    c.pin[v] = pin[v];
    if (fixed && (*fixed)[v]) c.fixed[v] = 1, c.value[v] = (*fixed)[v], c.size[v] = popc((*fixed)[v]);
  }
  if (complete_avoiding(g, c)) return c.value;
  ++detail::pinned_retry;
  for (int v : V.verts) c.pin[v] = 0;
  if (complete_avoiding(g, c)) return c.value;
  throw AvoidanceError("tractable pair: completion infeasible");
}

Pair run(const TractPlan& p, const Graph& g, const std::vector<Mask>& F);

Pair run_components(const TractPlan& p, const Graph& g, const std::vector<Mask>& F) {
  Pair out{std::vector<Mask>(g.n(), 0), std::vector<Mask>(g.n(), 0)};
  for (const auto& k : p.kids) {
    Pair r = run(*k, g, F);
    for (int v : k->verts) out.first[v] = r.first[v], out.second[v] = r.second[v];
  }
  return out;
}

Pair run_delete_p2(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  const Graph& g = *V.g;
  Mask Fx = p.x >= 0 ? F[p.x] : 0;
  Mask Su = 0;
  for_each_subset(F[p.v], std::max(0, popc(F[p.v]) - 1), [&](Mask s) {
    if (popc((s | F[p.w]) & Fx) > 1) return false;
    Su = s;
    return true;
  });
  Mask A = Su | F[p.w];
  Mask drop = (A & Fx) ? static_cast<Mask>(A & Fx) : highest(A, 1);
  std::vector<Mask> Fp = F;
  Fp[p.w] = static_cast<Mask>(A & ~drop);
  Pair c = run(*p.kids[0], g, Fp);
  Pair out;
  for (int i = 0; i < 2; ++i) {
    std::vector<Mask> f = i ? c.second : c.first;
    f[p.w] = (f[p.w] & drop) ? static_cast<Mask>(f[p.w] & ~drop) : static_cast<Mask>(f[p.w] & ~highest(f[p.w], 1));
    Completion cp(g.n());
    for (int z : V.verts) cp.size[z] = popc(f[z]), cp.fixed[z] = 1, cp.value[z] = f[z], cp.forbid[z] = F[z];
    cp.fixed[p.u] = cp.fixed[p.v] = 0;
    cp.size[p.u] = 6, cp.size[p.v] = 7;
    cp.pin[p.u] = Su;
    if (!complete_avoiding(g, cp)) {
      ++detail::pinned_retry;
      cp.pin[p.u] = 0;
      if (!complete_avoiding(g, cp)) throw AvoidanceError("delete_P2: extension infeasible");
    }
    (i ? out.second : out.first) = cp.value;
  }
  return out;
}

Pair run_star(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  std::vector<Mask> pin(V.g->n(), 0);
  int alpha = static_cast<int>(p.P.size()), beta = static_cast<int>(p.Y.size());
  Mask Sv = 0;
  if (alpha == 3) {
    for (int x : p.P)
      if (!(Sv & F[x])) Sv |= lowest(static_cast<Mask>(F[x] & ~Sv), 1);
    Sv |= lowest(static_cast<Mask>(kFull14 & ~Sv), 3 - popc(Sv));
  } else if (alpha == 2) {
    Mask Sy = lowest(F[p.Z[0]], 3);
    pin[p.Y[0]] = Sy;
    Mask common = static_cast<Mask>(F[p.P[0]] & F[p.P[1]] & ~Sy);
    if (common) {
      Sv = lowest(common, 1);
    } else {
      Sv = lowest(static_cast<Mask>(F[p.P[0]] & ~Sy), 1);
      Sv |= lowest(static_cast<Mask>(F[p.P[1]] & ~Sy & ~Sv), 1);
    }
    Sv |= lowest(static_cast<Mask>(kFull14 & ~Sy & ~Sv), 2 - popc(Sv));
  } else if (alpha == 1) {
    Sv = lowest(F[p.P[0]], 1);
    for (int j = 0; j < beta; ++j) pin[p.Y[j]] = lowest(static_cast<Mask>(F[p.Z[j]] & ~Sv), 3);
  } else {
    for (int j = 0; j < beta; ++j) pin[p.Y[j]] = lowest(F[p.Z[j]], 3);
  }
  pin[p.u] = Sv;
  auto f = complete_single(V, p.I, F, pin);
  return {f, f};
}

Pair run_delete_p3p4(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  const Graph& g = *V.g;
  const auto& P = p.P;
  Mask Fx = p.x >= 0 ? F[p.x] : 0;
  Mask FY = Fx;
  for (int y : p.Y) FY |= F[y];
  std::vector<Mask> pin(g.n(), 0);
  Mask S = 0;
  if (P.size() == 4) {
    S = lowest(static_cast<Mask>(F[P[0]] & ~Fx), std::max(0, popc(F[P[0]]) - 3));
    pin[P[2]] = lowest(static_cast<Mask>(F[P[3]] & ~S), std::max(0, popc(F[P[3]]) - 1));
  } else {
    Mask pool = F[P[0]] | F[P[2]];
    bool found = false;
    for (int k = 0; k <= popc(pool) && !found; ++k)
      found = for_each_subset(pool, k, [&](Mask s) {
        if (popc(s & F[P[0]]) < popc(F[P[0]]) - 3 || popc(s & F[P[2]]) < popc(F[P[2]]) - 3) return false;
        int hit = popc((s | F[p.w]) & FY);
        if (hit > 2 || (hit == 2 && p.Y.size() != 2)) return false;
        S = s;
        return true;
      });
    if (!found) throw AvoidanceError("delete_P3_P4: no admissible S_{v_2}");
  }
  pin[p.u] = S;
  if (p.Y.size() == 2) {
    // f(w) first: five colors avoiding S meeting each F(y) twice.
    Mask avail = static_cast<Mask>(kFull14 & ~S & ~F[p.w]);
    std::vector<Mask> res;
    for_each_subset(avail, 5, [&](Mask fw) {
      for (int y : p.Y)
        if (popc(fw & F[y]) < std::min(2, popc(F[y]))) return false;
      std::vector<Mask> fixed(g.n(), 0);
      fixed[p.w] = fw;
      try {
        res = complete_single(V, p.I, F, pin, &fixed);
      } catch (const AvoidanceError&) {
        return false;
      }
      return true;
    });
    if (res.empty()) throw AvoidanceError("delete_P3_P4: no f(w) extends");
    return {res, res};
  }
  Mask A = S | F[p.w];
  Mask drop = (A & FY) ? highest(static_cast<Mask>(A & FY), 1) : highest(A, 1);
  std::vector<Mask> Fp = F;
  Fp[p.w] = static_cast<Mask>(A & ~drop);
  Pair c = run(*p.kids[0], g, Fp);
  Pair out;
  for (int i = 0; i < 2; ++i) {
    std::vector<Mask> f = i ? c.second : c.first;
    f[p.w] = (f[p.w] & drop) ? static_cast<Mask>(f[p.w] & ~drop) : static_cast<Mask>(f[p.w] & ~highest(f[p.w], 1));
    Completion cp(g.n());
    for (int z : V.verts) cp.size[z] = popc(f[z]), cp.fixed[z] = 1, cp.value[z] = f[z], cp.forbid[z] = F[z];
    for (int z : P) cp.fixed[z] = 0, cp.size[z] = target_size(V, p.I, z), cp.pin[z] = pin[z];
    if (!complete_avoiding(g, cp)) {
      ++detail::pinned_retry;
      for (int z : P) cp.pin[z] = 0;
      if (!complete_avoiding(g, cp)) throw AvoidanceError("delete_P3_P4: extension infeasible");
    }
    (i ? out.second : out.first) = cp.value;
  }
  return out;
}

Pair run_superH(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  int t = p.t;
  auto U = [&](int i) { return p.Z[superH_index(t, i)]; };
  auto Ul = [&](int i) { return p.Z[8 + 2 * t + (i - 3)]; };  // leaf u'_i
  auto Vv = [&](int j) { return j == 0 ? U(4) : p.Z[3 + j]; };
  std::vector<Mask> pin(V.g->n(), 0);
  auto sz = [](int k) { return std::max(0, k); };
  pin[U(4)] = lowest(F[Ul(4)], sz(popc(F[Ul(4)]) - 2));
  for (int i = 1; i <= t; ++i) {
    Mask A = pin[Vv(2 * i - 2)] | F[Vv(2 * i - 1)];
    pin[Vv(2 * i)] = lowest(static_cast<Mask>(A & ~F[Vv(2 * i)]), sz(popc(A) - 2));
  }
  pin[U(3)] = lowest(static_cast<Mask>(F[Ul(3)] & ~pin[U(4)]), sz(popc(F[Ul(3)]) - 3));
  pin[U(2)] = lowest(static_cast<Mask>(F[U(1)] & ~pin[U(3)]), sz(popc(F[U(1)]) - 1));
  pin[U(5)] = lowest(static_cast<Mask>(F[Ul(5)] & ~pin[Vv(2 * t)]), sz(popc(F[Ul(5)]) - 2));
  pin[U(6)] = lowest(static_cast<Mask>(F[Ul(6)] & ~pin[U(5)]), sz(popc(F[Ul(6)]) - 3));
  pin[U(7)] = lowest(static_cast<Mask>(F[U(8)] & ~pin[U(6)]), sz(popc(F[U(8)]) - 1));
  auto f = complete_single(V, p.I, F, pin);
  return {f, f};
}

Pair run_support_deg3(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  const Graph& g = *V.g;
  auto other = [&](int z) { return V.nb(z)[0] == p.v ? V.nb(z)[1] : V.nb(z)[0]; };
  int up = other(p.u), wp = other(p.w);
  Mask Sv = 0;
  bool found = for_each_subset(kFull14, 4, [&](Mask s) {
    if (!(s & F[p.u]) || !(s & F[p.w]) || !(s & F[p.x])) return false;
    if (popc((s | F[p.u]) & F[up]) > 1 || popc((s | F[p.w]) & F[wp]) > 1) return false;
    Sv = s;
    return true;
  });
  if (!found) throw AvoidanceError("support_deg3: no admissible S_v");
  std::vector<Mask> Fp = F;
  Mask Au = Sv | F[p.u], Aw = Sv | F[p.w];
  Mask du = (Au & F[up]) ? static_cast<Mask>(Au & F[up]) : highest(Au, 1);
  Mask dw = (Aw & F[wp]) ? static_cast<Mask>(Aw & F[wp]) : highest(Aw, 1);
  Fp[p.u] = static_cast<Mask>(Au & ~du);
  Fp[p.w] = static_cast<Mask>(Aw & ~dw);
  Pair c = run(*p.kids[0], g, Fp);
  Pair out;
  for (int i = 0; i < 2; ++i) {
    std::vector<Mask> f = i ? c.second : c.first;
    for (auto [z, d] : {std::pair{p.u, du}, std::pair{p.w, dw}}) {
      f[z] = (f[z] & d) ? static_cast<Mask>(f[z] & ~d) : f[z];
      if (popc(f[z]) > 6) f[z] = lowest(f[z], 6);
    }
    f[p.v] = Sv;
    f[p.x] = lowest(static_cast<Mask>(kFull14 & ~(F[p.x] | Sv)), 7);
    (i ? out.second : out.first) = f;
  }
  return out;
}

Pair run_cycle(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  int k = static_cast<int>(p.P.size());
  Digraph D(k);
  for (int i = 0; i < k; ++i) D.add_arc(i, (i + 1) % k);
  std::vector<Mask> L(k);
  for (int i = 0; i < k; ++i) L[i] = F[p.Y[i]];
  auto S = kernel_list_color(D, std::vector<int>(k, 2), L);
  for (int i = 0; i < k; ++i)
    L[i] = static_cast<Mask>(kFull14 & ~(S[(i + k - 1) % k] | S[i] | S[(i + 1) % k]) & ~F[p.P[i]]);
  auto T = kernel_list_color(D, std::vector<int>(k, 3), L);
  std::vector<Mask> f(V.g->n(), 0);
  for (int i = 0; i < k; ++i) {
    f[p.P[i]] = S[i] | T[i];
    f[p.Y[i]] = lowest(static_cast<Mask>(kFull14 & ~(F[p.Y[i]] | f[p.P[i]])), 7);
  }
  return {f, f};
}

Pair run_general(const TractPlan& p, const View& V, const std::vector<Mask>& F) {
  const Graph& g = *V.g;
  int m = static_cast<int>(p.P.size());
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < m; ++i) local[p.P[i]] = i;
  Pair out{std::vector<Mask>(g.n(), 0), std::vector<Mask>(g.n(), 0)};
  for (int round = 0; round < 2; ++round) {
    Digraph D(m);
    for (auto [a, b] : p.arcs)
      round == 0 ? D.add_arc(local[a], local[b]) : D.add_arc(local[b], local[a]);
    std::vector<int> r(m, 0);
    std::vector<Mask> T(m, 0);
    std::vector<char> Tdef(m, 0);
    auto pointed_by_3 = [&](int i) {
      for (int j : D.in(i))
        if (V.deg(p.P[j]) == 3) return true;
      return false;
    };
    auto earlier_T = [&](int i) {
      Mask t = 0;
      for (int z : V.nb(p.P[i]))
        if (local[z] >= 0 && Tdef[local[z]]) t |= T[local[z]];
      return t;
    };
    for (int i = 0; i < m; ++i) {
      int v = p.P[i], l = p.leaf_of[i];
      switch (p.rule[i]) {
        case kIsolated:
          r[i] = D.outdeg(i) == 1 ? 6 : 2;
          break;
        case kEndInI:
          r[i] = 3;
          T[i] = pointed_by_3(i) ? Mask{0} : lowest(static_cast<Mask>(F[l] & ~earlier_T(i)), 2);
          Tdef[i] = 1;
          break;
        case kEndNonSupport:
          r[i] = pointed_by_3(i) ? 6 : 4;
          break;
        case kEndSupport:
          Tdef[i] = 1;
          if (pointed_by_3(i)) {
            r[i] = 3;
          } else {
            r[i] = 2;
            int u = -1;
            for (int z : V.nb(v))
              if (V.deg(z) == 2) u = z;
            Mask t = F[l];
            if (u >= 0 && !(t & F[u])) t |= lowest(F[u], 1);
            T[i] = t | lowest(static_cast<Mask>(kFull14 & ~t), 5 - popc(t));
          }
          break;
        case kInternal:
          r[i] = 3;
          T[i] = lowest(static_cast<Mask>(F[l] & ~earlier_T(i)), 2);
          Tdef[i] = 1;
          break;
        case kDegTwo:
          r[i] = 6;
          break;
      }
    }
    std::vector<Mask> L(m);
    for (int i = 0; i < m; ++i) {
      Mask t = T[i];
      for (int z : V.nb(p.P[i]))
        if (local[z] >= 0) t |= T[local[z]];
      L[i] = static_cast<Mask>(kFull14 & ~(F[p.P[i]] | t));
    }
    auto gcol = kernel_list_color(D, r, L);
    auto& f = round == 0 ? out.first : out.second;
    for (int i = 0; i < m; ++i) {
      f[p.P[i]] = gcol[i] | T[i];
      if (p.leaf_of[i] >= 0)
        f[p.leaf_of[i]] = lowest(static_cast<Mask>(kFull14 & ~(f[p.P[i]] | F[p.leaf_of[i]])), 7);
    }
  }
  return out;
}

void audit(const TractPlan& p, const View& V, const std::vector<Mask>& F, const Pair& r) {
  Graph h = V.induced();
  std::vector<Mask> Fl, a, b;
  for (int v : V.verts) Fl.push_back(F[v]), a.push_back(r.first[v]), b.push_back(r.second[v]);
  Verdict va = verify_avoiding(h, Fl, a), vb = verify_avoiding(h, Fl, b);
  std::string why;
  if (!va) why = va.reasons.front();
  if (!vb) why = vb.reasons.front();
  for (int v : V.verts) {
    int want = 16 - 2 * V.deg(v) - (std::binary_search(p.I.begin(), p.I.end(), v) ? 2 : 0);
    if (popc(r.first[v]) + popc(r.second[v]) != want)
      why = "size identity fails at vertex " + std::to_string(v);
  }
  if (!why.empty()) throw std::logic_error(std::string("tractable pair (") + step_name(p.step) + "): " + why);
}

Pair run(const TractPlan& p, const Graph& g, const std::vector<Mask>& F0) {
  View V(g, p.verts);
  if (p.step == Step::Components) return run_components(p, g, F0);
  std::vector<Mask> F = pad(V, F0, p.M);
  Pair r;
  switch (p.step) {
    case Step::Small: {
      auto f = complete_single(V, p.I, F, std::vector<Mask>(g.n(), 0));
      r = {f, f};
      break;
    }
    case Step::ExactSingle: {
      ++detail::exact_single;
      auto f = complete_single(V, p.I, F, std::vector<Mask>(g.n(), 0));
      r = {f, f};
      break;
    }
    case Step::OddPath: {
      std::vector<Mask> Fo;
      for (int v : p.P) Fo.push_back(F[v]);
      auto fo = color_odd_path(Fo, 1, 1);
      std::vector<Mask> f(g.n(), 0);
      for (size_t i = 0; i < p.P.size(); ++i) f[p.P[i]] = fo[i];
      r = {f, f};
      break;
    }
    case Step::DeleteP2: r = run_delete_p2(p, V, F); break;
    case Step::Star: r = run_star(p, V, F); break;
    case Step::DeleteP3P4: r = run_delete_p3p4(p, V, F); break;
    case Step::SuperH: r = run_superH(p, V, F); break;
    case Step::SupportDeg3: r = run_support_deg3(p, V, F); break;
    case Step::CycleLeaves: r = run_cycle(p, V, F); break;
    case Step::General: r = run_general(p, V, F); break;
    case Step::Components: break;
  }
  audit(p, V, F, r);
  return r;
}

void collect_steps(const TractPlan& p, std::vector<std::string>& out) {
  std::string s = step_name(p.step);
  if (p.step == Step::ExactSingle) s += "(" + std::to_string(p.verts.size()) + ")";
  out.push_back(s);
  for (const auto& k : p.kids) collect_steps(*k, out);
}

}  // namespace

Certified certify(const Graph& g) {
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  View V(g, all);
  GoodnessReport good = is_good_graph(g);
  if (!good.good()) {
    std::string why = !good.bipartite ? "not bipartite" : !good.subcubic ? "not subcubic" : good.violations[0].condition;
    throw AvoidanceError("graph is not good: " + why);
  }
  for (const auto& c : V.comps()) {
    View C(g, c);
    Graph h = C.induced();
    if (as_path(h) && c.size() % 2 == 0 && c.size() >= 4)
      throw AvoidanceError("component is an even path on " + std::to_string(c.size()) + " vertices");
    if (as_H(h)) throw AvoidanceError("component is a member of H");
  }
  Certified out;
  out.plan = certify_any(V);
  if (!out.plan) throw std::logic_error("certify: no plan");
  out.cert.M = out.plan->M;
  out.cert.I = out.plan->I;
  std::sort(out.cert.M.begin(), out.cert.M.end());
  return out;
}

TractablePair tractable_pair(const Graph& g, const Certified& c, const std::vector<Mask>& F) {
  if (static_cast<int>(F.size()) != g.n()) throw AvoidanceError("F has the wrong length");
  Verdict ob = obeys(g, F, c.cert.M);
  if (!ob) throw AvoidanceError("F disobeys M: " + ob.reasons.front());
  Pair r = run(*c.plan, g, F);
  TractablePair out{r.first, r.second, c.cert};
  return out;
}

TractablePair tractable_pair(const Graph& g, const std::vector<Mask>& F) {
  Certified c = certify(g);
  return tractable_pair(g, c, F);
}

std::vector<std::string> plan_steps(const Certified& c) {
  std::vector<std::string> out;
  if (c.plan) collect_steps(*c.plan, out);
  return out;
}

}  // namespace tfc
