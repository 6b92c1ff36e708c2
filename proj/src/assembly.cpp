#include "tfc/assembly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tfc/patterns.hpp"

namespace tfc {

using nlohmann::json;

namespace {

AssemblyCounters g_counters;
std::mutex g_counters_mu;

bool contains(const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

Edge norm(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string vec_str(const std::vector<int>& xs) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(CompKind k) {
  switch (k) {
    case CompKind::OddPath: return "odd_path";
    case CompKind::EvenPath: return "even_path";
    case CompKind::HMember: return "H";
    case CompKind::Other: return "other";
  }
  return "?";
}

std::string to_string(CertTag t) {
  switch (t) {
    case CertTag::Single: return "single";
    case CertTag::OddPath: return "odd_path";
    case CertTag::OddP3: return "odd_p3";
    case CertTag::EvenPath: return "even_path";
    case CertTag::HPath: return "H";
    case CertTag::Tractable: return "tractable";
  }
  return "?";
}

AssemblyCounters assembly_counters() {
  std::lock_guard<std::mutex> lk(g_counters_mu);
  return g_counters;
}
void reset_assembly_counters() {
  std::lock_guard<std::mutex> lk(g_counters_mu);
  g_counters = {};
}

// ---------------------------------------------------------------------------

int ClassPairSubgraph::n_C(int comp, int v) const {
  int c = 0;
  for (int w : parent->nbrs(v))
    if (comp_of[w] == comp) ++c;
  return c;
}

int ClassPairSubgraph::deg_C(int v) const {
  int c = 0;
  for (int w : parent->nbrs(v))
    if (comp_of[w] >= 0 && comp_of[w] == comp_of[v]) ++c;
  return c;
}

ClassPairSubgraph class_pair(const Graph& g, const ThreeColoring& f, int s, int t) {
  if (static_cast<int>(f.colors.size()) != g.n()) throw std::invalid_argument("class_pair: coloring has wrong length");
  for (auto [u, v] : g.edges())
    if (f.colors[u] == f.colors[v]) throw std::invalid_argument("class_pair: coloring is not proper");
  ClassPairSubgraph ctx;
  ctx.parent = &g;
  ctx.f = f;
  ctx.s = s;
  ctx.t = t;
  for (int v = 0; v < g.n(); ++v)
    if (f.colors[v] == s || f.colors[v] == t) ctx.verts.push_back(v);
  ctx.comp_of.assign(g.n(), -1);
  for (auto& vs : components_of(g, ctx.verts)) {
    ClassComponent c;
    Graph h = g.induced(vs);
    std::vector<int> order;
    if (as_path(h, &order)) {
      c.kind = vs.size() % 2 ? CompKind::OddPath : CompKind::EvenPath;
    } else if (as_H(h, &order, &c.a, &c.b)) {
      c.kind = CompKind::HMember;
    } else {
      c.kind = CompKind::Other;
      order.resize(vs.size());
      std::iota(order.begin(), order.end(), 0);
    }
    for (int x : order) c.verts.push_back(vs[x]);
    int idx = static_cast<int>(ctx.comps.size());
    for (int v : c.verts) ctx.comp_of[v] = idx;
    ctx.comps.push_back(std::move(c));
  }
  for (auto& c : ctx.comps) {
    std::set<int> nb;
    for (int v : c.verts)
      for (int w : g.nbrs(v))
        if (ctx.comp_of[w] < 0) nb.insert(w);
    c.boundary.assign(nb.begin(), nb.end());
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Even paths. Vertices are 1-indexed along the path as v_1..v_2k.

namespace {

struct EvenBuild {
  std::set<Edge> B1, B2;
  bool b2 = false;      // B2 is defined
  bool own_b2 = false;  // B2 was built separately; otherwise B2 = B1
  std::vector<int> J;
  std::string rule;
};

class EvenPathBuilder {
 public:
  // absent: host vertices treated as deleted (the other side of an H member).
  EvenPathBuilder(const Graph& g, std::vector<int> path, const std::vector<char>& absent)
      : g_(g), P_(std::move(path)), absent_(absent), k_(static_cast<int>(P_.size()) / 2) {
    onpath_.assign(g.n(), 0);
    for (int v : P_) onpath_[v] = 1;
  }

  EvenBuild build() {
    EvenBuild r;
    r.rule = run(r);
    if (r.b2 && !r.own_b2) r.B2 = r.B1;
    return r;
  }

 private:
  const Graph& g_;
  std::vector<int> P_;
  const std::vector<char>& absent_;
  std::vector<char> onpath_;
  int k_;
  // Labels u_i; u1p and u2kp are u'_1 and u'_2k.
  std::vector<int> u_;
  int u1p_ = -1, u2kp_ = -1;

  int v(int i) const { return P_[i - 1]; }
  std::vector<int> out(int i) const {
    std::vector<int> r;
    for (int w : g_.nbrs(v(i)))
      if (!onpath_[w] && !absent_[w]) r.push_back(w);
    std::sort(r.begin(), r.end());
    return r;
  }
  int deg(int i) const {
    int d = 0;
    for (int w : g_.nbrs(v(i)))
      if (!absent_[w]) ++d;
    return d;
  }
  bool adj(int w, int i) const { return w >= 0 && g_.has_edge(w, v(i)); }
  int nC(int w) const {
    int c = 0;
    for (int x : g_.nbrs(w))
      if (onpath_[x]) ++c;
    return c;
  }
  bool meet(int i, int j) const {
    for (int w : out(i))
      if (adj(w, j)) return true;
    return false;
  }
  int U(int i) const { return i >= 1 && i <= 2 * k_ ? u_[i] : -1; }

  static void add(std::set<Edge>& B, int x, int y) {
    if (x < 0 || y < 0) return;
    if (x == y) throw std::logic_error("even path boundary: loop at " + std::to_string(x));
    B.insert(norm(x, y));
  }
  void all_pairs(std::set<Edge>& B, int i, int j) const {
    for (int x : out(i))
      for (int y : out(j)) add(B, x, y);
  }
  void ends(std::set<Edge>& B) const {
    add(B, u_[1], U(2));
    add(B, u1p_, U(2));
    add(B, U(2 * k_ - 1), u_[2 * k_]);
    add(B, U(2 * k_ - 1), u2kp_);
  }
  // No vertex over 2n_C, or the one over has n_C = 3.
  bool b2_rule(const std::set<Edge>& B) const {
    std::map<int, int> d;
    for (auto [x, y] : B) ++d[x], ++d[y];
    for (auto [x, dx] : d)
      if (dx > 2 * nC(x) && nC(x) <= 2) return false;
    return true;
  }

  std::string run(EvenBuild& r) {
    const int k = k_, n = 2 * k;
    if (k == 1) {
      all_pairs(r.B1, 1, 2);
      r.b2 = true;
      return "k1";
    }
    for (int i = 1; i <= n; ++i)
      if (i != 2 && i != n - 1 && deg(i) <= 2) {
        all_pairs(r.B1, 1, 2);
        all_pairs(r.B1, n - 1, n);
        r.b2 = true;
        return "low_degree";
      }
    u_.assign(n + 1, -1);
    for (int i = 2; i < n; ++i) {
      auto o = out(i);
      if (o.size() > 1) throw std::logic_error("even path boundary: interior vertex with two outside neighbours");
      if (!o.empty()) u_[i] = o[0];
    }
    auto o1 = out(1), on = out(n);
    if (o1.size() != 2 || on.size() != 2) throw std::logic_error("even path boundary: end vertex not of degree 3");
    u_[1] = o1[0], u1p_ = o1[1];
    u_[n] = on[0], u2kp_ = on[1];

    if (k == 2) {
      bool disjoint14 = !meet(1, 4);
      if (disjoint14 && nC(u_[1]) == 1 && nC(u1p_) == 1) {
        ends(r.B1);
        r.B2 = r.B1;
        add(r.B1, u_[1], u_[4]);
        add(r.B1, u_[1], u2kp_);
        add(r.B2, u1p_, u_[4]);
        add(r.B2, u1p_, u2kp_);
        r.b2 = r.own_b2 = true;
        return "k2_split";
      }
      if (disjoint14) {
        if (nC(u_[1]) < 2) std::swap(u_[1], u1p_);
        add(r.B1, u_[1], U(2));
        add(r.B1, u_[1], u_[4]);
        add(r.B1, u_[1], u2kp_);
        add(r.B1, u1p_, U(2));
        r.b2 = true;
        return "k2_shared";
      }
      // u'_1 = u'_4 is the common neighbour.
      if (!adj(u1p_, 4)) std::swap(u_[1], u1p_);
      if (!adj(u2kp_, 1)) std::swap(u_[4], u2kp_);
      ends(r.B1);
      add(r.B1, u_[1], u_[4]);
      r.b2 = true;
      return "k2_common";
    }

    // s = -1 stands for -infinity.
    int s = -1;
    for (int j = 0; j <= k - 2 && meet(2 * j + 1, 2 * j + 4); ++j) s = j;
    if (s >= 0 && !adj(u_[1], 4)) std::swap(u_[1], u1p_);
    if (s == k - 2 && !adj(u_[n], n - 3)) std::swap(u_[n], u2kp_);
    const int u1 = u_[1], u1p = u1p_, u3 = u_[3];
    auto nb = [&](int w, int i) { return adj(w, i); };

    // u'_1 = u_3 leaves {u_1, u'_1, u_3} with two members; Cases 1, 3 and 5
    // are skipped then.
    if (s >= 0 && u1p != u3) {
      // Case 1.
      if (nC(u1p) >= 2 && nC(u3) >= 2 && (nC(u1p) == 3 || nC(u3) == 3)) {
        int vv = nC(u1p) == 3 ? u1p : u3;
        std::vector<int> rest;
        for (int x : {u1, u1p, u3})
          if (x != vv) rest.push_back(x);
        bool in_last = nb(vv, n - 1);
        bool rest_last = nb(rest[0], n) && nb(rest[1], n);
        if (in_last && rest_last) {
          r.J = rest;
        } else {
          int avoid = in_last ? n : n - 1;
          int pick = -1;
          for (int x : rest)
            if (!nb(x, avoid) && pick < 0) pick = x;
          if (pick < 0) throw std::logic_error("even path boundary: case 1 has no partner for J");
          r.J = {vv, pick};
        }
        ends(r.B1);
        r.b2 = true;
        return "case1";
      }
      // Case 3.
      if (nC(u1) == 3 && nC(u1p) == 2 && nC(u3) == 2 &&
          (!nb(u1, n - 1) || !(nb(u1p, n) && nb(u3, n)))) {
        int avoid = !nb(u1, n - 1) ? n - 1 : n;
        int pick = -1;
        for (int x : {u1p, u3})
          if (!nb(x, avoid) && pick < 0) pick = x;
        if (pick < 0) throw std::logic_error("even path boundary: case 3 has no partner for J");
        r.J = {u1, pick};
        ends(r.B1);
        r.b2 = true;
        return "case3";
      }
      // Case 5.
      if (nC(u1) == 2 && nC(u1p) == 2 && nC(u3) == 2 && !nb(u1p, n - 1) && !nb(u3, n - 1)) {
        r.J = {u1, u1p, u3};
        ends(r.B1);
        r.b2 = true;
        return "case5";
      }
    }
    if (s >= 0 && s == k - 2) {
      ends(r.B1);
      add(r.B1, u1p, u2kp_);
      for (int j = 2; j <= k - 1; ++j) add(r.B1, U(2 * j - 1), U(2 * j));
      r.b2 = true;
      return "case6";
    }
    if (s >= 0 && s == k - 3) {
      ends(r.B1);
      for (int j = 2; j <= k - 2; ++j) add(r.B1, U(2 * j - 1), U(2 * j));
      add(r.B1, U(n - 3), u_[n]);
      add(r.B1, U(n - 3), u2kp_);
      r.b2 = true;
      return "case7";
    }
    if (s >= 0 && s <= k - 4 && !nb(u1p, 2 * s + 6)) {
      ends(r.B1);
      for (int j = 2; j <= s + 1; ++j) add(r.B1, U(2 * j - 1), U(2 * j));
      add(r.B1, u1p, U(2 * s + 6));
      add(r.B1, U(2 * s + 3), U(2 * s + 6));
      add(r.B1, U(2 * s + 5), U(2 * s + 6));
      r.b2 = b2_rule(r.B1);
      bool c4 = nC(u1) == 3 && nC(u1p) == 2 && nC(u3) == 2 && nb(u1, n - 1) && nb(u1p, n) && nb(u3, n);
      return c4 ? "case4" : "case2";
    }
    if (s < 0) {
      ends(r.B1);
      add(r.B1, u1, U(4));
      add(r.B1, u1p, U(4));
      add(r.B1, u3, U(4));
      r.b2 = b2_rule(r.B1);
      return "case8";
    }
    if (s == 0 && nb(u1p, 6) && (nC(u3) == 1 || (nC(u3) == 2 && nb(u3, n - 1)))) {
      if (k >= 5 && U(5) != U(8)) {
        add(r.B1, u1, U(2));
        add(r.B1, u1p, U(2));
        add(r.B1, u3, U(8));
        add(r.B1, U(5), U(8));
        add(r.B1, U(7), U(8));
        add(r.B1, U(n - 1), u_[n]);
        add(r.B1, U(n - 1), u2kp_);
        r.b2 = b2_rule(r.B1);
        return "case9a";
      }
      if (k == 4 && U(5) >= 0 && !nb(U(5), 8)) {
        add(r.B1, u1, U(2));
        add(r.B1, u1p, U(2));
        for (int x : {U(5), U(7)}) {
          add(r.B1, x, u_[8]);
          add(r.B1, x, u2kp_);
        }
        r.b2 = true;
        return "case9c";
      }
      if (k >= 4 && U(5) >= 0 && nb(U(5), 8)) {
        if (k == 4 && u_[8] != U(5)) std::swap(u_[8], u2kp_);
        int t = -1;
        for (int j = 0; j <= k - 4 && meet(2 * j + 5, 2 * j + 8); ++j) t = j;
        if (t < 0) throw std::logic_error("even path boundary: case 9 with t undefined");
        if (t == k - 4 && !adj(u_[n], n - 3)) std::swap(u_[n], u2kp_);
        add(r.B1, u1, U(2));
        add(r.B1, u1p, U(2));
        add(r.B1, U(5), U(6));
        for (int i = 0; i <= t - 1; ++i) add(r.B1, U(2 * i + 7), U(2 * i + 8));
        add(r.B1, U(n - 1), u_[n]);
        add(r.B1, U(n - 1), u2kp_);
        if (t == k - 4) {
          add(r.B1, u3, u2kp_);
        } else if (t == k - 5) {
          add(r.B1, U(n - 3), u_[n]);
          add(r.B1, U(n - 3), u2kp_);
        } else {
          add(r.B1, u3, U(2 * t + 10));
          add(r.B1, U(2 * t + 7), U(2 * t + 10));
          add(r.B1, U(2 * t + 9), U(2 * t + 10));
        }
        r.b2 = t >= k - 5 || b2_rule(r.B1);
        return "case9b";
      }
    }
    std::ostringstream os;
    os << "even path boundary: no case applies (k=" << k << ", s=" << s << ", n_C(u1)=" << nC(u1)
       << ", n_C(u1')=" << nC(u1p) << ", n_C(u3)=" << nC(u3) << ", path=" << vec_str(P_) << ")";
    throw std::logic_error(os.str());
  }
};

struct EvenPair {
  std::set<Edge> B1, B2;
  std::vector<int> J;
  std::string rule;
};

EvenPair even_path_pair(const Graph& g, const std::vector<int>& path, const std::vector<char>& absent) {
  EvenBuild fw = EvenPathBuilder(g, path, absent).build();
  if (fw.b2) return {fw.B1, fw.B2, fw.J, fw.rule};
  std::vector<int> rev(path.rbegin(), path.rend());
  EvenBuild bw = EvenPathBuilder(g, rev, absent).build();
  if (bw.b2) return {bw.B1, bw.B2, bw.J, "reversed_" + bw.rule};
  return {fw.B1, bw.B1, {}, fw.rule + "+reversed_" + bw.rule};
}

std::vector<Edge> to_vec(const std::set<Edge>& s) { return {s.begin(), s.end()}; }

// The vertex with deg_B = 2n_C + 1 and n_C <= 2, if any.
int exceptional(const ClassPairSubgraph& ctx, int comp, const std::vector<Edge>& B) {
  std::map<int, int> d;
  for (auto [x, y] : B) ++d[x], ++d[y];
  for (auto [x, dx] : d) {
    int n = ctx.n_C(comp, x);
    if (n <= 2 && dx == 2 * n + 1) return x;
  }
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------

ComponentBoundary boundary_for_component(const ClassPairSubgraph& ctx, int comp) {
  const Graph& g = *ctx.parent;
  const ClassComponent& C = ctx.comps.at(comp);
  ComponentBoundary cb;
  cb.comp = comp;
  auto outs = [&](int v) {
    std::vector<int> r;
    for (int w : g.nbrs(v))
      if (ctx.comp_of[w] != comp) r.push_back(w);
    return r;
  };
  auto cross = [&](std::set<Edge>& B, int x, int y) {
    for (int a : outs(x))
      for (int b : outs(y)) {
        if (a == b) throw std::logic_error("boundary: loop at " + std::to_string(a));
        B.insert(norm(a, b));
      }
  };
  const int k = static_cast<int>(C.verts.size());
  switch (C.kind) {
    case CompKind::OddPath: {
      if (k == 1) {
        cb.tag = CertTag::Single;
        cb.rule = "k1";
      } else if (k == 3) {
        std::set<Edge> B1, B2;
        cross(B1, C.verts[0], C.verts[1]);
        cross(B2, C.verts[1], C.verts[2]);
        cb.tag = CertTag::OddP3;
        cb.cooperate = true;
        cb.bp[0].B = to_vec(B1);
        cb.bp[1].B = to_vec(B2);
        cb.rule = "k3";
      } else {
        std::set<Edge> B;
        cross(B, C.verts[0], C.verts[1]);
        cross(B, C.verts[k - 2], C.verts[k - 1]);
        cb.tag = CertTag::OddPath;
        cb.bp[0].B = cb.bp[1].B = to_vec(B);
        cb.rule = "k_ge5";
      }
      break;
    }
    case CompKind::EvenPath: {
      std::vector<char> absent(g.n(), 0);
      EvenPair ep = even_path_pair(g, C.verts, absent);
      cb.tag = CertTag::EvenPath;
      cb.bp[0].B = to_vec(ep.B1);
      cb.bp[1].B = to_vec(ep.B2);
      if (!ep.J.empty()) cb.bp[0].J = cb.bp[1].J = {ep.J};
      cb.rule = ep.rule;
      break;
    }
    case CompKind::HMember: {
      const int a = C.a, b = C.b;
      std::vector<int> X(C.verts.begin(), C.verts.begin() + a), Y(C.verts.begin() + a, C.verts.end());
      std::vector<char> absent(g.n(), 0);
      for (int y : Y) absent[y] = 1;
      EvenPair ep = even_path_pair(g, X, absent);
      std::set<Edge> S;
      cross(S, Y[b - 2], Y[b - 1]);
      auto nX = [&](int w) {
        int c = 0;
        for (int x : X) c += g.has_edge(w, x);
        return c;
      };
      auto outY = [&](int j) { return outs(Y[j - 1]); };
      std::set<Edge> B1 = ep.B1, B2 = ep.B2;
      if (ep.J.empty()) {
        int chosen = 0;
        for (int i = 1; i <= 2 && !chosen; ++i) {
          const auto& Bi = i == 1 ? ep.B1 : ep.B2;
          std::map<int, int> d;
          for (auto [x, y] : Bi) ++d[x], ++d[y];
          for (auto [w, dw] : d) {
            if (dw != 2 * nX(w) + 1) continue;
            bool hit = ctx.n_C(comp, w) == 3;
            for (int j = 1; j <= b && !hit; ++j) {
              if (!g.has_edge(w, Y[j - 1])) continue;
              if (j != b - 1) {
                hit = true;
              } else {
                for (auto [x, y] : Bi) {
                  int o = x == w ? y : y == w ? x : -1;
                  if (o >= 0 && contains(outY(b), o)) hit = true;
                }
              }
            }
            if (hit) chosen = i;
          }
        }
        if (chosen) B1 = B2 = chosen == 1 ? ep.B1 : ep.B2;
        B1.insert(S.begin(), S.end());
        B2.insert(S.begin(), S.end());
        cb.rule = "H:" + ep.rule + (chosen ? ":merged" : "");
      } else {
        B1.insert(S.begin(), S.end());
        B2.insert(S.begin(), S.end());
        std::vector<int> J = ep.J;
        bool near = false;
        for (int x : J) near = near || contains(outY(b - 1), x) || contains(outY(b), x);
        if (J.size() == 3 && near) {
          std::vector<int> pick;
          for (size_t i = 0; i < J.size() && pick.empty(); ++i)
            for (size_t j = i + 1; j < J.size() && pick.empty(); ++j) {
              Edge e = norm(J[i], J[j]);
              bool indep = !B1.count(e) && !B2.count(e);
              bool three = ctx.n_C(comp, J[i]) == 3 || ctx.n_C(comp, J[j]) == 3;
              if (indep && three) pick = {J[i], J[j]};
            }
          if (pick.empty()) throw std::logic_error("H boundary: no independent J pair with n_C = 3");
          J = pick;
        }
        cb.bp[0].J = cb.bp[1].J = {J};
        cb.rule = "H:" + ep.rule;
      }
      cb.tag = CertTag::HPath;
      cb.bp[0].B = to_vec(B1);
      cb.bp[1].B = to_vec(B2);
      cb.I = {Y[1]};
      break;
    }
    case CompKind::Other: {
      Graph h = g.induced(C.verts);
      cb.cert = std::make_shared<Certified>(certify(h));
      std::set<Edge> B;
      for (int i = 0; i < h.n(); ++i)
        if (h.deg(i) == 1) cross(B, C.verts[i], C.verts[h.nbrs(i)[0]]);
      for (auto [x, y] : cb.cert->cert.M) cross(B, C.verts[x], C.verts[y]);
      cb.tag = CertTag::Tractable;
      cb.bp[0].B = cb.bp[1].B = to_vec(B);
      for (int i : cb.cert->cert.I) cb.I.push_back(C.verts[i]);
      cb.rule = "tractable";
      break;
    }
  }
  for (auto& bp : cb.bp) bp.w = exceptional(ctx, comp, bp.B);
  if (!(cb.bp[0].w >= 0 && cb.bp[1].w >= 0)) cb.bp[0].w = cb.bp[1].w = -1;
  auto bad = audit_boundary(ctx, cb);
  if (!bad.empty())
    throw std::logic_error("boundary audit failed for component " + std::to_string(comp) + " (" + cb.rule + "): " +
                           bad.front());
  return cb;
}

std::vector<std::string> audit_boundary(const ClassPairSubgraph& ctx, const ComponentBoundary& cb) {
  std::vector<std::string> bad;
  const Graph& g = *ctx.parent;
  const int comp = cb.comp;
  const auto& bd = ctx.comps[comp].boundary;
  for (int i = 0; i < 2; ++i) {
    const BoundaryPair& bp = cb.bp[i];
    std::string tag = "B" + std::to_string(i + 1) + ": ";
    std::map<int, std::set<int>> nb;
    for (auto [x, y] : bp.B) {
      if (!contains(bd, x) || !contains(bd, y)) bad.push_back(tag + "edge leaves N_G(C)");
      nb[x].insert(y);
      nb[y].insert(x);
    }
    for (auto& [x, nx] : nb)
      for (int y : nx)
        for (int z : nx)
          if (x < y && y < z && nb[y].count(z) && ctx.n_C(comp, x) == 1 && ctx.n_C(comp, y) == 1 &&
              ctx.n_C(comp, z) == 1)
            bad.push_back(tag + "triangle of n_C = 1 vertices");
    int over = 0;
    for (auto& [x, nx] : nb) {
      int n = ctx.n_C(comp, x), d = static_cast<int>(nx.size());
      if (d > 2 * n + 1) bad.push_back(tag + "deg_B > 2n_C + 1 at " + std::to_string(x));
      if (d == 2 * n + 1) ++over;
    }
    if (over > 1) bad.push_back(tag + "two vertices above 2n_C");
    if (bp.J.size() > 1) bad.push_back(tag + "more than one J set");
    std::set<int> seen;
    for (const auto& J : bp.J) {
      for (int x : J) {
        if (ctx.n_C(comp, x) < 2) bad.push_back(tag + "J vertex with n_C < 2");
        if (!seen.insert(x).second) bad.push_back(tag + "J sets overlap");
      }
      for (int x : J)
        for (int y : J)
          if (x < y && nb[x].count(y)) bad.push_back(tag + "J not independent in B");
      int n3 = 0, n2 = 0;
      for (int x : J) (ctx.n_C(comp, x) == 3 ? n3 : n2) += ctx.n_C(comp, x) >= 2;
      bool shape = (J.size() == 2 && n3 >= 1) || (J.size() == 3 && n2 == 3);
      if (!shape) bad.push_back(tag + "J shape " + vec_str(J));
      std::set<int> n2nb;
      for (int x : J)
        if (ctx.n_C(comp, x) == 2)
          for (int y : nb[x]) n2nb.insert(y);
      if (n2nb.size() > 2) bad.push_back(tag + "J clause 6(a)");
    }
    if (bp.w >= 0 && !bp.J.empty()) bad.push_back(tag + "exceptional vertex with nonempty J");
  }
  if (cb.dangerous()) {
    for (int i = 0; i < 2; ++i) {
      int w = cb.bp[i].w;
      const auto& other = cb.bp[1 - i].B;
      int d = 0;
      for (auto [x, y] : other) d += (x == w) + (y == w);
      if (d > 2 * ctx.n_C(comp, w) - 1) bad.push_back("w" + std::to_string(i + 1) + " too heavy in the other graph");
    }
  }
  (void)g;
  return bad;
}

// ---------------------------------------------------------------------------

ApplyResult apply_certificate(const ClassPairSubgraph& ctx, const ComponentBoundary& cb,
                              const std::vector<Mask>& F1, const std::vector<Mask>& F2) {
  const Graph& g = *ctx.parent;
  const ClassComponent& C = ctx.comps.at(cb.comp);
  const int k = static_cast<int>(C.verts.size());
  if (static_cast<int>(F1.size()) != k || static_cast<int>(F2.size()) != k)
    throw std::invalid_argument("apply_certificate: F has the wrong length");
  for (int i = 0; i < k; ++i)
    for (Mask F : {F1[i], F2[i]})
      if (popc(F) > 6 - 2 * ctx.deg_C(C.verts[i]))
        throw AvoidanceError("apply_certificate: |F(v)| > 6 - 2deg_C(v)");
  ApplyResult r;
  r.I = cb.I;
  Graph h = g.induced(C.verts);
  auto path_dp = [&](const std::vector<Mask>& F, const std::vector<int>& sizes) {
    Completion c(k);
    c.size = sizes;
    c.forbid = F;
    if (!complete_avoiding(h, c)) throw std::logic_error("apply_certificate: path completion failed");
    return c.value;
  };
  auto twice = [&](std::vector<Mask>& a, std::vector<Mask>& b, const std::vector<Mask>& f) { a = b = f; };
  switch (cb.tag) {
    case CertTag::Single: {
      twice(r.a1, r.b1, {lowest(static_cast<Mask>(kFull14 & ~F1[0]), 8)});
      twice(r.a2, r.b2, {lowest(static_cast<Mask>(kFull14 & ~F2[0]), 8)});
      break;
    }
    case CertTag::OddPath: {
      twice(r.a1, r.b1, color_odd_path(F1, 1, 1));
      twice(r.a2, r.b2, color_odd_path(F2, 1, 1));
      break;
    }
    case CertTag::OddP3: {
      twice(r.a1, r.b1, path_dp(F1, {8, 6, 6}));
      twice(r.a2, r.b2, path_dp(F2, {6, 6, 8}));
      break;
    }
    case CertTag::EvenPath: {
      auto one = [&](const std::vector<Mask>& F) {
        try {
          return color_even_path(F, 0, true).f;
        } catch (const AvoidanceError&) {
          {
            std::lock_guard<std::mutex> lk(g_counters_mu);
            ++g_counters.path_dp;
          }
          std::vector<int> sizes(k, 6);
          sizes.front() = sizes.back() = 7;
          return path_dp(F, sizes);
        }
      };
      twice(r.a1, r.b1, one(F1));
      twice(r.a2, r.b2, one(F2));
      break;
    }
    case CertTag::HPath: {
      twice(r.a1, r.b1, color_H(C.a, C.b, F1));
      twice(r.a2, r.b2, color_H(C.a, C.b, F2));
      break;
    }
    case CertTag::Tractable: {
      TractablePair p1 = tractable_pair(h, *cb.cert, F1);
      TractablePair p2 = tractable_pair(h, *cb.cert, F2);
      r.a1 = p1.f1, r.b1 = p1.f2, r.a2 = p2.f1, r.b2 = p2.f2;
      break;
    }
  }
  // Size identity per the certificate.
  std::vector<char> inI(g.n(), 0);
  for (int v : r.I) inI[v] = 1;
  for (int i = 0; i < k; ++i) {
    int v = C.verts[i];
    int want = 16 - 2 * ctx.deg_C(v) - 2 * inI[v];
    int got1 = popc(r.a1[i]) + popc(r.b1[i]), got2 = popc(r.a2[i]) + popc(r.b2[i]);
    bool ok = cb.cooperate ? popc(r.a1[i]) + popc(r.a2[i]) == want : got1 == want && got2 == want;
    if (!ok) throw std::logic_error("apply_certificate: size identity fails at vertex " + std::to_string(v));
  }
  for (const auto& [F, a, b] : {std::tie(F1, r.a1, r.b1), std::tie(F2, r.a2, r.b2)}) {
    if (!verify_avoiding(h, F, a) || !verify_avoiding(h, F, b))
      throw std::logic_error("apply_certificate: coloring is not F-avoiding");
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<BoundaryHost> boundary_hosts(const ClassPairSubgraph& ctx, std::vector<ComponentBoundary>& cbs) {
  const Graph& g = *ctx.parent;
  MultiGraph A;
  A.n = g.n();
  std::vector<int> dang;
  for (int i = 0; i < static_cast<int>(cbs.size()); ++i)
    if (cbs[i].dangerous()) {
      dang.push_back(i);
      A.edges.emplace_back(cbs[i].bp[0].w, cbs[i].bp[1].w);
    }
  if (!dang.empty()) {
    Digraph d = orient_balanced(A);
    std::map<Edge, int> avail;
    for (int v = 0; v < d.n(); ++v)
      for (int w : d.out(v)) ++avail[{v, w}];
    for (int i : dang) {
      auto& cb = cbs[i];
      Edge fw{cb.bp[0].w, cb.bp[1].w};
      if (avail[fw] > 0) {
        --avail[fw];
      } else {
        Edge bw{fw.second, fw.first};
        if (avail[bw] <= 0) throw std::logic_error("boundary_hosts: orientation lost an arc");
        --avail[bw];
        std::swap(cb.bp[0], cb.bp[1]);
      }
    }
  }
  std::vector<BoundaryHost> hosts(2);
  std::set<int> V;
  for (int v = 0; v < g.n(); ++v)
    if (ctx.comp_of[v] < 0)
      for (int w : g.nbrs(v))
        if (ctx.comp_of[w] >= 0) {
          V.insert(v);
          break;
        }
  for (int i = 0; i < 2; ++i) {
    BoundaryHost& H = hosts[i];
    H.H = Graph(g.n());
    H.V.assign(V.begin(), V.end());
    for (const auto& cb : cbs) {
      for (auto [x, y] : cb.bp[i].B)
        if (!H.H.has_edge(x, y)) H.H.add_edge(x, y);
      for (const auto& J : cb.bp[i].J) H.J.push_back({J, cb.bp[i].B});
    }
    H.max_degree = H.H.max_degree();
    if (H.max_degree > 7)
      throw std::logic_error("boundary_hosts: host " + std::to_string(i + 1) + " has degree " +
                             std::to_string(H.max_degree));
  }
  return hosts;
}

// ---------------------------------------------------------------------------
// 7-coloring of the host graph.

namespace {

// DSatur backtracking over the uncolored vertices of todo. h holds fixed
// colors (0 = uncolored).
bool dsatur(const Graph& H, const std::vector<int>& todo, std::vector<int>& h, long& budget) {
  int best = -1, best_sat = -1, best_deg = -1;
  for (int v : todo) {
    if (h[v]) continue;
    int used = 0, dg = 0;
    for (int w : H.nbrs(v)) {
      if (h[w]) used |= 1 << h[w];
      else ++dg;
    }
    int sat = __builtin_popcount(used);
    if (sat > best_sat || (sat == best_sat && dg > best_deg)) best = v, best_sat = sat, best_deg = dg;
  }
  if (best < 0) return true;
  if (--budget < 0) return false;
  int used = 0;
  for (int w : H.nbrs(best))
    if (h[w]) used |= 1 << h[w];
  for (int c = 1; c <= 7; ++c) {
    if (used >> c & 1) continue;
    h[best] = c;
    if (dsatur(H, todo, h, budget)) return true;
  }
  h[best] = 0;
  return false;
}

int nb_colors(const Graph& H, const std::vector<int>& h, int x, int y, const std::vector<int>& J) {
  int used = 0;
  for (int z : {x, y})
    for (int w : H.nbrs(z))
      if (!contains(J, w) && h[w]) used |= 1 << h[w];
  return used;
}

// Gives some non-adjacent pair of J a common free color.
bool merge_pair(const Graph& H, std::vector<int>& h, const std::vector<int>& J) {
  for (size_t i = 0; i < J.size(); ++i)
    for (size_t j = i + 1; j < J.size(); ++j) {
      int x = J[i], y = J[j];
      if (H.has_edge(x, y) || h[x] || h[y]) continue;
      int used = nb_colors(H, h, x, y, J);
      for (int c = 1; c <= 7; ++c)
        if (!(used >> c & 1)) {
          h[x] = h[y] = c;
          return true;
        }
    }
  return false;
}

bool greedy_one(const Graph& H, std::vector<int>& h, int v) {
  int used = 0;
  for (int w : H.nbrs(v))
    if (h[w]) used |= 1 << h[w];
  for (int c = 1; c <= 7; ++c)
    if (!(used >> c & 1)) {
      h[v] = c;
      return true;
    }
  return false;
}

bool j_ok(const std::vector<int>& h, const std::vector<JConstraint>& J) {
  for (const auto& jc : J) {
    bool hit = false;
    for (size_t i = 0; i < jc.J.size(); ++i)
      for (size_t j = i + 1; j < jc.J.size(); ++j) hit = hit || h[jc.J[i]] == h[jc.J[j]];
    if (!hit) return false;
  }
  return true;
}

bool proper7(const Graph& H, const std::vector<int>& V, const std::vector<int>& h) {
  for (int v : V) {
    if (h[v] < 1 || h[v] > 7) return false;
    for (int w : H.nbrs(v))
      if (h[w] == h[v]) return false;
  }
  return true;
}

// Tries every choice of one pair per J, identifying the pair.
bool full_search(const Graph& H, const std::vector<int>& V, const std::vector<JConstraint>& J, size_t idx,
                 std::vector<int>& h) {
  if (idx == J.size()) {
    std::vector<int> trial = h;
    long budget = 2'000'000;
    if (!dsatur(H, V, trial, budget)) return false;
    // Pairs were seeded with equal colors; DSatur never recolors them.
    h = trial;
    return true;
  }
  const auto& Jv = J[idx].J;
  for (size_t i = 0; i < Jv.size(); ++i)
    for (size_t j = i + 1; j < Jv.size(); ++j) {
      int x = Jv[i], y = Jv[j];
      if (H.has_edge(x, y)) continue;
      for (int c = 1; c <= 7; ++c) {
        if ((h[x] && h[x] != c) || (h[y] && h[y] != c)) continue;
        int used = nb_colors(H, h, x, y, {});
        if (used >> c & 1) continue;
        int ox = h[x], oy = h[y];
        h[x] = h[y] = c;
        if (full_search(H, V, J, idx + 1, h)) return true;
        h[x] = ox, h[y] = oy;
      }
    }
  return false;
}

bool claim3(const Graph& H, const JConstraint& jc) {
  const auto& J = jc.J;
  if (J.size() == 2) return true;
  int inside = 0;
  for (size_t i = 0; i < J.size(); ++i)
    for (size_t j = i + 1; j < J.size(); ++j) inside += H.has_edge(J[i], J[j]);
  if (inside >= 2) return true;
  std::set<Edge> own(jc.BC.begin(), jc.BC.end());
  if (inside <= 1)
    for (int x : J) {
      int foreign = 0;
      for (int w : H.nbrs(x)) foreign += !own.count(norm(x, w));
      if (foreign <= 2) return true;
    }
  std::set<int> nb;
  for (auto [x, y] : jc.BC) {
    if (contains(J, x)) nb.insert(y);
    if (contains(J, y)) nb.insert(x);
  }
  return nb.size() <= 1;
}

}  // namespace

std::vector<int> boundary_7coloring(const Graph& H, const std::vector<int>& V, const std::vector<JConstraint>& J,
                                    SevenColoringStats* stats) {
  for (int v : V)
    if (H.deg(v) > 7) throw std::logic_error("boundary_7coloring: degree above 7 at " + std::to_string(v));
  // K_8 components.
  for (auto& comp : components_of(H, V))
    if (comp.size() == 8) {
      bool clique = true;
      for (int v : comp) clique = clique && H.deg(v) == 7;
      if (clique) throw std::logic_error("boundary_7coloring: K_8 component");
    }
  std::vector<int> h(H.n(), 0);
  // Staging: S_C = J_C, or J_C plus a vertex u_C seeing two members of J_C.
  std::vector<char> direct(J.size(), 0);
  std::vector<int> uC(J.size(), -1);
  std::vector<char> held(H.n(), 0);
  for (size_t i = 0; i < J.size(); ++i) {
    direct[i] = claim3(H, J[i]);
    if (!direct[i]) {
      std::map<int, int> hits;
      for (auto [x, y] : J[i].BC) {
        if (contains(J[i].J, x) && !contains(J[i].J, y)) ++hits[y];
        if (contains(J[i].J, y) && !contains(J[i].J, x)) ++hits[x];
      }
      for (auto [u, c] : hits)
        if (c == 2 && uC[i] < 0) uC[i] = u;
    }
    for (int x : J[i].J) held[x] = 1;
    if (uC[i] >= 0) held[uC[i]] = 1;
  }
  bool staged = true;
  for (size_t i = 0; i < J.size(); ++i) staged = staged && (direct[i] || uC[i] >= 0);
  if (staged) {
    std::vector<int> rest;
    for (int v : V)
      if (!held[v]) rest.push_back(v);
    long budget = 2'000'000;
    staged = dsatur(H, rest, h, budget);
  }
  // Components with a held u_C get their pair first, then the rest of J_C and u_C.
  for (size_t i = 0; staged && i < J.size(); ++i)
    if (!direct[i]) staged = merge_pair(H, h, J[i].J);
  for (size_t i = 0; staged && i < J.size(); ++i)
    if (!direct[i])
      for (int x : J[i].J)
        if (!h[x]) staged = staged && greedy_one(H, h, x);
  for (size_t i = 0; staged && i < J.size(); ++i)
    if (!direct[i] && !h[uC[i]]) {
      bool in_direct = false;
      for (size_t j = 0; j < J.size(); ++j) in_direct = in_direct || (direct[j] && contains(J[j].J, uC[i]));
      if (!in_direct) staged = greedy_one(H, h, uC[i]);
    }
  for (size_t i = 0; staged && i < J.size(); ++i)
    if (direct[i]) {
      staged = merge_pair(H, h, J[i].J);
      for (int x : J[i].J)
        if (staged && !h[x]) staged = greedy_one(H, h, x);
    }
  if (staged)
    for (int v : V)
      if (staged && !h[v]) staged = greedy_one(H, h, v);
  if (!staged || !proper7(H, V, h) || !j_ok(h, J)) {
    {
      std::lock_guard<std::mutex> lk(g_counters_mu);
      ++g_counters.seven_fallback;
    }
    if (stats) stats->fallback = true;
    h.assign(H.n(), 0);
    if (!full_search(H, V, J, 0, h)) throw std::logic_error("boundary_7coloring: no coloring meets the J sets");
  }
  if (!proper7(H, V, h) || !j_ok(h, J)) throw std::logic_error("boundary_7coloring: result fails its audit");
  return h;
}

// ---------------------------------------------------------------------------

Gst build_gst(const Graph& g, const ThreeColoring& f, int s, int t, json* trace) {
  ClassPairSubgraph ctx = class_pair(g, f, s, t);
  std::vector<ComponentBoundary> cbs;
  for (int c = 0; c < static_cast<int>(ctx.comps.size()); ++c) cbs.push_back(boundary_for_component(ctx, c));
  std::vector<BoundaryHost> hosts = boundary_hosts(ctx, cbs);
  std::vector<std::vector<int>> h7(2);
  std::vector<Mask> hb[2];  // (14:2) colorings {2h-1, 2h}
  for (int i = 0; i < 2; ++i) {
    SevenColoringStats st;
    h7[i] = boundary_7coloring(hosts[i].H, hosts[i].V, hosts[i].J, &st);
    hb[i].assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
      if (ctx.comp_of[v] < 0) hb[i][v] = static_cast<Mask>(3u << (2 * (std::max(h7[i][v], 1) - 1)));
  }
  Gst out;
  out.g.a = 56;
  out.g.sets.assign(g.n(), {});
  std::vector<std::vector<Mask>> parts(4, std::vector<Mask>(g.n(), 0));
  for (int v = 0; v < g.n(); ++v)
    if (ctx.comp_of[v] < 0) parts[0][v] = parts[1][v] = hb[0][v], parts[2][v] = parts[3][v] = hb[1][v];
  json comps = json::array();
  for (const auto& cb : cbs) {
    const auto& C = ctx.comps[cb.comp];
    std::vector<Mask> F[2];
    for (int i = 0; i < 2; ++i)
      for (int v : C.verts) {
        Mask m = 0;
        for (int w : g.nbrs(v))
          if (ctx.comp_of[w] < 0) m |= hb[i][w];
        F[i].push_back(m);
      }
    ApplyResult r = apply_certificate(ctx, cb, F[0], F[1]);
    for (size_t j = 0; j < C.verts.size(); ++j) {
      int v = C.verts[j];
      parts[0][v] = r.a1[j], parts[1][v] = r.b1[j], parts[2][v] = r.a2[j], parts[3][v] = r.b2[j];
    }
    out.I.insert(out.I.end(), r.I.begin(), r.I.end());
    if (trace) {
      json jc;
      jc["kind"] = to_string(C.kind);
      jc["vertices"] = C.verts;
      jc["certificate"] = to_string(cb.tag);
      jc["rule"] = cb.rule;
      jc["cooperate"] = cb.cooperate;
      jc["I"] = cb.I;
      for (int i = 0; i < 2; ++i) {
        json b;
        b["edges"] = json::array();
        for (auto [x, y] : cb.bp[i].B) b["edges"].push_back({x, y});
        b["J"] = cb.bp[i].J;
        b["w"] = cb.bp[i].w;
        jc["B" + std::to_string(i + 1)] = b;
      }
      if (cb.cert) jc["plan"] = plan_steps(*cb.cert);
      comps.push_back(jc);
    }
  }
  std::sort(out.I.begin(), out.I.end());
  for (int v = 0; v < g.n(); ++v) {
    ColorSet cs;
    for (int p = 0; p < 4; ++p)
      for (int c : colors_of(parts[p][v])) cs.push_back(c + 14 * p);
    out.g.sets[v] = cs;
  }
  // Audit: disjoint along edges and the size formula.
  std::vector<char> inI(g.n(), 0);
  for (int v : out.I) inI[v] = 1;
  for (int v = 0; v < g.n(); ++v) {
    int want = ctx.comp_of[v] < 0 ? 8 : 32 - 4 * ctx.deg_C(v) - 4 * inI[v];
    if (static_cast<int>(out.g.sets[v].size()) != want)
      throw std::logic_error("build_gst: size formula fails at vertex " + std::to_string(v));
  }
  for (auto [u, v] : g.edges())
    if (!disjoint(out.g.sets[u], out.g.sets[v]))
      throw std::logic_error("build_gst: adjacent sets meet at edge " + std::to_string(u) + "-" + std::to_string(v));
  for (int v : out.I)
    for (int w : g.nbrs(v))
      if (inI[w]) throw std::logic_error("build_gst: I is not independent");
  if (trace) {
    json& tr = *trace;
    tr["s"] = s;
    tr["t"] = t;
    tr["components"] = comps;
    for (int i = 0; i < 2; ++i) {
      json hj;
      hj["max_degree"] = hosts[i].max_degree;
      json col = json::object();
      for (int v : hosts[i].V) col[std::to_string(v)] = h7[i][v];
      hj["coloring"] = col;
      tr["H" + std::to_string(i + 1)] = hj;
    }
    tr["I"] = out.I;
    tr["size_audit"] = "pass";
  }
  return out;
}

SetColoring color_172_60(const Graph& g, const ThreeColoring& f, json* trace) {
  std::string why;
  if (!verify_good_coloring(g, f, &why)) throw std::invalid_argument("color_172_60: coloring is not good: " + why);
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  SetColoring acc;
  std::vector<char> inI(g.n(), 0);
  json stages = json::array();
  for (auto& p : pairs) {
    json st;
    Gst gst = build_gst(g, f, p[0], p[1], trace ? &st : nullptr);
    for (int v : gst.I) {
      if (inI[v]) throw std::logic_error("color_172_60: I sets overlap");
      inI[v] = 1;
    }
    acc = acc.a == 0 ? gst.g : uplus(acc, gst.g);
    if (trace) stages.push_back(st);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (!inI[v]) continue;
    for (int c = 169; c <= 172; ++c) acc.sets[v].push_back(c);
  }
  acc.a = 172;
  for (int v = 0; v < g.n(); ++v)
    if (static_cast<int>(acc.sets[v].size()) < 60)
      throw std::logic_error("color_172_60: vertex " + std::to_string(v) + " has fewer than 60 colors");
  SetColoring out = trim(acc, 60);
  out.a = 172;
  out.b = 60;
  Verdict vd = verify_set_coloring(g, out, 172, 60);
  if (!vd) throw std::logic_error("color_172_60: verification failed: " + vd.reasons.front());
  if (trace) {
    (*trace)["stages"] = stages;
    (*trace)["verified"] = true;
  }
  return out;
}

}  // namespace tfc
