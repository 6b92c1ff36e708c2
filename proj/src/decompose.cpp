#include "tfc/decompose.hpp"

#include <algorithm>
#include <mutex>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tfc/assembly.hpp"
#include "tfc/fixtures.hpp"
#include "tfc/generate.hpp"
#include "tfc/good.hpp"

namespace tfc {

namespace {

using nlohmann::json;

DecomposeStats g_stats;
std::mutex g_stats_mu;

json coloring_json(const SetColoring& f) { return json::parse(coloring_to_json(f)); }

void require(const Verdict& v, const std::string& stage) {
  if (!v.ok) throw std::logic_error(stage + ": " + (v.reasons.empty() ? "invalid coloring" : v.reasons[0]));
}

int index_in(const std::vector<int>& vs, int x) {
  auto it = std::find(vs.begin(), vs.end(), x);
  return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
}

// Bijection on 1..n that sends from[i] to to[i]; unlisted colors fill the
// gaps in increasing order.
std::vector<int> permutation(int n, const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> pi(n + 1, 0);
  std::vector<char> hit(n + 1, 0);
  for (size_t i = 0; i < from.size(); ++i) {
    if (pi[from[i]] && pi[from[i]] != to[i]) throw std::logic_error("inconsistent color permutation");
    if (hit[to[i]] && pi[from[i]] != to[i]) throw std::logic_error("color permutation is not injective");
    pi[from[i]] = to[i];
    hit[to[i]] = 1;
  }
  int next = 1;
  for (int c = 1; c <= n; ++c) {
    if (pi[c]) continue;
    while (hit[next]) ++next;
    pi[c] = next;
    hit[next] = 1;
  }
  return pi;
}

ColorSet permuted(const std::vector<int>& pi, const ColorSet& s) {
  ColorSet t;
  for (int c : s) t.push_back(pi[c]);
  std::sort(t.begin(), t.end());
  return t;
}

SetColoring edge_coloring(int b) {
  SetColoring f{172, b, {{}, {}}};
  for (int c = 1; c <= b; ++c) f.sets[0].push_back(c), f.sets[1].push_back(b + c);
  return f;
}

// Completes an (8:3)-coloring on the vertices with empty sets.
bool extend83(const Graph& g, std::vector<ColorSet>& sets) {
  std::vector<int> todo;
  for (int v = 0; v < g.n(); ++v)
    if (sets[v].empty()) todo.push_back(v);
  std::function<bool(size_t)> go = [&](size_t i) {
    if (i == todo.size()) return true;
    int v = todo[i];
    for (int m = 0; m < 256; ++m) {
      if (__builtin_popcount(m) != 3) continue;
      ColorSet s;
      for (int c = 0; c < 8; ++c)
        if (m >> c & 1) s.push_back(c + 1);
      bool ok = true;
      for (int w : g.nbrs(v))
        if (!sets[w].empty() && !disjoint(sets[w], s)) ok = false;
      if (!ok) continue;
      sets[v] = s;
      if (go(i + 1)) return true;
    }
    sets[v].clear();
    return false;
  };
  return go(0);
}

SetColoring color_172_60_impl(const Graph& g, bool check, json* trace) {
  if (check) {
    if (!is_subcubic(g)) throw std::invalid_argument("color_172_60_general: graph is not subcubic");
    if (!is_triangle_free(g)) throw std::invalid_argument("color_172_60_general: graph has a triangle");
    if (!is_forbidden_free(g)) throw std::invalid_argument("color_172_60_general: graph is not forbidden-free");
  }
  SetColoring out{172, 60, std::vector<ColorSet>(g.n())};
  if (trace) (*trace)["components"] = json::array();
  for (const auto& comp : components(g)) {
    Graph gc = g.induced(comp);
    json ct;
    ct["vertices"] = comp;
    ct["blocks"] = json::array();
    GlueNode cur;
    if (gc.n() == 1) {
      cur.vertices = {0};
      cur.f = edge_coloring(60);
      cur.f.sets.pop_back();
    } else {
      Connectivity con = decompose_connectivity(gc, false);
      std::vector<GlueNode> nodes;
      for (const Block& b : con.blocks) {
        GlueNode nd;
        nd.vertices = b.vertices;
        json bt;
        bt["vertices"] = b.vertices;
        if (b.vertices.size() == 2) {
          nd.f = edge_coloring(60);
          bt["kind"] = "edge";
        } else {
          Graph bg = gc.induced(b.vertices);
          ThreeColoring f = good_coloring(bg, nullptr, check);
          json at;
          nd.f = color_172_60(bg, f, trace ? &at : nullptr);
          bt["kind"] = "block";
          bt["good_coloring"] = f.colors;
          if (trace) bt["assembly"] = std::move(at);
        }
        if (trace) ct["blocks"].push_back(std::move(bt));
        nodes.push_back(std::move(nd));
      }
      // Block-cut tree order: each later block meets the glued part in one
      // cut vertex.
      std::vector<char> done(nodes.size(), 0);
      cur = nodes[0];
      done[0] = 1;
      for (size_t round = 1; round < nodes.size(); ++round) {
        std::set<int> have(cur.vertices.begin(), cur.vertices.end());
        size_t pick = nodes.size();
        for (size_t i = 0; i < nodes.size() && pick == nodes.size(); ++i)
          if (!done[i])
            for (int v : nodes[i].vertices)
              if (have.count(v)) {
                pick = i;
                break;
              }
        if (pick == nodes.size()) throw std::logic_error("block tree is disconnected");
        cur = glue_clique(gc, cur, nodes[pick]);
        done[pick] = 1;
      }
    }
    for (size_t i = 0; i < cur.vertices.size(); ++i) out.sets[comp[cur.vertices[i]]] = cur.f.sets[i];
    if (trace) (*trace)["components"].push_back(std::move(ct));
  }
  require(verify_set_coloring(g, out, 172, 60), "color_172_60_general");
  if (trace) (*trace)["verified"] = true;
  return out;
}

json member_json(const ForbiddenMember& m) {
  json j;
  j["kind"] = m.witness.kind == PatternKind::R ? "R" : to_string(m.witness.kind);
  j["index"] = m.witness.index;
  if (!m.witness.seq.empty()) j["seq"] = m.witness.seq;
  j["vertices"] = m.vertices;
  j["attachment"] = m.attachment;
  j["attachment_adjacent"] = m.attachment_adjacent;
  return j;
}

// Contracting {u, v} would close a triangle through an edge of the member.
bool contraction_triangle(const Graph& g, const ForbiddenMember& m) {
  int u = m.attachment[0], v = m.attachment[1];
  for (int x : g.nbrs(u))
    for (int y : g.nbrs(v))
      if (x != y && std::binary_search(m.vertices.begin(), m.vertices.end(), x) &&
          std::binary_search(m.vertices.begin(), m.vertices.end(), y) && g.has_edge(x, y))
        return true;
  return false;
}

SetColoring color_component(const Graph& gc, json* trace, bool deep) {
  Family fam = extract_family(gc);
  {
    std::lock_guard<std::mutex> lk(g_stats_mu);
    g_stats.members += static_cast<int>(fam.members.size());
  }
  json& t = *trace;
  t["members"] = json::array();
  t["g0"] = fam.g0;

  if (fam.members.size() == 1 && static_cast<int>(fam.members[0].vertices.size()) == gc.n()) {
    {
      std::lock_guard<std::mutex> lk(g_stats_mu);
      ++g_stats.whole;
    }
    MemberColoring mc = color_member_83(gc, fam.members[0], MemberMode::Plain);
    json mj = member_json(fam.members[0]);
    mj["role"] = "whole";
    mj["source"] = mc.source;
    t["members"].push_back(mj);
    SetColoring f = scale(mc.f, 60);
    SetColoring out{516, 180, std::vector<ColorSet>(gc.n())};
    for (size_t i = 0; i < mc.host.size(); ++i) out.sets[mc.host[i]] = f.sets[i];
    t["stages"] = {"member (8:3) x 60"};
    return out;
  }

  std::vector<char> core(gc.n(), 0);
  for (int v : fam.g0) core[v] = 1;
  std::vector<int> pending(fam.members.size()), absorbed, cut, stalled;
  std::iota(pending.begin(), pending.end(), 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (size_t i = 0; i < pending.size(); ++i) {
      const ForbiddenMember& m = fam.members[pending[i]];
      bool inside = !m.attachment.empty();
      for (int a : m.attachment) inside = inside && core[a];
      if (!inside || (m.attachment.size() == 2 && !m.attachment_adjacent)) continue;
      for (int v : m.vertices) core[v] = 1;
      absorbed.push_back(pending[i]);
      pending.erase(pending.begin() + static_cast<long>(i));
      progress = true;
      break;
    }
  }
  for (int i : pending) {
    const ForbiddenMember& m = fam.members[i];
    bool ok = m.attachment.size() == 2 && !m.attachment_adjacent && core[m.attachment[0]] &&
              core[m.attachment[1]] && !contraction_triangle(gc, m);
    (ok ? cut : stalled).push_back(i);
  }
  {
    std::lock_guard<std::mutex> lk(g_stats_mu);
    g_stats.absorbed += static_cast<int>(absorbed.size());
  }
  {
    std::lock_guard<std::mutex> lk(g_stats_mu);
    g_stats.stalled += static_cast<int>(stalled.size());
  }
  auto record = [&](int i, const char* role, const std::string& source) {
    json mj = member_json(fam.members[i]);
    mj["role"] = role;
    if (!source.empty()) mj["source"] = source;
    t["members"].push_back(mj);
  };
  t["stages"] = json::array();

  if (!stalled.empty() || fam.g0.empty()) {
    // Absorption left members behind. Color the whole component directly and
    // let the verifier decide.
    for (int i : stalled) record(i, "stalled", "");
    t["stalled"] = true;
    try {
      json ct;
      SetColoring f = scale(color_172_60_impl(gc, false, deep ? &ct : nullptr), 3);
      f.a = 516;
      t["stages"].push_back("stalled: direct (172:60) x 3");
      return f;
    } catch (const std::exception& e) {
      t["stages"].push_back(std::string("stalled: direct (172:60) failed: ") + e.what());
    }
    if (gc.n() > 24) throw std::logic_error("absorption stalled on a component above the search cap");
    auto f = search_ab_coloring(gc, 8, 3);
    if (!f) throw std::logic_error("absorption stalled and the component has no (8:3)-coloring");
    {
      std::lock_guard<std::mutex> lk(g_stats_mu);
      ++g_stats.member_search;
    }
    SetColoring out = scale(*f, 60);
    out.a = 516;
    t["stages"].push_back("stalled: (8:3) search x 60");
    return out;
  }

  json ct;
  Graph g0 = gc.induced(fam.g0);
  SetColoring f0 = color_172_60_impl(g0, true, deep ? &ct : nullptr);
  if (deep) t["g0_coloring"] = std::move(ct);
  GlueNode cur{fam.g0, f0};
  t["stages"].push_back("G0 (172:60)");
  for (int i : absorbed) {
    MemberColoring mc = color_member_83(gc, fam.members[i], MemberMode::Extension);
    cur = glue_clique(gc, cur, GlueNode{mc.host, mc.f});
    record(i, "extension", mc.source);
    t["stages"].push_back("clique glue " + std::to_string(fam.members[i].attachment.size()) + "-extension");
  }
  SetColoring out{516, 180, std::vector<ColorSet>(gc.n())};
  if (cut.empty()) {
    SetColoring f = scale(cur.f, 3);
    for (size_t i = 0; i < cur.vertices.size(); ++i) out.sets[cur.vertices[i]] = f.sets[i];
    t["stages"].push_back("scale x 3");
    return out;
  }
  std::vector<CutPiece> pieces;
  for (int i : cut) {
    const ForbiddenMember& m = fam.members[i];
    MemberColoring con = color_member_83(gc, m, MemberMode::Contract);
    MemberColoring plus = color_member_83(gc, m, MemberMode::PlusEdge);
    CutPiece p;
    p.u = m.attachment[0];
    p.v = m.attachment[1];
    p.vertices = plus.host;
    p.plus_edge = plus.f;
    p.contracted = SetColoring{8, 3, {}};
    for (int h : p.vertices) p.contracted.sets.push_back(con.f.sets[index_in(con.host, h == p.v ? p.u : h)]);
    pieces.push_back(std::move(p));
    record(i, "two_cut", con.source + "/" + plus.source);
  }
  {
    std::lock_guard<std::mutex> lk(g_stats_mu);
    g_stats.two_cut += static_cast<int>(cut.size());
  }
  GlueNode glued = glue_2cut(gc, cur, pieces);
  t["stages"].push_back("2-cut glue of " + std::to_string(cut.size()) + " member(s)");
  for (size_t i = 0; i < glued.vertices.size(); ++i) out.sets[glued.vertices[i]] = glued.f.sets[i];
  return out;
}

}  // namespace

DecomposeStats decompose_stats() {
  std::lock_guard<std::mutex> lk(g_stats_mu);
  return g_stats;
}
void reset_decompose_stats() {
  std::lock_guard<std::mutex> lk(g_stats_mu);
  g_stats = {};
}

Family extract_family(const Graph& g) {
  Family fam;
  std::vector<char> used(g.n(), 0);
  while (true) {
    std::vector<int> removed, kept;
    for (int v = 0; v < g.n(); ++v)
      if (used[v]) removed.push_back(v);
    Graph h = g.without(removed, &kept);
    auto hits = find_forbidden(h, true);
    if (hits.empty()) {
      fam.g0 = kept;
      break;
    }
    ForbiddenMember m;
    m.witness = hits[0];
    for (int& x : m.witness.map) x = kept[x];
    for (int& x : m.witness.vertices) x = kept[x];
    m.vertices = m.witness.vertices;
    std::sort(m.vertices.begin(), m.vertices.end());
    for (int v : m.vertices) used[v] = 1;
    std::set<int> att;
    for (int v : m.vertices)
      for (int w : g.nbrs(v))
        if (!std::binary_search(m.vertices.begin(), m.vertices.end(), w)) att.insert(w);
    m.attachment.assign(att.begin(), att.end());
    m.attachment_adjacent = m.attachment.size() == 2 && g.has_edge(m.attachment[0], m.attachment[1]);
    fam.members.push_back(std::move(m));
  }
  return fam;
}

GlueNode glue_clique(const Graph& host, const GlueNode& g1, const GlueNode& g2) {
  const int a = g1.f.a, b = g1.f.b, c = g2.f.a, d = g2.f.b;
  if (b <= 0 || d <= 0) throw std::invalid_argument("glue_clique: colorings need a fold");
  if (static_cast<long>(a) * d < static_cast<long>(c) * b)
    throw std::invalid_argument("glue_clique: first ratio must be at least the second");
  std::vector<int> shared;
  for (int v : g2.vertices)
    if (index_in(g1.vertices, v) >= 0) shared.push_back(v);
  for (size_t i = 0; i < shared.size(); ++i)
    for (size_t j = i + 1; j < shared.size(); ++j)
      if (!host.has_edge(shared[i], shared[j])) throw std::invalid_argument("glue_clique: interface is not a clique");
  std::vector<char> in1(host.n(), 0), in2(host.n(), 0);
  for (int v : g1.vertices) in1[v] = 1;
  for (int v : g2.vertices) in2[v] = 1;
  for (auto [u, v] : host.edges())
    if ((in1[u] && !in2[u] && in2[v] && !in1[v]) || (in1[v] && !in2[v] && in2[u] && !in1[u]))
      throw std::invalid_argument("glue_clique: pieces are joined outside the interface");

  const int s = std::lcm(b, d);
  SetColoring f1 = scale(g1.f, s / b), f2 = scale(g2.f, s / d);
  std::vector<int> from, to;
  for (int v : shared) {
    const ColorSet &x = f2.sets[index_in(g2.vertices, v)], &y = f1.sets[index_in(g1.vertices, v)];
    from.insert(from.end(), x.begin(), x.end());
    to.insert(to.end(), y.begin(), y.end());
  }
  std::vector<int> pi = permutation(f1.a, from, to);
  GlueNode out{g1.vertices, f1};
  for (size_t i = 0; i < g2.vertices.size(); ++i) {
    if (in1[g2.vertices[i]]) continue;
    out.vertices.push_back(g2.vertices[i]);
    out.f.sets.push_back(permuted(pi, f2.sets[i]));
  }
  require(verify_set_coloring(host.induced(out.vertices), out.f, out.f.a, s), "glue_clique");
  return out;
}

GlueNode glue_2cut(const Graph& host, const GlueNode& g0, const std::vector<CutPiece>& pieces) {
  const int a = g0.f.a, b = g0.f.b;
  if (b <= 0) throw std::invalid_argument("glue_2cut: G_0 coloring needs a fold");
  if (pieces.empty()) throw std::invalid_argument("glue_2cut: no pieces");
  const int c = pieces[0].plus_edge.a, d = pieces[0].plus_edge.b;
  if (static_cast<long>(a) * d < static_cast<long>(c) * b)
    throw std::invalid_argument("glue_2cut: G_0 ratio must be at least the pieces' ratio");

  std::vector<char> taken(host.n(), 0);
  for (int v : g0.vertices) taken[v] = 1;
  GlueNode out{g0.vertices, scale(g0.f, d)};
  for (const CutPiece& p : pieces) {
    if (p.plus_edge.a != c || p.plus_edge.b != d || p.contracted.a != c || p.contracted.b != d)
      throw std::invalid_argument("glue_2cut: pieces must share one (c:d)");
    const int iu = index_in(p.vertices, p.u), iv = index_in(p.vertices, p.v);
    const int ou = index_in(g0.vertices, p.u), ov = index_in(g0.vertices, p.v);
    if (iu < 0 || iv < 0 || ou < 0 || ov < 0) throw std::invalid_argument("glue_2cut: interface not shared");
    if (host.has_edge(p.u, p.v)) throw std::invalid_argument("glue_2cut: interface pair is adjacent");
    for (int v : p.vertices)
      if (v != p.u && v != p.v && taken[v]) throw std::invalid_argument("glue_2cut: pieces overlap");
    Graph gi = host.induced(p.vertices), plus = gi;
    plus.add_edge(iu, iv);
    require(verify_set_coloring(plus, p.plus_edge, c, d), "glue_2cut: G_i + uv coloring");
    require(verify_set_coloring(gi, p.contracted, c, d), "glue_2cut: G_i / uv coloring");
    if (p.contracted.sets[iu] != p.contracted.sets[iv])
      throw std::invalid_argument("glue_2cut: contracted coloring differs on u and v");

    const int x = static_cast<int>(set_intersection(g0.f.sets[ou], g0.f.sets[ov]).size());
    SetColoring fi{b * c, b * d, std::vector<ColorSet>(p.vertices.size())};
    for (size_t w = 0; w < p.vertices.size(); ++w) {
      for (int pp = 0; pp < x; ++pp)
        for (int y : p.contracted.sets[w]) fi.sets[w].push_back(y + pp * c);
      for (int q = x; q < b; ++q)
        for (int z : p.plus_edge.sets[w]) fi.sets[w].push_back(z + q * c);
      std::sort(fi.sets[w].begin(), fi.sets[w].end());
    }
    // Match f_i to f_0' on u and v: common part, u-only, v-only.
    const ColorSet &tu = out.f.sets[ou], &tv = out.f.sets[ov];
    const ColorSet &su = fi.sets[iu], &sv = fi.sets[iv];
    std::vector<int> from, to;
    auto pair_up = [&](const ColorSet& src, const ColorSet& dst) {
      if (src.size() != dst.size()) throw std::logic_error("glue_2cut: interface overlap sizes differ");
      from.insert(from.end(), src.begin(), src.end());
      to.insert(to.end(), dst.begin(), dst.end());
    };
    pair_up(set_intersection(su, sv), set_intersection(tu, tv));
    pair_up(set_minus(su, sv), set_minus(tu, tv));
    pair_up(set_minus(sv, su), set_minus(tv, tu));
    std::vector<int> pi = permutation(a * d, from, to);
    for (size_t w = 0; w < p.vertices.size(); ++w) {
      int h = p.vertices[w];
      if (h == p.u || h == p.v) continue;
      taken[h] = 1;
      out.vertices.push_back(h);
      out.f.sets.push_back(permuted(pi, fi.sets[w]));
    }
  }
  require(verify_set_coloring(host.induced(out.vertices), out.f, a * d, b * d), "glue_2cut");
  return out;
}

MemberColoring color_member_83(const Graph& g, const ForbiddenMember& m, MemberMode mode) {
  MemberColoring mc;
  mc.host = m.vertices;
  if (mode == MemberMode::Extension) mc.host.insert(mc.host.end(), m.attachment.begin(), m.attachment.end());
  if (mode == MemberMode::PlusEdge || mode == MemberMode::Contract) {
    if (m.attachment.size() != 2 || m.attachment_adjacent)
      throw std::invalid_argument("color_member_83: needs two non-adjacent attachment vertices");
    mc.host.push_back(m.attachment[0]);
    if (mode == MemberMode::PlusEdge) mc.host.push_back(m.attachment[1]);
  }
  mc.graph = g.induced(mc.host);
  const int n = mc.graph.n();
  if (mode == MemberMode::PlusEdge) mc.graph.add_edge(n - 2, n - 1);
  if (mode == MemberMode::Contract) {
    for (int w : g.nbrs(m.attachment[1])) {
      int i = index_in(mc.host, w);
      if (i >= 0 && i != n - 1 && !mc.graph.has_edge(i, n - 1)) mc.graph.add_edge(i, n - 1);
    }
    if (!is_triangle_free(mc.graph)) throw std::invalid_argument("color_member_83: contraction creates a triangle");
  }

  std::vector<SetColoring> tables;
  Graph pattern;
  if (m.witness.kind == PatternKind::R) {
    pattern = make_R(m.witness.index);
    tables.push_back(r_table(m.witness.index));
  } else if (m.witness.kind == PatternKind::LPrime && !m.witness.seq.empty()) {
    pattern = make_L(m.witness.seq);
    tables.push_back(l_table(m.witness.seq, LVariant::F1));
    tables.push_back(l_table(m.witness.seq, LVariant::F2));
  }
  std::vector<int> local(m.witness.map.size());
  for (size_t p = 0; p < local.size(); ++p) local[p] = index_in(mc.host, m.witness.map[p]);
  if (!tables.empty()) {
    for (const auto& sigma : find_embeddings(pattern, pattern, true))
      for (const SetColoring& t : tables) {
        std::vector<ColorSet> sets(n);
        for (size_t p = 0; p < local.size(); ++p) sets[local[p]] = t.sets[sigma[p]];
        bool proper = true;
        for (auto [u, v] : mc.graph.edges())
          if (!sets[u].empty() && !sets[v].empty() && !disjoint(sets[u], sets[v])) proper = false;
        if (!proper) continue;
        bool extra = static_cast<int>(local.size()) < n;
        if (!extend83(mc.graph, sets)) continue;
        mc.f = SetColoring{8, 3, sets};
        require(verify_set_coloring(mc.graph, mc.f, 8, 3), "color_member_83");
        mc.source = extra ? "table+extend" : "table";
        return mc;
      }
  }
  if (n > 24) throw std::logic_error("color_member_83: no table fits and the member exceeds the search cap");
  auto f = search_ab_coloring(mc.graph, 8, 3);
  if (!f) throw std::logic_error("color_member_83: member variant has no (8:3)-coloring");
  {
    std::lock_guard<std::mutex> lk(g_stats_mu);
    ++g_stats.member_search;
  }
  mc.f = *f;
  require(verify_set_coloring(mc.graph, mc.f, 8, 3), "color_member_83");
  mc.source = "search";
  return mc;
}

SetColoring color_172_60_general(const Graph& g, json* trace) { return color_172_60_impl(g, true, trace); }

SetColoring color_516_180(const Graph& g, json* trace) {
  if (!is_subcubic(g)) throw std::invalid_argument("color_516_180: graph is not subcubic");
  if (!is_triangle_free(g)) throw std::invalid_argument("color_516_180: graph is not triangle-free");
  SetColoring out{516, 180, std::vector<ColorSet>(g.n())};
  json t;
  t["input"] = json::parse(graph_to_json(g));
  t["components"] = json::array();
  for (const auto& comp : components(g)) {
    Graph gc = g.induced(comp);
    json ct;
    ct["vertices"] = comp;
    SetColoring f = trim(color_component(gc, &ct, trace != nullptr), 180);
    require(verify_set_coloring(gc, f, 516, 180), "color_516_180 component");
    for (size_t i = 0; i < comp.size(); ++i) out.sets[comp[i]] = f.sets[i];
    t["components"].push_back(std::move(ct));
  }
  Verdict v = verify_set_coloring(g, out, 516, 180);
  require(v, "color_516_180");
  if (trace) {
    t["coloring"] = coloring_json(out);
    t["verified"] = true;
    *trace = std::move(t);
  }
  return out;
}

}  // namespace tfc
