#include "tfc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "tfc/assembly.hpp"
#include "tfc/avoid.hpp"
#include "tfc/decompose.hpp"
#include "tfc/generate.hpp"
#include "tfc/good.hpp"
#include "tfc/patterns.hpp"
#include "tfc/samplers.hpp"

namespace tfc {

using testing::Rng;

namespace {

std::string sizes_mismatch(const std::vector<Mask>& f, const std::vector<int>& want) {
  for (size_t i = 0; i < f.size(); ++i)
    if (popc(f[i]) != want[i])
      return "vertex " + std::to_string(i) + " has " + std::to_string(popc(f[i])) + " colors, want " +
             std::to_string(want[i]);
  return {};
}

std::string odd_path(Rng& rng, int len) {
  int r1 = rng() % 3, rend = rng() % 3;
  auto F = testing::sample_odd_path(rng, len, r1, rend);
  auto f = color_odd_path(F, r1, rend);
  if (!testing::oracle_avoiding(make_path(len), F, f)) return "not F-avoiding";
  std::vector<int> want(len, 6);
  want[0] = 8 - r1;
  want[len - 1] = 8 - rend;
  return sizes_mismatch(f, want);
}

std::string even_path(Rng& rng, int s) {
  auto F = testing::path_F(testing::sample_even_statement(rng, s));
  if (!even_statement_holds(F, s)) return "sampler left statement " + std::to_string(s);
  auto r = color_even_path(F, s);
  int n = static_cast<int>(F.size());
  if (!testing::oracle_avoiding(make_path(n), F, r.f)) return "not F-avoiding";
  std::vector<int> want(n, 6);
  want[0] = want[n - 1] = 7;
  return sizes_mismatch(r.f, want);
}

bool some_statement(const std::vector<Mask>& F) {
  std::vector<Mask> rev(F.rbegin(), F.rend());
  for (int s = 1; s <= 12; ++s)
    if (even_statement_holds(F, s) || even_statement_holds(rev, s)) return true;
  return false;
}

std::string h_ab(Rng& rng, int a, int b) {
  Graph h = make_H(a, b);
  auto F = testing::sample_H_F(rng, a, b, &some_statement);
  auto f = color_H(a, b, F);
  if (!testing::oracle_avoiding(h, F, f)) return "not F-avoiding";
  std::vector<int> want(h.n());
  for (int v = 0; v < h.n(); ++v) want[v] = 8 - h.deg(v) - (v == a + 1 ? 1 : 0);
  return sizes_mismatch(f, want);
}

bool kernel_by_definition(const Digraph& d, const std::vector<int>& K) {
  std::vector<char> in(d.n(), 0);
  for (int v : K) {
    if (v < 0 || v >= d.n() || in[v]) return false;
    in[v] = 1;
  }
  for (int v = 0; v < d.n(); ++v) {
    bool hit = false;
    for (int w : d.out(v)) {
      if (in[v] && in[w]) return false;
      hit = hit || in[w];
    }
    if (!in[v] && !hit) return false;
  }
  return true;
}

std::string kernel(Rng& rng, nlohmann::json& note) {
  int n = 2 + rng() % 11;
  Digraph d = testing::sample_even_digraph(rng, n);
  auto K = find_kernel(d);
  if (!kernel_by_definition(d, K)) return "returned set is not a kernel";
  if (n <= 10) {
    if (!testing::brute_has_kernel(d)) return "brute force finds no kernel";
    note["brute_checked"] = 1;
  }
  std::vector<int> r(n);
  for (int v = 0; v < n; ++v) r[v] = 1 + rng() % 2;
  auto need = [&](int v) {
    int s = r[v];
    for (int w : d.out(v)) s += r[w];
    return s;
  };
  bool fits = true;
  for (int v = 0; v < n; ++v) fits = fits && need(v) <= 14;
  if (!fits) std::fill(r.begin(), r.end(), 1);
  std::vector<Mask> S(n);
  for (int v = 0; v < n; ++v) S[v] = testing::rnd(rng, std::min(14, need(v) + static_cast<int>(rng() % 2)));
  auto C = kernel_list_color(d, r, S);
  for (int v = 0; v < n; ++v) {
    if (popc(C[v]) != r[v]) return "vertex " + std::to_string(v) + " got the wrong number of colors";
    if (C[v] & ~S[v]) return "vertex " + std::to_string(v) + " left its list";
  }
  for (auto [u, v] : d.arcs())
    if (C[u] & C[v]) return "arc " + std::to_string(u) + "->" + std::to_string(v) + " shares a color";
  return {};
}

std::string orientation(Rng& rng) {
  int n = 1 + rng() % 12;
  MultiGraph g = testing::sample_multigraph(rng, n);
  Digraph d = orient_balanced(g);
  std::vector<Edge> want, got;
  for (auto [u, v] : g.edges) want.push_back({std::min(u, v), std::max(u, v)});
  std::vector<int> deg(n, 0), in(n, 0), out(n, 0);
  for (auto [u, v] : g.edges) ++deg[u], ++deg[v];
  for (auto [u, v] : d.arcs()) {
    got.push_back({std::min(u, v), std::max(u, v)});
    ++out[u], ++in[v];
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) return "arcs are not an orientation of the edges";
  for (int v = 0; v < n; ++v)
    if (in[v] < deg[v] / 2 || out[v] < deg[v] / 2) return "vertex " + std::to_string(v) + " is unbalanced";
  return {};
}

std::string tractable(Rng& rng, nlohmann::json& note) {
  for (;;) {
    Graph g = testing::sample_bipartite_subcubic(rng, 4 + rng() % 21, 2 + rng() % 6);
    if (!is_good_graph(g).good()) continue;
    Certified c;
    try {
      c = certify(g);
    } catch (const AvoidanceError&) {
      continue;  // path or H component
    }
    note["n"] = g.n();
    for (int it = 0; it < 10; ++it) {
      auto F = testing::obedient_F(rng, g, c.cert.M);
      auto p = tractable_pair(g, c, F);
      if (!testing::oracle_avoiding(g, F, p.f1) || !testing::oracle_avoiding(g, F, p.f2))
        return "pair is not F-avoiding";
      if (!is_independent(g, p.cert.I)) return "I is not independent";
      for (int v = 0; v < g.n(); ++v) {
        bool inI = std::count(p.cert.I.begin(), p.cert.I.end(), v) > 0;
        if (popc(p.f1[v]) + popc(p.f2[v]) != 16 - 2 * g.deg(v) - (inI ? 2 : 0))
          return "size identity fails at vertex " + std::to_string(v);
      }
    }
    return {};
  }
}

std::string good(const Graph& g) {
  ThreeColoring f = good_coloring(g);
  std::string why;
  if (!verify_good_coloring(g, f, &why)) return "not good: " + why;
  for (auto [u, v] : g.edges())
    if (f.colors[u] == f.colors[v]) return "not proper";
  if (g.n() <= 12 && exhaustive_good_coloring(g).empty()) return "exhaustive search disagrees";
  return {};
}

std::string strong(const Graph& g) {
  ThreeColoring f = good_coloring(g);
  SetColoring c = color_172_60(g, f);
  if (!testing::oracle_ab(g, c.sets, 172, 60)) return "not a (172:60)-coloring";
  return {};
}

std::string e2e(Rng& rng, uint64_t gseed, nlohmann::json& note) {
  int n = 4 + rng() % 17;
  Graph g = random_tf_subcubic(n, gseed);
  auto t0 = std::chrono::steady_clock::now();
  SetColoring c = color_516_180(g);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note["seconds"] = secs;
  if (!testing::oracle_ab(g, c.sets, 516, 180)) return "not a (516:180)-coloring";
  if (secs >= 5.0) return "took " + std::to_string(secs) + " s";
  return {};
}

struct Slot {
  std::string error;
  nlohmann::json note = nlohmann::json::object();
};

uint64_t mix(uint64_t seed, uint64_t i) { return seed * 0x9E3779B97F4A7C15ULL + i * 1000003ULL + 1; }

void run_indexed(int total, int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    for (int i = 0; i < total; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < total; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"odd-path", "even-path",  "h-ab", "kernel", "orientation",
                                                 "tractable", "good", "strong", "e2e"};
  return names;
}

std::vector<Graph> good_instances(int count, uint64_t seed, int max_n) {
  std::vector<Graph> out;
  for (uint64_t s = seed; static_cast<int>(out.size()) < count; ++s) {
    Graph g = random_tf_subcubic(4 + static_cast<int>(s % (max_n - 3)), s);
    Connectivity c = decompose_connectivity(g, false);
    if (c.components.size() != 1 || !c.cut_vertices.empty() || g.n() < 4) continue;
    if (!is_forbidden_free(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

SuiteResult run_suite(const std::string& name, int samples, uint64_t seed, int workers) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + name);
  if (samples < 1) throw std::invalid_argument("samples must be positive");

  // Flatten every configuration into one indexed list of jobs.
  std::vector<std::function<void(Slot&)>> jobs;
  std::vector<Graph> inst;
  if (name == "good" || name == "strong") inst = good_instances(samples, seed);
  for (int i = 0; i < samples; ++i) {
    uint64_t s = mix(seed, i);
    if (name == "odd-path") {
      for (int len = 3; len <= 11; len += 2)
        jobs.push_back([=](Slot& o) {
          Rng rng(mix(s, len));
          o.error = odd_path(rng, len);
          o.note["len"] = len;
        });
    } else if (name == "even-path") {
      for (int st = 1; st <= 12; ++st)
        jobs.push_back([=](Slot& o) {
          Rng rng(mix(s, st));
          o.error = even_path(rng, st);
          o.note["statement"] = st;
        });
    } else if (name == "h-ab") {
      for (int a : {4, 6, 8})
        for (int b : {4, 6, 8})
          jobs.push_back([=](Slot& o) {
            Rng rng(mix(s, 10 * a + b));
            o.error = h_ab(rng, a, b);
            o.note["a"] = a;
            o.note["b"] = b;
          });
    } else if (name == "kernel") {
      jobs.push_back([=](Slot& o) {
        Rng rng(s);
        o.error = kernel(rng, o.note);
      });
    } else if (name == "orientation") {
      jobs.push_back([=](Slot& o) {
        Rng rng(s);
        o.error = orientation(rng);
      });
    } else if (name == "tractable") {
      jobs.push_back([=](Slot& o) {
        Rng rng(s);
        o.error = tractable(rng, o.note);
      });
    } else if (name == "good") {
      jobs.push_back([&inst, i](Slot& o) {
        o.error = good(inst[i]);
        o.note["n"] = inst[i].n();
      });
    } else if (name == "strong") {
      jobs.push_back([&inst, i](Slot& o) {
        o.error = strong(inst[i]);
        o.note["n"] = inst[i].n();
      });
    } else {
      jobs.push_back([=](Slot& o) {
        Rng rng(s);
        o.error = e2e(rng, seed + i, o.note);
      });
    }
  }

  std::vector<Slot> slots(jobs.size());
  run_indexed(static_cast<int>(jobs.size()), workers, [&](int j) {
    try {
      jobs[j](slots[j]);
    } catch (const std::exception& e) {
      slots[j].error = std::string("threw: ") + e.what();
    }
  });

  SuiteResult r;
  r.name = name;
  long brute = 0;
  double slowest = 0;
  for (size_t j = 0; j < slots.size(); ++j) {
    const Slot& o = slots[j];
    if (o.error.empty()) {
      ++r.pass;
    } else {
      ++r.fail;
      if (r.failures.size() < 10) r.failures.push_back("#" + std::to_string(j) + " " + o.note.dump() + ": " + o.error);
    }
    brute += o.note.value("brute_checked", 0);
    slowest = std::max(slowest, o.note.value("seconds", 0.0));
  }
  if (name == "kernel") r.detail["brute_checked"] = brute;
  if (name == "e2e") r.detail["max_seconds"] = slowest;
  return r;
}

}  // namespace tfc
