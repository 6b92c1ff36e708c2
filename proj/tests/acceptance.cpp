// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tfc/coloring.hpp"
#include "tfc/decompose.hpp"
#include "tfc/exact.hpp"
#include "tfc/fixtures.hpp"
#include "tfc/generate.hpp"
#include "tfc/samplers.hpp"
#include "tfc/suites.hpp"

using namespace tfc;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

std::vector<std::pair<uint64_t, Graph>> instances() {
  std::vector<std::pair<uint64_t, Graph>> out;
  for (uint64_t s = 1; s <= 200; ++s) out.push_back({s, random_tf_subcubic(4 + static_cast<int>((7 * s) % 17), s)});
  return out;
}

Outcome c1_end_to_end() {
  Outcome o;
  double worst = 0;
  for (const auto& [s, g] : instances()) {
    auto t0 = Clock::now();
    try {
      SetColoring f = color_516_180(g);
      double secs = since(t0);
      worst = std::max(worst, secs);
      if (!verify_set_coloring(g, f, 516, 180) || !testing::oracle_ab(g, f.sets, 516, 180))
        o.fail("seed " + std::to_string(s) + ": not a (516:180)-coloring");
      if (secs >= 5.0) o.fail("seed " + std::to_string(s) + ": " + std::to_string(secs) + " s");
    } catch (const std::exception& e) {
      o.fail("seed " + std::to_string(s) + ": " + e.what());
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "200 graphs, slowest %.3f s", worst);
  o.summary = buf;
  return o;
}

Outcome c2_oracle() {
  Outcome o;
  const Rational bound(43, 15);
  int checked = 0;
  double worst = 0;
  for (const auto& [s, g] : instances()) {
    if (g.n() > 14) continue;
    ++checked;
    auto t0 = Clock::now();
    RationalLP lp = chi_f_exact(g);
    double secs = since(t0);
    worst = std::max(worst, secs);
    std::string why, tag = "seed " + std::to_string(s) + ": ";
    if (!check_lp_certificate(g, lp, &why)) o.fail(tag + "certificate: " + why);
    if (lp.value > bound) o.fail(tag + "chi_f = " + to_string(lp.value) + " > 43/15");
    Rational lower(g.n(), testing::brute_alpha(g));
    lower.canonicalize();
    if (lp.value < lower) o.fail(tag + "chi_f = " + to_string(lp.value) + " < n/alpha");
    if (secs >= 10.0) o.fail(tag + std::to_string(secs) + " s");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d graphs with n <= 14, slowest %.3f s", checked, worst);
  o.summary = buf;
  return o;
}

Outcome c3_petersen() {
  Outcome o;
  Graph g = make_petersen(7, 2);
  RationalLP lp = chi_f_exact(g);
  if (lp.value != Rational(14, 5)) o.fail("chi_f(P(7,2)) = " + to_string(lp.value));
  if (!check_lp_certificate(g, lp)) o.fail("LP certificate rejected");
  if (testing::brute_alpha(g) != 5) o.fail("alpha(P(7,2)) != 5");
  SetColoring f = color_516_180(g);
  if (!verify_set_coloring(g, f, 516, 180) || !testing::oracle_ab(g, f.sets, 516, 180))
    o.fail("pipeline coloring rejected");
  o.summary = "chi_f = " + to_string(lp.value) + ", (516:180)-coloring verified";
  return o;
}

Outcome c4_fixtures() {
  Outcome o;
  int tables = 0;
  for (int i = 0; i <= 7; ++i) {
    Graph g = make_R(i);
    SetColoring f = r_table(i);
    ++tables;
    if (!verify_set_coloring(g, f, 8, 3) || !testing::oracle_ab(g, f.sets, 8, 3))
      o.fail("R_" + std::to_string(i) + " table rejected");
  }
  const std::vector<std::vector<int>> seqs = {{1}, {2}, {1, 2}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}};
  for (const auto& seq : seqs) {
    LInfo info;
    Graph g = make_L(seq, &info);
    std::string name = "L_{";
    for (size_t i = 0; i < seq.size(); ++i) name += (i ? "," : "") + std::to_string(seq[i]);
    name += "}";
    for (LVariant var : {LVariant::F1, LVariant::F2}) {
      SetColoring f = l_table(seq, var);
      ++tables;
      std::string tag = name + (var == LVariant::F1 ? " f1" : " f2");
      if (!verify_set_coloring(g, f, 8, 3) || !testing::oracle_ab(g, f.sets, 8, 3)) o.fail(tag + " rejected");
      // The end patterns, recomputed here.
      auto meet = [&](int x, int y) { return set_intersection(f.sets[x], f.sets[y]).size(); };
      size_t wy = meet(info.w, info.y), xz = meet(info.x, info.z);
      bool want = wy == 0 && (var == LVariant::F1 ? xz == 0 : xz >= 1 && xz <= 2);
      if (!want || !l_end_patterns(info, f, var)) o.fail(tag + " end pattern fails");
    }
  }
  o.summary = std::to_string(tables) + " tables at (8:3), end patterns checked";
  return o;
}

Outcome c5_suites() {
  Outcome o;
  struct Job {
    const char* name;
    int samples;
  };
  for (Job j : {Job{"odd-path", 300}, Job{"even-path", 100}, Job{"h-ab", 100}, Job{"kernel", 200},
                Job{"orientation", 200}, Job{"tractable", 100}}) {
    SuiteResult r = run_suite(j.name, j.samples, 2024);
    if (!r.ok()) o.fail(std::string(j.name) + ": " + std::to_string(r.fail) + " failures");
    for (const auto& f : r.failures) o.fail(std::string(j.name) + " " + f);
    if (std::string(j.name) == "kernel" && r.detail.value("brute_checked", 0L) == 0)
      o.fail("kernel: no brute-force cross-check ran");
    o.summary += std::string(o.summary.empty() ? "" : ", ") + j.name + " " + std::to_string(r.pass) + "/" +
                 std::to_string(r.pass + r.fail);
  }
  return o;
}

Outcome c6_good() {
  Outcome o;
  SuiteResult r = run_suite("good", 100, 7);
  if (!r.ok()) o.fail(std::to_string(r.fail) + " failures");
  for (const auto& f : r.failures) o.fail(f);
  int small = 0;
  for (const auto& g : good_instances(100, 7)) small += g.n() <= 12;
  o.summary = std::to_string(r.pass) + "/100 good colorings, " + std::to_string(small) + " cross-checked exhaustively";
  return o;
}

Outcome c7_strong() {
  Outcome o;
  SuiteResult r = run_suite("strong", 100, 7);
  if (!r.ok()) o.fail(std::to_string(r.fail) + " failures");
  for (const auto& f : r.failures) o.fail(f);
  o.summary = std::to_string(r.pass) + "/100 (172:60)-colorings verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"end-to-end (516:180)", c1_end_to_end}, {"oracle consistency", c2_oracle},
      {"P(7,2)", c3_petersen},                 {"fixtures", c4_fixtures},
      {"property suites", c5_suites},          {"good colorings", c6_good},
      {"(172:60) stage", c7_strong},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    all = all && o.ok;
    std::printf("criterion %zu %s: %s (%s, %.1f s)\n", i + 1, criteria[i].first, o.ok ? "PASS" : "FAIL",
                o.summary.c_str(), since(t0));
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
