// tfc: generation, checks, exact chi_f, colorings and property suites.
// Exit codes: 0 ok, 1 property fails, 2 usage, 3 internal assertion.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfc/coloring.hpp"
#include "tfc/decompose.hpp"
#include "tfc/exact.hpp"
#include "tfc/generate.hpp"
#include "tfc/graph.hpp"
#include "tfc/patterns.hpp"
#include "tfc/suites.hpp"

using namespace tfc;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << text << "\n";
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(slurp(path));
  } catch (const Usage&) {
    throw;
  } catch (const std::exception& e) {
    throw Usage(path + ": " + e.what());
  }
}

std::vector<int> parse_params(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Usage("bad parameter: " + tok);
      }
    }
  return out;
}

int cmd_gen(const std::string& family, const std::string& params, uint64_t seed, const std::string& out) {
  Graph g;
  try {
    g = generate(family, parse_params(params), seed);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  spit(out, graph_to_json(g));
  return 0;
}

int cmd_check(const std::string& path) {
  Graph g = load_graph(path);
  bool tf = is_triangle_free(g), sc = is_subcubic(g);
  Connectivity c = decompose_connectivity(g, false);
  std::cout << "vertices: " << g.n() << ", edges: " << g.num_edges() << "\n";
  std::cout << (tf ? "triangle-free" : "not triangle-free") << "\n";
  std::cout << (sc ? "subcubic" : "not subcubic") << " (max degree " << g.max_degree() << ")\n";
  std::cout << "components: " << c.components.size() << ", blocks: " << c.blocks.size()
            << ", cut vertices: " << c.cut_vertices.size() << "\n";
  if (tf && sc) {
    auto found = find_forbidden(g);
    std::cout << "forbidden members: " << found.size() << "\n";
    for (const auto& w : found) {
      std::cout << "  " << to_string(w.kind);
      if (w.kind == PatternKind::R) std::cout << " " << w.index;
      if (!w.seq.empty()) {
        std::cout << " seq";
        for (int x : w.seq) std::cout << " " << x;
      }
      std::cout << " on";
      for (int v : w.vertices) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return tf && sc ? 0 : 1;
}

int cmd_chif(const std::string& path, const std::string& witness) {
  Graph g = load_graph(path);
  RationalLP lp = chi_f_exact(g);
  std::string why;
  if (!check_lp_certificate(g, lp, &why)) throw std::logic_error("LP certificate rejected: " + why);
  std::cout << tfc::to_string(lp.value) << "\n";
  if (!witness.empty()) {
    json w;
    w["value"] = tfc::to_string(lp.value);
    w["primal"] = json::array();
    for (const auto& [set, x] : lp.weights) w["primal"].push_back({{"set", set}, {"weight", tfc::to_string(x)}});
    w["dual"] = json::array();
    for (const auto& y : lp.dual) w["dual"].push_back(tfc::to_string(y));
    spit(witness, w.dump(2));
  }
  return 0;
}

int cmd_color(const std::string& path, const std::string& target, const std::string& out, const std::string& explain) {
  Graph g = load_graph(path);
  if (target != "172:60" && target != "516:180") throw Usage("target must be 172:60 or 516:180");
  if (!is_triangle_free(g) || !is_subcubic(g)) {
    std::cerr << "input is not a triangle-free subcubic graph\n";
    return 1;
  }
  json trace;
  SetColoring f;
  if (target == "172:60") {
    if (!is_forbidden_free(g)) {
      std::cerr << "172:60 needs a graph without R_i / L_k members; use 516:180\n";
      return 1;
    }
    f = color_172_60_general(g, explain.empty() ? nullptr : &trace);
  } else {
    f = color_516_180(g, explain.empty() ? nullptr : &trace);
  }
  int a = target == "172:60" ? 172 : 516, b = target == "172:60" ? 60 : 180;
  Verdict v = verify_set_coloring(g, f, a, b);
  if (!v) throw std::logic_error("coloring failed verification: " + v.reasons.front());
  spit(out, coloring_to_json(f));
  if (!explain.empty()) spit(explain, trace.dump());
  std::cerr << "verified (" << a << ":" << b << ")-coloring\n";
  return 0;
}

int cmd_verify(const std::string& gpath, const std::string& cpath, int a, int b) {
  Graph g = load_graph(gpath);
  SetColoring f;
  try {
    f = coloring_from_json(slurp(cpath));
  } catch (const Usage&) {
    throw;
  } catch (const std::exception& e) {
    throw Usage(cpath + ": " + e.what());
  }
  Verdict v = verify_set_coloring(g, f, a, b);
  if (v) {
    std::cout << "verified (" << a << ":" << b << ")\n";
    return 0;
  }
  std::cout << "rejected\n";
  for (const auto& r : v.reasons) std::cout << "  " << r << "\n";
  return 1;
}

int cmd_suite(const std::string& lemma, int samples, uint64_t seed, int workers) {
  std::vector<std::string> names;
  if (lemma == "all")
    names = suite_names();
  else
    names = {lemma};
  bool ok = true;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, samples, seed, workers);
    } catch (const std::invalid_argument& e) {
      throw Usage(e.what());
    }
    std::cout << name << ": " << r.pass << " pass, " << r.fail << " fail";
    if (!r.detail.empty()) std::cout << " " << r.detail.dump();
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional colorings of triangle-free subcubic graphs"};
  app.require_subcommand(1);

  std::string family, params, out, in, in2, target = "516:180", explain, witness, lemma;
  uint64_t seed = 0;
  int a = 0, b = 0, samples = 100, workers = 1;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as JSON");
  gen->add_option("--family", family, "path, cycle, star, spider, petersen, R, L, H, superH, random")->required();
  gen->add_option("--params", params, "Comma separated integers");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "Output path (stdout if omitted)");

  auto* check = app.add_subcommand("check", "Report triangle-freeness, degrees, connectivity and members");
  check->add_option("graph", in)->required();

  auto* chif = app.add_subcommand("chif", "Exact fractional chromatic number");
  chif->add_option("graph", in)->required();
  chif->add_option("--witness", witness, "Write primal and dual weights to this path");

  auto* color = app.add_subcommand("color", "Verified (a:b)-coloring");
  color->add_option("graph", in)->required();
  color->add_option("--target", target)->check(CLI::IsMember({"172:60", "516:180"}));
  color->add_option("--out", out);
  color->add_option("--explain", explain, "Write the decomposition trace to this path");

  auto* verify = app.add_subcommand("verify", "Check a set coloring against a graph");
  verify->add_option("graph", in)->required();
  verify->add_option("coloring", in2)->required();
  verify->add_option("--a", a)->required()->check(CLI::PositiveNumber);
  verify->add_option("--b", b)->required()->check(CLI::PositiveNumber);

  auto* suite = app.add_subcommand("suite", "Run a property suite and print pass/fail counts");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  suite->add_option("--lemma", lemma)->required()->check(CLI::IsMember(choices));
  suite->add_option("--samples", samples)->check(CLI::PositiveNumber);
  suite->add_option("--seed", seed);
  suite->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(family, params, seed, out);
    if (*check) return cmd_check(in);
    if (*chif) return cmd_chif(in, witness);
    if (*color) return cmd_color(in, target, out, explain);
    if (*verify) return cmd_verify(in, in2, a, b);
    if (*suite) return cmd_suite(lemma, samples, seed, workers);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
