#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfc/coloring.hpp"
#include "tfc/graph.hpp"

namespace tfc {

// Subsets of [14]; bit c-1 stands for color c.
using Mask = uint16_t;
constexpr Mask kFull14 = 0x3FFF;

Mask mask_of(const ColorSet& s);
ColorSet colors_of(Mask m);
int popc(Mask m);
std::string mask_str(Mask m);
// Lowest k colors of m (all of m if it has fewer).
Mask lowest(Mask m, int k);
// Highest k colors of m.
Mask highest(Mask m, int k);
// Calls fn on every k-subset of pool in lexicographic order of the sorted
// color lists; stops early when fn returns true. Returns whether it stopped.
template <class Fn>
bool for_each_subset(Mask pool, int k, Fn&& fn, Mask acc = 0) {
  if (k == 0) return fn(acc);
  if (k < 0 || popc(pool) < k) return false;
  Mask low = pool & static_cast<Mask>(~pool + 1);
  if (for_each_subset(static_cast<Mask>(pool & ~low), k - 1, fn, static_cast<Mask>(acc | low))) return true;
  return for_each_subset(static_cast<Mask>(pool & ~low), k, fn, acc);
}

struct AvoidanceSpec {
  Graph carrier;
  std::vector<Mask> F;
};

class AvoidanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Verdict verify_avoiding(const Graph& g, const std::vector<Mask>& F, const std::vector<Mask>& f);
inline Verdict verify_avoiding(const AvoidanceSpec& s, const std::vector<Mask>& f) {
  return verify_avoiding(s.carrier, s.F, f);
}

// Exact completion: colors every vertex with size >= 0 that is not fixed so
// that f(v) has the given size, contains pin(v), avoids forbid(v) and the sets
// of its neighbours (fixed or not). Vertices with size < 0 are ignored.
// Forests are solved by dynamic programming over subsets of [14]; other
// graphs by bounded backtracking. Lowest-numbered solutions are preferred.
struct Completion {
  std::vector<int> size;
  std::vector<Mask> forbid, pin, value;
  std::vector<char> fixed;
  explicit Completion(int n) : size(n, -1), forbid(n, 0), pin(n, 0), value(n, 0), fixed(n, 0) {}
};
bool complete_avoiding(const Graph& g, Completion& c, size_t node_limit = 200'000);

// Paths are given by F listed along the path.
std::vector<Mask> color_odd_path(std::vector<Mask> F, int r1, int rend);

// Literal hypothesis checker for even-path statement s (1..12).
// For Statements 6 and 11 the smallest witness parameter is stored in param.
bool even_statement_holds(const std::vector<Mask>& F, int s, int* param = nullptr);
struct EvenPathResult {
  std::vector<Mask> f;
  int statement = 0;
  bool reversed = false;  // statement held for the reversed path
  bool recipe = false;    // produced by a transcribed recipe (else exact DP)
};
// Auto-detects the statement when statement == 0.
EvenPathResult color_even_path(const std::vector<Mask>& F, int statement = 0, bool allow_reverse = false);

// H_{a,b} as built by make_H: v_1..v_a are 0..a-1, u_1..u_b are a..a+b-1.
// u_2 (vertex a+1) is the distinguished vertex that loses one extra color.
std::vector<Mask> color_H(int a, int b, const std::vector<Mask>& F);

// Kernel: independent K such that every vertex outside K has an arc into K.
std::vector<int> find_kernel(const Digraph& d);
bool is_kernel(const Digraph& d, const std::vector<int>& k);

// C(v) ⊆ S(v), |C(v)| = r(v), disjoint along arcs.
std::vector<Mask> kernel_list_color(const Digraph& d, const std::vector<int>& r, const std::vector<Mask>& S);

Verdict obeys(const Graph& g, const std::vector<Mask>& F, const std::vector<Edge>& M);

struct TractabilityCertificate {
  std::vector<Edge> M;
  std::vector<int> I;
};

struct TractPlan;
struct TractPlanDeleter {
  void operator()(TractPlan* p) const;
};
using TractPlanPtr = std::unique_ptr<TractPlan, TractPlanDeleter>;

struct Certified {
  TractabilityCertificate cert;
  TractPlanPtr plan;
};

// Structural part: computes (M, I) and a reduction plan before F is known.
// Throws AvoidanceError when g has a component that is an even path on at
// least four vertices or a member of H.
Certified certify(const Graph& g);

struct TractablePair {
  std::vector<Mask> f1, f2;
  TractabilityCertificate cert;
};
TractablePair tractable_pair(const Graph& g, const Certified& c, const std::vector<Mask>& F);
TractablePair tractable_pair(const Graph& g, const std::vector<Mask>& F);

// Names of the reduction steps used by a plan, outermost first.
std::vector<std::string> plan_steps(const Certified& c);

// Counters of exact fallbacks taken inside the constructions (process-wide).
struct FallbackCounters {
  long even_dp = 0;       // even-path statements realized by exact path DP
  long pinned_retry = 0;  // completions that needed to drop recipe pins
  long exact_single = 0;  // tractability plans with no applicable rule
};
FallbackCounters fallback_counters();
void reset_fallback_counters();

SetColoring to_set_coloring(const std::vector<Mask>& f);

}  // namespace tfc
