#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfc/avoid.hpp"
#include "tfc/coloring.hpp"
#include "tfc/good.hpp"
#include "tfc/graph.hpp"

namespace tfc {

enum class CompKind { OddPath, EvenPath, HMember, Other };
std::string to_string(CompKind k);

struct ClassComponent {
  CompKind kind = CompKind::Other;
  // Host ids. Paths are listed from one end; H members list v_1..v_a then
  // u_1..u_b as in make_H.
  std::vector<int> verts;
  int a = 0, b = 0;
  std::vector<int> boundary;  // N_G(C), sorted
};

struct ClassPairSubgraph {
  const Graph* parent = nullptr;
  ThreeColoring f;
  int s = 0, t = 0;
  std::vector<int> verts;    // f^-1(s) ∪ f^-1(t)
  std::vector<int> comp_of;  // host vertex -> component index or -1
  std::vector<ClassComponent> comps;
  // |N_G(v) ∩ V(C)|.
  int n_C(int comp, int v) const;
  int deg_C(int v) const;
};

ClassPairSubgraph class_pair(const Graph& g, const ThreeColoring& f, int s, int t);

struct BoundaryPair {
  std::vector<Edge> B;                 // host ids, u < v, on N_G(C)
  std::vector<std::vector<int>> J;     // at most one set in practice
  int w = -1;                          // exceptional vertex, n_C(w) <= 2
};

enum class CertTag { Single, OddPath, OddP3, EvenPath, HPath, Tractable };
std::string to_string(CertTag t);

struct ComponentBoundary {
  int comp = -1;
  CertTag tag = CertTag::Single;
  bool cooperate = false;  // bp[0] cooperates with bp[1]; else each penetrates
  BoundaryPair bp[2];
  std::vector<int> I;      // host ids
  std::string rule;        // construction branch that fired
  std::shared_ptr<Certified> cert;
  bool dangerous() const { return bp[0].w >= 0 && bp[1].w >= 0; }
};

// Throws std::logic_error when no construction applies.
ComponentBoundary boundary_for_component(const ClassPairSubgraph& ctx, int comp);

// Triangle, degree and J clauses. Empty when the pair passes.
std::vector<std::string> audit_boundary(const ClassPairSubgraph& ctx, const ComponentBoundary& cb);

// g_{s,t} on C is a1 ⊎ b1 ⊎ a2 ⊎ b2; F1 and F2 are listed in C's vertex order.
struct ApplyResult {
  std::vector<Mask> a1, b1, a2, b2;
  std::vector<int> I;
};
ApplyResult apply_certificate(const ClassPairSubgraph& ctx, const ComponentBoundary& cb,
                              const std::vector<Mask>& F1, const std::vector<Mask>& F2);

struct JConstraint {
  std::vector<int> J;
  std::vector<Edge> BC;  // edges of the owning component's boundary graph
};

struct BoundaryHost {
  Graph H;                  // on host ids; class-pair vertices stay isolated
  std::vector<int> V;       // N_G(G_{s,t})
  std::vector<JConstraint> J;
  int max_degree = 0;
};

// Chooses bp[0]/bp[1] per component (swapping in place for dangerous ones so
// that arcs of the balanced orientation run w_1 -> w_2) and builds H_1, H_2.
std::vector<BoundaryHost> boundary_hosts(const ClassPairSubgraph& ctx, std::vector<ComponentBoundary>& cbs);

struct SevenColoringStats {
  bool fallback = false;  // staged extension failed; full search used
};
// Proper coloring into 1..7 (0 off V) with two equal colors inside every J.
std::vector<int> boundary_7coloring(const Graph& H, const std::vector<int>& V, const std::vector<JConstraint>& J,
                                    SevenColoringStats* stats = nullptr);

struct Gst {
  SetColoring g;       // universe 56
  std::vector<int> I;  // I_{s,t}
};
Gst build_gst(const Graph& g, const ThreeColoring& f, int s, int t, nlohmann::json* trace = nullptr);

// Verified (172:60)-coloring; throws std::logic_error on verification failure.
SetColoring color_172_60(const Graph& g, const ThreeColoring& f, nlohmann::json* trace = nullptr);

struct AssemblyCounters {
  long seven_fallback = 0;  // host colorings that left the staged procedure
  long path_dp = 0;         // path components realized by exact completion
};
AssemblyCounters assembly_counters();
void reset_assembly_counters();

}  // namespace tfc
