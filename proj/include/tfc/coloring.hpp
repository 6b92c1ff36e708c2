#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tfc/graph.hpp"

namespace tfc {

// Sorted colors from 1..a.
using ColorSet = std::vector<int>;

struct SetColoring {
  int a = 0;
  int b = 0;  // 0 when sizes are not uniform
  std::vector<ColorSet> sets;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> reasons;
  explicit operator bool() const { return ok; }
  void fail(std::string why) {
    ok = false;
    if (reasons.size() < 20) reasons.push_back(std::move(why));
  }
};

Verdict verify_set_coloring(const Graph& g, const SetColoring& f, int a, int b);

// (f ⊎ g)(v) = f(v) ∪ {y + f.a : y in g(v)}.
SetColoring uplus(const SetColoring& f, const SetColoring& g);

// Keep the lowest b colors of every set.
SetColoring trim(const SetColoring& f, int b);

// Replace every color c by the block (c-1)*t+1 .. c*t.
SetColoring scale(const SetColoring& f, int t);

struct PairBound {
  int u = -1, v = -1;
  int lo = 0, hi = 1 << 20;  // bounds on |f(u) ∩ f(v)|
};

struct SearchConstraints {
  std::vector<ColorSet> required;   // per vertex, may be empty
  std::vector<ColorSet> forbidden;  // per vertex, may be empty
  std::vector<PairBound> pairs;
  size_t node_limit = 2'000'000;
};

// Backtracking (a:b)-coloring search, a <= 32. Returns nullopt when the search
// space is exhausted; throws std::runtime_error when node_limit is hit.
std::optional<SetColoring> search_ab_coloring(const Graph& g, int a, int b,
                                              const SearchConstraints* cons = nullptr);

std::string coloring_to_json(const SetColoring& f);
SetColoring coloring_from_json(const std::string& text);

ColorSet set_intersection(const ColorSet& x, const ColorSet& y);
ColorSet set_union(const ColorSet& x, const ColorSet& y);
ColorSet set_minus(const ColorSet& x, const ColorSet& y);
bool disjoint(const ColorSet& x, const ColorSet& y);

}  // namespace tfc
