#pragma once

#include <string>
#include <vector>

#include "tfc/coloring.hpp"
#include "tfc/generate.hpp"

namespace tfc {

// (8:3)-coloring of make_R(i) in its vertex order.
SetColoring r_table(int i);

enum class LVariant { F1, F2 };

// (8:3)-coloring of make_L(seq). Stored tables cover the six drawn
// sequences; the reversed alternation of equal length is transported along
// an isomorphism, and longer sequences are reduced by the 2,1,2,1 block.
SetColoring l_table(const std::vector<int>& seq, LVariant variant);
bool l_table_stored(const std::vector<int>& seq);

// F1: f(w)∩f(y) = f(x)∩f(z) = ∅. F2: f(w)∩f(y) = ∅ and 1 <= |f(x)∩f(z)| <= 2.
bool l_end_patterns(const LInfo& info, const SetColoring& f, LVariant variant, std::string* why = nullptr);

// The 2,1,2,1 block drawn on a pair u,v colored 456 / 378: the twelve new
// vertices in make_L order.
const std::vector<ColorSet>& l_block_colors();

ColorSet parse_colors(const std::string& digits);

}  // namespace tfc
