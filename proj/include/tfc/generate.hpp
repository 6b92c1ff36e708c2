#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfc/graph.hpp"

namespace tfc {

Graph make_path(int n);
Graph make_cycle(int n);
// K_{1,alpha+beta} with beta edges subdivided. Center 0, then the alpha
// leaves, then (y_j, y'_j) pairs.
Graph make_star(int alpha, int beta);
// Tree with one center 0 and legs of the given lengths.
Graph make_spider(const std::vector<int>& legs);
Graph make_petersen(int n, int k);

// Vertices 0..3 are the bottom path b0..b3, 4 = top (adjacent to b0, b3),
// 5 = bottom (adjacent to b0, b3); R_i adds e (6) and possibly e2 (7).
Graph make_R(int i);

struct LInfo {
  std::vector<int> seq;
  // Degree-two vertices: (w, x) is the pair left from L_0, (y, z) the newest.
  int w = -1, x = -1, y = -1, z = -1;
  bool wx_adjacent = false, yz_adjacent = false;
};

// L_0 followed by Operations seq[0], seq[1], ...; each operation acts on the
// newest free pair of the matching type.
Graph make_L(const std::vector<int>& seq, LInfo* info = nullptr);
std::vector<int> alternating_seq(int first, int k);
// Vertex count of L_seq.
int l_order(const std::vector<int>& seq);

// H_{a,b}: v_1..v_a are 0..a-1, u_1..u_b are a..a+b-1, plus the edge v_2 u_2.
Graph make_H(int a, int b);
// Path u1 u2 u3 u4 v1..v_{2t} u5 u6 u7 u8 (indices 0..7+2t) with leaves on
// u3..u6 appended in that order.
Graph make_superH(int t);
int superH_index(int t, int ui);  // ui in 1..8

Graph random_tf_subcubic(int n, uint64_t seed);

// Dispatcher used by the CLI: family name plus comma separated params.
Graph generate(const std::string& family, const std::vector<int>& params, uint64_t seed = 0);

}  // namespace tfc
