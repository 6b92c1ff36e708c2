#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tfc/graph.hpp"

namespace tfc {

using Rational = mpq_class;

std::string to_string(const Rational& q);  // "num/den"

// All maximal independent sets (sorted vertex lists), n <= 64. Throws
// std::length_error when more than cap sets exist.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, size_t cap = 500'000);

struct RationalLP {
  Rational value;
  // Independent sets with positive weight.
  std::vector<std::pair<std::vector<int>, Rational>> weights;
  // Optimal vertex weighting: every independent set has total weight <= 1.
  std::vector<Rational> dual;
};

// Exact fractional chromatic number by simplex on the covering LP restricted
// to maximal independent sets.
RationalLP chi_f_exact(const Graph& g, size_t cap = 500'000);

// Independent re-check of a primal/dual pair: covering, independence,
// nonnegativity, dual feasibility over every maximal independent set, and
// equal objective values.
bool check_lp_certificate(const Graph& g, const RationalLP& lp, std::string* why = nullptr);

}  // namespace tfc
