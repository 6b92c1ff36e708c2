#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfc/graph.hpp"

namespace tfc {

struct SuiteResult {
  std::string name;
  long pass = 0, fail = 0;
  std::vector<std::string> failures;  // first few, tagged with the sample index
  nlohmann::json detail = nlohmann::json::object();
  bool ok() const { return fail == 0 && pass > 0; }
};

// odd-path, even-path, h-ab, kernel, orientation, tractable, good, strong, e2e.
const std::vector<std::string>& suite_names();

// `samples` counts per configuration where a suite has several (path
// lengths, statements, (a,b) pairs) and per graph otherwise. Sample i draws
// from its own generator seeded by (seed, i); workers > 1 splits the samples
// across threads and the merge is by index.
SuiteResult run_suite(const std::string& name, int samples, uint64_t seed, int workers = 1);

// 2-connected forbidden-free triangle-free subcubic graphs with
// 4 <= n <= max_n, drawn from consecutive generator seeds.
std::vector<Graph> good_instances(int count, uint64_t seed, int max_n = 18);

}  // namespace tfc
