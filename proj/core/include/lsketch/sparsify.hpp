#pragma once

#include <cstdint>

#include "lsketch/graph.hpp"

namespace lsketch {

enum class SparsifierMode {
  resistance,  // sample by effective resistance when the graph is dense enough
  none,        // demand the input already fits the size budget
};

struct SparsifierOutput {
  WeightedGraph graph;
  double eta = 0.0;          // |edges| * eps^2 / support, measured on the output
  bool pass_through = false; // input already within budget; returned unchanged
  double weight_ratio = 1.0; // max/min output weight
};

// Keeps quadratic forms within (1 +- eps) with high probability while
// shrinking the edge set to O(support * log(support) / eps^2). Inputs at or
// below that budget (or where sampling would not shrink) pass through
// unchanged. Sampling draws with replacement proportionally to
// weight * effective resistance, computed densely per connected component
// (supports up to 2000 support vertices; beyond that it throws). With mode
// none an input exceeding the budget throws instead of being sampled.
// verify re-checks 100 random quadratic forms against the input and throws
// on a relative error above eps.
SparsifierOutput sparsify(const WeightedGraph& g, double eps, std::uint64_t seed,
                          SparsifierMode mode = SparsifierMode::resistance,
                          double c_sparsify = 1.5, bool verify = false);

}  // namespace lsketch
