#pragma once

#include <cstddef>
#include <vector>

#include "lsketch/graph.hpp"

namespace lsketch {

// Output of the expansion-certifying splitter: pieces whose normalized
// Laplacian second eigenvalue is at least h^2/2 (directly, or via a sweep
// whose best conductance exceeded h), plus the crossing edges removed on
// the way. Both live in the original n-vertex index space.
struct PreprocessResult {
  std::vector<WeightedGraph> certified;
  WeightedGraph q_edges;
};

struct PreprocessStats {
  std::size_t splits = 0;
  std::size_t certified_lambda = 0;
  std::size_t certified_sweep = 0;
  int max_depth = 0;
};

// Requires h in (0, 1] and edge weights within a factor 2 of each other.
// Single-vertex pieces are dropped. Enforces (throwing on violation) the
// removed-edge budget |Q| <= 8 * h * |E| * log2|E| and a recursion-depth
// cap counted along smaller-volume sides.
PreprocessResult preprocess(const WeightedGraph& g, double h, PreprocessStats* stats = nullptr);

}  // namespace lsketch
