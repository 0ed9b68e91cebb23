#pragma once

#include "lsketch/graph.hpp"

namespace lsketch {

struct CheegerResult {
  double h = 0.0;  // min over nonempty proper S of w(S, V\S) / min(vol S, vol V\S)
  Cut best;
};

// Exact conductance minimum by subset enumeration over the vertex support.
// Requires a connected support of size in [2, 24]; O(2^k * |E|).
CheegerResult exact_cheeger(const WeightedGraph& g);

}  // namespace lsketch
