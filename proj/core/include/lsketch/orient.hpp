#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lsketch/graph.hpp"

namespace lsketch {

struct Arc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  double w = 0.0;
};

inline bool operator==(const Arc& a, const Arc& b) {
  return a.tail == b.tail && a.head == b.head && a.w == b.w;
}

// Directed view of a graph: every undirected edge carried by exactly one
// arc. Degree tables are redundant with arcs; rebuild_tables() restores
// them (and canonical arc order) after direct edits.
struct OrientedGraph {
  std::uint64_t n = 0;
  std::vector<Arc> arcs;  // sorted by (tail, head)
  std::vector<std::uint32_t> out_deg, in_deg;
  std::vector<double> out_wdeg, in_wdeg;
  void rebuild_tables();
};

// Orients each edge along an Eulerian circuit of the graph augmented with
// a virtual vertex tied to the odd-degree vertices, so every out-degree is
// ceil(d/2) or floor(d/2). Deterministic.
OrientedGraph balanced_orientation(const WeightedGraph& g);

// Called after every flip with the graph state, the 0-based flip index and
// the potential value after the flip.
using FlipObserver =
    std::function<void(const OrientedGraph&, std::size_t, double)>;

// Sum over violating arcs (out[tail] >= t and out[head] < t-1) of
// out[tail] - out[head]. Zero exactly when no arc violates the threshold.
double potential(const OrientedGraph& og, double t);

// Repeatedly reverses violating arcs until none remain: flipping u->v while
// out[u] >= t and out[v] < t-1. Each flip lowers the potential by at least
// 2, and a vertex that ever reaches out-degree t-1 never drops below it.
// Returns the number of flips; throws if the flip count exceeds
// potential/2 + 10 (it cannot, unless the implementation is wrong).
std::size_t enforce_threshold(OrientedGraph& og, double t,
                              const FlipObserver& observer = nullptr);

// balanced_orientation followed by enforce_threshold. The seed is accepted
// for interface stability but the procedure is deterministic.
OrientedGraph assign_direction(const WeightedGraph& g, double t, std::uint64_t seed);

}  // namespace lsketch
