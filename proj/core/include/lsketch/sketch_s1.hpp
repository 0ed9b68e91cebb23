#pragma once

#include <cstdint>
#include <vector>

#include "lsketch/graph.hpp"
#include "lsketch/params.hpp"

namespace lsketch {

// One coalesced multiedge drawn by a sampler: `multiplicity` draws of the
// edge (u, v) of weight `weight`. For in-arc samplers u is the head.
struct SampleRecord {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double weight = 0.0;
  std::uint32_t multiplicity = 0;
};

inline bool operator==(const SampleRecord& a, const SampleRecord& b) {
  return a.u == b.u && a.v == b.v && a.weight == b.weight && a.multiplicity == b.multiplicity;
}

// Degree-split sketch of one expansion-certified component whose weights
// lie in [gamma, 2*gamma). Vertices of weighted degree <= gamma * alpha are
// light; every edge touching a light vertex is stored verbatim, and each
// heavy vertex keeps alpha weighted draws from its heavy-heavy edges.
struct S1ComponentSketch {
  double gamma = 0.0;
  std::vector<std::uint32_t> vertices;        // sorted component support
  std::vector<double> delta;                  // weighted degrees, aligned with vertices
  std::vector<Edge> light_edges;              // canonical order
  std::vector<std::uint32_t> heavy;           // sorted
  std::vector<double> heavy_marginal;         // heavy-neighbor degree, aligned with heavy
  std::vector<std::vector<SampleRecord>> samples;  // per heavy vertex, sorted by neighbor
};

// Requires a connected component; alpha and the light threshold come from
// params and gamma. A heavy vertex with no heavy neighbor keeps no samples.
S1ComponentSketch build_s1(const WeightedGraph& comp, const SketchParams& params, double gamma,
                           std::uint64_t seed);

// Unbiased estimate of the component's quadratic form at x (global-indexed,
// length >= max vertex + 1). Exact when nothing was sampled, and exactly
// zero on constant x.
double estimate_s1(const S1ComponentSketch& sk, const QueryVector& x);

}  // namespace lsketch
