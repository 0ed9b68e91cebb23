#pragma once

#include <cstdint>
#include <optional>

#include "lsketch/serialize.hpp"

namespace lsketch {

struct QueryReport {
  double estimate = 0.0;          // median over replicas
  std::vector<double> replicas;   // per-replica estimates
  std::optional<double> exact;    // oracle value, when an oracle was given
  std::optional<double> relative_error;  // unset when the oracle value is 0
};

// Builds params.replicas() independent sketches under per-replica derived
// seeds, optionally in parallel (the result is identical either way).
SketchFile build_sketch_file(const WeightedGraph& g, const SketchParams& params, Algo algo,
                             std::uint64_t seed, SparsifierMode mode = SparsifierMode::resistance,
                             bool parallel = true);

// Median-of-replicas estimate of x^T L x. Throws on a dimension mismatch
// or an even replica count (the median must be a single replica's value).
QueryReport median_query(const SketchFile& file, const QueryVector& x,
                         const WeightedGraph* oracle = nullptr);

}  // namespace lsketch
