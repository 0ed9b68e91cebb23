#pragma once

#include <cstdint>
#include <vector>

#include "lsketch/graph.hpp"
#include "lsketch/params.hpp"
#include "lsketch/partition.hpp"
#include "lsketch/sketch_s1.hpp"

namespace lsketch {

// In-arc sampling sketch of one certified component of a degree-class
// stratum. Arcs whose tail kept fewer than 2^{kappa-1} * beta component-
// local out-arcs are stored verbatim; every other arc is covered by beta
// weighted draws at its head, taken from the stored-arc-free in-neighborhood.
struct S2ComponentSketch {
  double gamma = 0.0;
  int kappa = 0;
  std::vector<std::uint32_t> vertices;  // sorted component support
  std::vector<double> delta;            // undirected weighted degree, aligned
  std::vector<double> delta_in_heavy;   // heavy in-arc weight per head, aligned
  std::vector<Arc> s_arcs;              // stored arcs, sorted by (tail, head)
  std::vector<std::vector<SampleRecord>> samples;  // per head; u=head, v=tail
};

struct S2StratumSketch {
  int weight_class_j = 0;
  double gamma = 0.0;
  int kappa = 0;
  WeightedGraph q;  // splitter-removed arcs, stored exactly (undirected)
  std::vector<S2ComponentSketch> components;
  // Audit counters: splitter removals and tails whose out-degree halved,
  // both bounded by the splitter budget at h = 2^{-kappa}.
  std::size_t removed_arcs = 0;
  std::size_t halved_tails = 0;
  std::size_t support_size = 0;
};

// Requires stratum.kind == degree_class. Splits the stratum at h =
// 2^{-kappa} and samples each certified component. Checks (throwing) the
// removal and degree-halving budgets the variance argument rests on.
S2StratumSketch build_s2(const Stratum& stratum, std::uint32_t n, const SketchParams& params,
                         std::uint64_t seed);

// Unbiased estimate of the component's quadratic form; exact when every
// arc is stored, and exactly zero on constant x.
double estimate_s2(const S2ComponentSketch& c, const QueryVector& x);

// The full improved sketch: low/whole strata verbatim, degree-class strata
// sampled. Unbiased for the union of all strata (the reference graph).
struct ImprovedSketch {
  std::uint64_t n = 0;
  std::vector<Stratum> stored_strata;
  std::vector<S2StratumSketch> s2_strata;
};

struct ImprovedBuild {
  ImprovedSketch sketch;
  ImprovedPartition partition_diag;
  WeightedGraph reference;
};

ImprovedBuild build_improved(const WeightedGraph& g, const SketchParams& params,
                             std::uint64_t seed,
                             SparsifierMode mode = SparsifierMode::resistance);

double estimate_improved(const ImprovedSketch& sk, const QueryVector& x);

}  // namespace lsketch
