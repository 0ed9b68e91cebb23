#pragma once

#include <cstdint>
#include <vector>

#include "lsketch/orient.hpp"
#include "lsketch/params.hpp"
#include "lsketch/sparsify.hpp"

namespace lsketch {

// One arc stratum of the improved pipeline. Arcs in a degree_class stratum
// share a dyadic weight class (weights in [gamma, 2*gamma)) and have tails
// of class-local out-degree in [2^kappa * beta, 2^{kappa+1} * beta). low
// strata collect the tails below beta; a whole stratum stores a graph too
// small to stratify. low and whole strata are stored exactly downstream.
struct Stratum {
  enum class Kind { low, degree_class, whole };
  Kind kind = Kind::whole;
  int weight_class_j = 0;  // floor(log2 w); unused for whole
  double gamma = 0.0;      // 2^weight_class_j; 0 for whole
  int kappa = -1;          // degree-class index; -1 for low/whole
  std::vector<Arc> arcs;   // sorted by (tail, head)
  int level = 0;
};

struct LevelDiag {
  double eta = 0.0;
  double s_raw = 0.0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::size_t support_before = 0;
  std::size_t support_after = 0;  // support of the remainder passed down
};

struct ImprovedPartition {
  std::uint64_t n = 0;
  std::vector<Stratum> strata;
  int depth = 0;  // number of stratified levels run
  std::vector<LevelDiag> levels;
};

// Level loop: sparsify the working graph, pick the density scale s (a
// power-of-two multiple of beta, snapped up), orient under threshold 2s,
// split arcs by weight class and tail out-degree, and recurse on the arcs
// whose tails still exceed 2s. Each level provably shrinks the support by
// a factor 2 - 1/s (checked), so the depth stays logarithmic.
ImprovedPartition partition_graph(const WeightedGraph& g, const SketchParams& params,
                                  std::uint64_t seed,
                                  SparsifierMode mode = SparsifierMode::resistance);

}  // namespace lsketch
