#pragma once

#include <cstdint>
#include <vector>

#include "lsketch/graph.hpp"
#include "lsketch/params.hpp"
#include "lsketch/preprocess.hpp"
#include "lsketch/sketch_s1.hpp"
#include "lsketch/sparsify.hpp"

namespace lsketch {

// One dyadic weight class of the basic sketch: the crossing edges removed
// by the splitter are stored exactly, each certified component is sketched.
struct BasicClassSketch {
  int class_index = 0;
  double gamma = 0.0;
  WeightedGraph q;
  std::vector<S1ComponentSketch> components;
};

struct BasicSketch {
  std::uint64_t n = 0;
  std::vector<BasicClassSketch> classes;
};

// Build products beyond the sketch itself: the reference graph the
// estimator is unbiased for (the sparsifier output) and diagnostics used
// by tests and audits. Only `sketch` is serialized.
struct BasicBuild {
  BasicSketch sketch;
  WeightedGraph reference;
  SparsifierOutput sparsifier;
  PreprocessStats prep_stats;
  std::vector<std::vector<WeightedGraph>> class_components;
};

// Pipeline: sparsify, split into factor-2 weight classes, certify expansion
// per class, sketch each certified component. Requires the input weight
// ratio to be at most n^10.
BasicBuild build_basic(const WeightedGraph& g, const SketchParams& params, std::uint64_t seed,
                       SparsifierMode mode = SparsifierMode::resistance);

// Unbiased estimate of x^T L x for the build's reference graph.
double estimate_basic(const BasicSketch& sk, const QueryVector& x);

}  // namespace lsketch
