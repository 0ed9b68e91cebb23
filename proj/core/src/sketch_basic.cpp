#include "lsketch/sketch_basic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsketch/rng.hpp"

namespace lsketch {

BasicBuild build_basic(const WeightedGraph& g, const SketchParams& params, std::uint64_t seed,
                       SparsifierMode mode) {
  params.validate();
  BasicBuild out;
  out.sketch.n = g.n;
  out.reference.n = g.n;
  out.sparsifier.graph.n = g.n;
  if (g.edges.empty()) return out;

  double wmin = g.edges.front().w, wmax = wmin;
  for (const Edge& e : g.edges) {
    wmin = std::min(wmin, e.w);
    wmax = std::max(wmax, e.w);
  }
  if (wmax > wmin * std::pow(static_cast<double>(std::max<std::uint64_t>(g.n, 2)), 10.0))
    throw std::invalid_argument("weight ratio exceeds n^10");

  out.sparsifier = sparsify(g, params.eps, derive_seed(seed, "sparsify"), mode,
                            params.c_sparsify);
  out.reference = out.sparsifier.graph;

  const double h = params.h_effective();
  for (const WeightClass& wc : weight_class_partition(out.sparsifier.graph)) {
    BasicClassSketch cls;
    cls.class_index = wc.index;
    cls.gamma = wc.gamma;
    PreprocessStats stats;
    PreprocessResult pre = preprocess(wc.graph, h, &stats);
    out.prep_stats.splits += stats.splits;
    out.prep_stats.certified_lambda += stats.certified_lambda;
    out.prep_stats.certified_sweep += stats.certified_sweep;
    out.prep_stats.max_depth = std::max(out.prep_stats.max_depth, stats.max_depth);
    cls.q = std::move(pre.q_edges);
    std::vector<WeightedGraph> comps;
    for (std::uint32_t c = 0; c < pre.certified.size(); ++c) {
      cls.components.push_back(build_s1(pre.certified[c], params, wc.gamma,
                                        derive_seed(seed, "s1", wc.index, c)));
      comps.push_back(std::move(pre.certified[c]));
    }
    out.class_components.push_back(std::move(comps));
    out.sketch.classes.push_back(std::move(cls));
  }
  return out;
}

double estimate_basic(const BasicSketch& sk, const QueryVector& x) {
  if (x.size() != sk.n) throw std::invalid_argument("query vector has the wrong dimension");
  double acc = 0.0;
  for (const BasicClassSketch& cls : sk.classes) {
    acc += quadratic_form(cls.q, x);
    for (const S1ComponentSketch& comp : cls.components) acc += estimate_s1(comp, x);
  }
  return acc;
}

}  // namespace lsketch
