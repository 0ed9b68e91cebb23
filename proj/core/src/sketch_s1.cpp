#include "lsketch/sketch_s1.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "lsketch/rng.hpp"

namespace lsketch {

S1ComponentSketch build_s1(const WeightedGraph& comp, const SketchParams& params, double gamma,
                           std::uint64_t seed) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const std::uint32_t alpha = params.alpha();

  S1ComponentSketch sk;
  sk.gamma = gamma;
  sk.vertices = vertex_support(comp);
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  local.reserve(sk.vertices.size() * 2);
  for (std::uint32_t i = 0; i < sk.vertices.size(); ++i) local.emplace(sk.vertices[i], i);

  sk.delta.assign(sk.vertices.size(), 0.0);
  for (const Edge& e : comp.edges) {
    sk.delta[local.at(e.u)] += e.w;
    sk.delta[local.at(e.v)] += e.w;
  }

  const double threshold = gamma * static_cast<double>(alpha);
  std::vector<char> is_heavy(sk.vertices.size(), 0);
  for (std::uint32_t i = 0; i < sk.vertices.size(); ++i) {
    if (sk.delta[i] > threshold) {
      is_heavy[i] = 1;
      sk.heavy.push_back(sk.vertices[i]);
    }
  }

  // Heavy-heavy incident edges per heavy vertex, in canonical edge order so
  // sampling is reproducible.
  std::unordered_map<std::uint32_t, std::uint32_t> heavy_local;
  heavy_local.reserve(sk.heavy.size() * 2);
  for (std::uint32_t i = 0; i < sk.heavy.size(); ++i) heavy_local.emplace(sk.heavy[i], i);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> hh(sk.heavy.size());
  for (const Edge& e : comp.edges) {
    const bool hu = is_heavy[local.at(e.u)], hv = is_heavy[local.at(e.v)];
    if (hu && hv) {
      hh[heavy_local.at(e.u)].emplace_back(e.v, e.w);
      hh[heavy_local.at(e.v)].emplace_back(e.u, e.w);
    } else {
      sk.light_edges.push_back(e);
    }
  }

  sk.heavy_marginal.assign(sk.heavy.size(), 0.0);
  sk.samples.resize(sk.heavy.size());
  for (std::uint32_t i = 0; i < sk.heavy.size(); ++i) {
    double marginal = 0.0;
    for (const auto& [v, w] : hh[i]) marginal += w;
    sk.heavy_marginal[i] = marginal;
    if (hh[i].empty()) continue;
    std::vector<double> weights(hh[i].size());
    for (std::uint32_t j = 0; j < hh[i].size(); ++j) weights[j] = hh[i][j].second;
    const AliasTable table(weights);
    Rng rng(derive_seed(seed, "draws", sk.heavy[i]));
    std::map<std::uint32_t, std::uint32_t> counts;  // neighbor index -> multiplicity
    for (std::uint32_t d = 0; d < alpha; ++d) ++counts[table.draw(rng)];
    for (const auto& [j, mult] : counts) {
      sk.samples[i].push_back({sk.heavy[i], hh[i][j].first, hh[i][j].second, mult});
    }
    std::sort(sk.samples[i].begin(), sk.samples[i].end(),
              [](const SampleRecord& a, const SampleRecord& b) { return a.v < b.v; });
  }
  return sk;
}

double estimate_s1(const S1ComponentSketch& sk, const QueryVector& x) {
  double acc = 0.0;
  for (std::uint32_t i = 0; i < sk.vertices.size(); ++i) {
    const double xv = x[sk.vertices[i]];
    acc += sk.delta[i] * xv * xv;
  }
  for (const Edge& e : sk.light_edges) acc -= 2.0 * e.w * x[e.u] * x[e.v];
  // The draw budget is recovered from the multiplicities, keeping the
  // estimator self-contained after deserialization.
  for (std::uint32_t i = 0; i < sk.heavy.size(); ++i) {
    if (sk.samples[i].empty()) continue;
    std::uint64_t draws = 0;
    double cross = 0.0;
    for (const SampleRecord& r : sk.samples[i]) {
      draws += r.multiplicity;
      cross += static_cast<double>(r.multiplicity) * x[r.v];
    }
    // cross/draws == 1 exactly on constant x, so the telescoping to zero is
    // exact whenever the weights are.
    acc -= sk.heavy_marginal[i] * x[sk.heavy[i]] * (cross / static_cast<double>(draws));
  }
  return acc;
}

}  // namespace lsketch
