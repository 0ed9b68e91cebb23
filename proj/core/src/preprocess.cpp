#include "lsketch/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "check.hpp"
#include "lsketch/spectral.hpp"

namespace lsketch {

PreprocessResult preprocess(const WeightedGraph& g, double h, PreprocessStats* stats) {
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("h must lie in (0, 1]");
  PreprocessResult out;
  out.q_edges.n = g.n;
  PreprocessStats local;
  if (g.edges.empty()) {
    if (stats) *stats = local;
    return out;
  }
  double wmin = g.edges.front().w, wmax = wmin;
  for (const Edge& e : g.edges) {
    wmin = std::min(wmin, e.w);
    wmax = std::max(wmax, e.w);
  }
  if (wmax > 2.0 * wmin * (1.0 + 1e-12))
    throw std::invalid_argument("edge weights must lie within a factor 2");

  const double m = static_cast<double>(g.edges.size());
  const int depth_cap = static_cast<int>(2.0 * std::log2(std::max(2.0, m))) + 10;

  std::vector<Edge> q;
  std::vector<std::pair<WeightedGraph, int>> work;  // piece, smaller-side lineage depth
  work.emplace_back(g, 0);
  while (!work.empty()) {
    auto [piece, depth] = std::move(work.back());
    work.pop_back();
    local.max_depth = std::max(local.max_depth, depth);
    for (const auto& comp : connected_components(piece)) {
      WeightedGraph sub = induced_subgraph(piece, comp);
      const SpectralCertificate cert = lambda1(sub);
      if (cert.lambda1 >= h * h / 2.0) {
        ++local.certified_lambda;
        out.certified.push_back(std::move(sub));
        continue;
      }
      Cut cut = sweep_cut(sub, cert.vec);
      if (cut.conductance > h) {
        // Sweep conductance lower-bounds lambda1 via phi^2/2 > h^2/2.
        ++local.certified_sweep;
        out.certified.push_back(std::move(sub));
        continue;
      }
      ++local.splits;
      LSKETCH_CHECK(depth + 1 <= depth_cap, "splitter exceeded its depth cap");
      for (const Edge& e : cut.crossing) q.push_back(e);
      std::vector<std::uint32_t> rest;
      {
        const auto support = vertex_support(sub);
        rest.reserve(support.size() - cut.side.size());
        std::set_difference(support.begin(), support.end(), cut.side.begin(), cut.side.end(),
                            std::back_inserter(rest));
      }
      work.emplace_back(induced_subgraph(sub, cut.side), depth + 1);
      work.emplace_back(induced_subgraph(sub, rest), depth);
    }
  }

  LSKETCH_CHECK(static_cast<double>(q.size()) <=
                    8.0 * h * m * std::log2(std::max(2.0, m)) + 1e-9,
                "splitter removed more edges than its budget");
  out.q_edges = WeightedGraph::build(g.n, std::move(q));
  if (stats) *stats = local;
  return out;
}

}  // namespace lsketch
