#include "lsketch/cheeger.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsketch {

CheegerResult exact_cheeger(const WeightedGraph& g) {
  const auto verts = vertex_support(g);
  const std::size_t k = verts.size();
  if (k < 2 || k > 24) throw std::invalid_argument("exact_cheeger: support size must be in [2, 24]");
  if (connected_components(g).size() != 1) throw std::invalid_argument("exact_cheeger: graph must be connected");

  std::vector<std::uint32_t> local_of(g.n, 0);
  for (std::size_t i = 0; i < k; ++i) local_of[verts[i]] = static_cast<std::uint32_t>(i);

  struct LocalEdge {
    std::uint32_t a, b;
    double w;
  };
  std::vector<LocalEdge> edges;
  edges.reserve(g.edges.size());
  double vol_total = 0.0;
  std::vector<double> deg(k, 0.0);
  for (const auto& e : g.edges) {
    edges.push_back({local_of[e.u], local_of[e.v], e.w});
    deg[local_of[e.u]] += e.w;
    deg[local_of[e.v]] += e.w;
    vol_total += 2.0 * e.w;
  }

  // Fix vertex 0 in S to enumerate each bipartition once.
  double best_h = 2.0;  // conductance never exceeds 1
  std::uint32_t best_mask = 1;
  const std::uint32_t full = (k == 32 ? ~0u : (1u << k) - 1u);
  for (std::uint32_t mask = 1; mask != full; mask += 2) {
    double cut = 0.0;
    for (const auto& e : edges) {
      if (((mask >> e.a) & 1u) != ((mask >> e.b) & 1u)) cut += e.w;
    }
    double vol_s = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) vol_s += deg[i];
    }
    const double phi = cut / std::min(vol_s, vol_total - vol_s);
    if (phi < best_h) {
      best_h = phi;
      best_mask = mask;
    }
  }

  // Report the smaller-volume side of the winning bipartition.
  double vol_s = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((best_mask >> i) & 1u) vol_s += deg[i];
  }
  const bool flip = vol_s > vol_total - vol_s;
  CheegerResult r;
  r.h = best_h;
  for (std::size_t i = 0; i < k; ++i) {
    const bool in_s = ((best_mask >> i) & 1u) != 0;
    if (in_s != flip) r.best.side.push_back(verts[i]);
  }
  r.best.conductance = best_h;
  for (const auto& e : g.edges) {
    if (((best_mask >> local_of[e.u]) & 1u) != ((best_mask >> local_of[e.v]) & 1u)) {
      r.best.crossing.push_back(e);
    }
  }
  return r;
}

}  // namespace lsketch
