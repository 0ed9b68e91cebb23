#include "lsketch/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "check.hpp"
#include "lsketch/rng.hpp"

namespace lsketch {
namespace {

Stratum whole_stratum(const WeightedGraph& g, int level) {
  Stratum st;
  st.kind = Stratum::Kind::whole;
  st.level = level;
  st.arcs.reserve(g.edges.size());
  for (const Edge& e : g.edges) st.arcs.push_back({e.u, e.v, e.w});
  return st;
}

}  // namespace

ImprovedPartition partition_graph(const WeightedGraph& g, const SketchParams& params,
                                  std::uint64_t seed, SparsifierMode mode) {
  params.validate();
  ImprovedPartition out;
  out.n = g.n;
  const std::uint64_t beta = params.beta();
  const double eps2 = params.eps * params.eps;
  const double n0 = std::max<double>(2.0, static_cast<double>(vertex_support(g).size()));
  const int depth_cap = static_cast<int>(std::ceil(2.0 * std::log2(n0))) + 2;

  WeightedGraph current = g;
  int level = 0;
  while (!current.edges.empty()) {
    const std::size_t support_before = vertex_support(current).size();
    if (support_before < 3) {
      out.strata.push_back(whole_stratum(current, level));
      break;
    }
    LSKETCH_CHECK(level <= depth_cap, "stratifier exceeded its depth cap");

    const SparsifierOutput sp = sparsify(current, params.eps,
                                         derive_seed(seed, "sparsify", level), mode,
                                         params.c_sparsify);
    const WeightedGraph& ep = sp.graph;
    const std::size_t ns = vertex_support(ep).size();
    LevelDiag diag;
    diag.support_before = support_before;
    diag.eta = std::max(1.0, static_cast<double>(ep.edges.size()) * eps2 /
                                 static_cast<double>(ns));
    diag.s_raw = diag.eta / eps2;
    const double snap = std::ceil(std::log2(std::max(1.0, diag.s_raw / static_cast<double>(beta))));
    diag.s = beta << static_cast<std::uint32_t>(snap);
    diag.t = 2 * diag.s;

    OrientedGraph og = assign_direction(ep, static_cast<double>(diag.t),
                                        derive_seed(seed, "orient", level));

    // Class-local out-degrees: arcs grouped by the dyadic exponent of their
    // weight, degrees counted over tails within the group.
    std::map<int, std::vector<std::size_t>> by_class;  // j -> arc ids
    for (std::size_t i = 0; i < og.arcs.size(); ++i)
      by_class[std::ilogb(og.arcs[i].w)].push_back(i);

    std::vector<Edge> remainder;
    for (const auto& [j, ids] : by_class) {
      std::map<std::uint32_t, std::uint32_t> dj;  // tail -> class-local out-degree
      for (const std::size_t i : ids) ++dj[og.arcs[i].tail];
      std::map<int, std::vector<Arc>> buckets;  // kappa -> arcs; -1 = low
      for (const std::size_t i : ids) {
        const Arc& a = og.arcs[i];
        const std::uint64_t d = dj[a.tail];
        if (d < beta) {
          buckets[-1].push_back(a);
        } else if (d >= diag.t) {
          remainder.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head), a.w});
        } else {
          int kappa = 0;
          while ((beta << (kappa + 1)) <= d) ++kappa;
          LSKETCH_CHECK((beta << kappa) <= diag.s, "degree class exceeds the density scale");
          buckets[kappa].push_back(a);
        }
      }
      for (auto& [kappa, arcs] : buckets) {
        Stratum st;
        st.kind = kappa < 0 ? Stratum::Kind::low : Stratum::Kind::degree_class;
        st.weight_class_j = j;
        st.gamma = std::ldexp(1.0, j);
        st.kappa = kappa;
        st.level = level;
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
          if (a.tail != b.tail) return a.tail < b.tail;
          return a.head < b.head;
        });
        st.arcs = std::move(arcs);
        out.strata.push_back(std::move(st));
      }
    }

    current = WeightedGraph::build(g.n, std::move(remainder));
    diag.support_after = vertex_support(current).size();
    LSKETCH_CHECK(static_cast<double>(diag.support_after) <=
                      static_cast<double>(ns) / (2.0 - 1.0 / static_cast<double>(diag.s)) + 1e-9,
                  "remainder support did not shrink as guaranteed");
    out.levels.push_back(diag);
    ++level;
  }
  out.depth = static_cast<int>(out.levels.size());

  const double lg = std::log2(std::max(2.0, n0));
  LSKETCH_CHECK(static_cast<double>(out.strata.size()) <= 50.0 * lg * lg * lg,
                "stratum count exceeds its budget");
  return out;
}

}  // namespace lsketch
