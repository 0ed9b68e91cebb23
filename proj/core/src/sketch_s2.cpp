#include "lsketch/sketch_s2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "check.hpp"
#include "lsketch/preprocess.hpp"
#include "lsketch/rng.hpp"

namespace lsketch {
namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
}

}  // namespace

S2StratumSketch build_s2(const Stratum& stratum, std::uint32_t n, const SketchParams& params,
                         std::uint64_t seed) {
  if (stratum.kind != Stratum::Kind::degree_class)
    throw std::invalid_argument("only degree-class strata are sampled");
  const std::uint32_t beta = params.beta();
  const int kappa = stratum.kappa;

  S2StratumSketch out;
  out.weight_class_j = stratum.weight_class_j;
  out.gamma = stratum.gamma;
  out.kappa = kappa;

  // Undirected view for the splitter; arc directions recovered by vertex
  // pair (each pair carries exactly one arc).
  std::unordered_map<std::uint64_t, std::uint32_t> tail_of;
  tail_of.reserve(stratum.arcs.size() * 2);
  std::vector<Edge> undirected;
  undirected.reserve(stratum.arcs.size());
  std::unordered_map<std::uint32_t, std::uint32_t> pre_out;
  for (const Arc& a : stratum.arcs) {
    tail_of.emplace(pair_key(a.tail, a.head), a.tail);
    undirected.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head), a.w});
    ++pre_out[a.tail];
  }
  const WeightedGraph u = WeightedGraph::build(n, std::move(undirected));
  out.support_size = vertex_support(u).size();

  const PreprocessResult pre = preprocess(u, std::ldexp(1.0, -kappa));
  out.q = pre.q_edges;
  out.removed_arcs = pre.q_edges.edges.size();

  const double m = static_cast<double>(stratum.arcs.size());
  const double lg = std::log2(std::max(2.0, m));
  LSKETCH_CHECK(static_cast<double>(out.removed_arcs) <=
                    16.0 * static_cast<double>(beta) * static_cast<double>(out.support_size) * lg,
                "stratum splitter removed more arcs than its budget");

  const double threshold = std::ldexp(static_cast<double>(beta), kappa - 1);
  std::unordered_map<std::uint32_t, std::uint32_t> post_out;
  for (const WeightedGraph& comp : pre.certified) {
    S2ComponentSketch c;
    c.gamma = stratum.gamma;
    c.kappa = kappa;
    c.vertices = vertex_support(comp);
    std::unordered_map<std::uint32_t, std::uint32_t> local;
    local.reserve(c.vertices.size() * 2);
    for (std::uint32_t i = 0; i < c.vertices.size(); ++i) local.emplace(c.vertices[i], i);

    std::vector<Arc> arcs;
    arcs.reserve(comp.edges.size());
    std::vector<std::uint32_t> comp_out(c.vertices.size(), 0);
    c.delta.assign(c.vertices.size(), 0.0);
    for (const Edge& e : comp.edges) {
      const std::uint32_t tail = tail_of.at(pair_key(e.u, e.v));
      const std::uint32_t head = tail == e.u ? e.v : e.u;
      arcs.push_back({tail, head, e.w});
      ++comp_out[local.at(tail)];
      c.delta[local.at(e.u)] += e.w;
      c.delta[local.at(e.v)] += e.w;
    }
    for (std::uint32_t i = 0; i < c.vertices.size(); ++i)
      post_out[c.vertices[i]] = comp_out[i];

    // Heavy in-neighborhoods: only arcs outside the stored set feed the
    // samplers, and the sampling marginal is restricted to them.
    std::vector<std::vector<std::pair<std::uint32_t, double>>> heavy_in(c.vertices.size());
    for (const Arc& a : arcs) {
      if (static_cast<double>(comp_out[local.at(a.tail)]) < threshold) {
        c.s_arcs.push_back(a);
      } else {
        heavy_in[local.at(a.head)].emplace_back(a.tail, a.w);
      }
    }
    std::sort(c.s_arcs.begin(), c.s_arcs.end(), [](const Arc& a, const Arc& b) {
      if (a.tail != b.tail) return a.tail < b.tail;
      return a.head < b.head;
    });

    c.delta_in_heavy.assign(c.vertices.size(), 0.0);
    c.samples.resize(c.vertices.size());
    for (std::uint32_t i = 0; i < c.vertices.size(); ++i) {
      if (heavy_in[i].empty()) continue;
      double marginal = 0.0;
      std::vector<double> weights(heavy_in[i].size());
      for (std::uint32_t j = 0; j < heavy_in[i].size(); ++j) {
        weights[j] = heavy_in[i][j].second;
        marginal += weights[j];
      }
      c.delta_in_heavy[i] = marginal;
      const AliasTable table(weights);
      Rng rng(derive_seed(seed, "draws", c.vertices[i]));
      std::map<std::uint32_t, std::uint32_t> counts;
      for (std::uint32_t d = 0; d < beta; ++d) ++counts[table.draw(rng)];
      for (const auto& [j, mult] : counts) {
        c.samples[i].push_back(
            {c.vertices[i], heavy_in[i][j].first, heavy_in[i][j].second, mult});
      }
      std::sort(c.samples[i].begin(), c.samples[i].end(),
                [](const SampleRecord& a, const SampleRecord& b) { return a.v < b.v; });
    }
    out.components.push_back(std::move(c));
  }

  for (const auto& [v, d_pre] : pre_out) {
    const auto it = post_out.find(v);
    const std::uint32_t d_post = it == post_out.end() ? 0 : it->second;
    if (static_cast<double>(d_post) < static_cast<double>(d_pre) / 2.0) ++out.halved_tails;
  }
  LSKETCH_CHECK(static_cast<double>(out.halved_tails) <=
                    16.0 * std::ldexp(1.0, 1 - kappa) * static_cast<double>(out.support_size) * lg,
                "too many tails lost half their out-degree");
  return out;
}

double estimate_s2(const S2ComponentSketch& c, const QueryVector& x) {
  double acc = 0.0;
  for (std::uint32_t i = 0; i < c.vertices.size(); ++i) {
    const double xv = x[c.vertices[i]];
    acc += c.delta[i] * xv * xv;
  }
  for (const Arc& a : c.s_arcs) acc -= 2.0 * a.w * x[a.tail] * x[a.head];
  for (std::uint32_t i = 0; i < c.vertices.size(); ++i) {
    if (c.samples[i].empty()) continue;
    std::uint64_t draws = 0;
    double cross = 0.0;
    for (const SampleRecord& r : c.samples[i]) {
      draws += r.multiplicity;
      cross += static_cast<double>(r.multiplicity) * x[r.v];
    }
    // cross/draws == 1 exactly on constant x; see estimate_s1.
    acc -= 2.0 * c.delta_in_heavy[i] * x[c.vertices[i]] * (cross / static_cast<double>(draws));
  }
  return acc;
}

ImprovedBuild build_improved(const WeightedGraph& g, const SketchParams& params,
                             std::uint64_t seed, SparsifierMode mode) {
  params.validate();
  ImprovedBuild out;
  out.sketch.n = g.n;
  out.partition_diag = partition_graph(g, params, derive_seed(seed, "partition"), mode);

  std::vector<Edge> reference_edges;
  for (std::size_t i = 0; i < out.partition_diag.strata.size(); ++i) {
    const Stratum& st = out.partition_diag.strata[i];
    for (const Arc& a : st.arcs)
      reference_edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head), a.w});
    if (st.kind == Stratum::Kind::degree_class) {
      out.sketch.s2_strata.push_back(
          build_s2(st, g.n, params, derive_seed(seed, "s2", i)));
    } else {
      out.sketch.stored_strata.push_back(st);
    }
  }
  out.reference = WeightedGraph::build(g.n, std::move(reference_edges));
  return out;
}

double estimate_improved(const ImprovedSketch& sk, const QueryVector& x) {
  if (x.size() != sk.n) throw std::invalid_argument("query vector has the wrong dimension");
  double acc = 0.0;
  for (const Stratum& st : sk.stored_strata) {
    for (const Arc& a : st.arcs) {
      const double d = x[a.tail] - x[a.head];
      acc += a.w * d * d;
    }
  }
  for (const S2StratumSketch& st : sk.s2_strata) {
    acc += quadratic_form(st.q, x);
    for (const S2ComponentSketch& c : st.components) acc += estimate_s2(c, x);
  }
  return acc;
}

}  // namespace lsketch
