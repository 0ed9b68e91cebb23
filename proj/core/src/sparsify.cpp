#include "lsketch/sparsify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "check.hpp"
#include "lsketch/rng.hpp"

namespace lsketch {
namespace {

constexpr std::uint32_t kDenseResistanceLimit = 2000;

// Effective resistance of every edge, computed per connected component from
// the dense inverse of L + ones*ones^T/k (exact on the component's span).
std::vector<double> effective_resistances(const WeightedGraph& g) {
  std::vector<double> r(g.edges.size(), 0.0);
  std::vector<std::size_t> edge_of;  // scratch: edge ids of current component
  for (const auto& comp : connected_components(g)) {
    const std::uint32_t k = static_cast<std::uint32_t>(comp.size());
    std::unordered_map<std::uint32_t, std::uint32_t> local;
    local.reserve(k * 2);
    for (std::uint32_t i = 0; i < k; ++i) local.emplace(comp[i], i);
    Eigen::MatrixXd lap = Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(k));
    edge_of.clear();
    for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
      const Edge& e = g.edges[idx];
      const auto it = local.find(e.u);
      if (it == local.end()) continue;
      const std::uint32_t a = it->second, b = local.at(e.v);
      lap(a, a) += e.w;
      lap(b, b) += e.w;
      lap(a, b) -= e.w;
      lap(b, a) -= e.w;
      edge_of.push_back(idx);
    }
    const Eigen::MatrixXd inv =
        Eigen::LLT<Eigen::MatrixXd>(lap).solve(Eigen::MatrixXd::Identity(k, k));
    for (const std::size_t idx : edge_of) {
      const std::uint32_t a = local.at(g.edges[idx].u), b = local.at(g.edges[idx].v);
      r[idx] = std::max(inv(a, a) + inv(b, b) - 2.0 * inv(a, b), 0.0);
    }
  }
  return r;
}

void verify_against(const WeightedGraph& in, const WeightedGraph& out, double eps,
                    std::uint64_t seed) {
  Rng rng(derive_seed(seed, "verify"));
  QueryVector x(in.n, 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    for (double& c : x) c = 2.0 * rng.next_double() - 1.0;
    const double exact = quadratic_form(in, x);
    if (exact <= 1e-12) continue;
    const double est = quadratic_form(out, x);
    if (std::abs(est - exact) > eps * exact)
      throw std::runtime_error("sparsifier verification failed: relative error above eps");
  }
}

}  // namespace

SparsifierOutput sparsify(const WeightedGraph& g, double eps, std::uint64_t seed,
                          SparsifierMode mode, double c_sparsify, bool verify) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(c_sparsify > 0.0)) throw std::invalid_argument("c_sparsify must be positive");

  SparsifierOutput out;
  const auto support = vertex_support(g);
  const double ns = static_cast<double>(support.size());
  if (support.empty()) {
    out.graph.n = g.n;
    out.pass_through = true;
    return out;
  }

  const double m = static_cast<double>(g.edges.size());
  const double budget = ns * std::log2(std::max(2.0, ns)) / (eps * eps);
  const std::uint64_t q = static_cast<std::uint64_t>(
      std::ceil(c_sparsify * ns * std::log(std::max(2.0, ns)) / (eps * eps)));
  if (m <= budget || static_cast<double>(q) >= m) {
    out.graph = g;
    out.eta = m * eps * eps / ns;
    out.pass_through = true;
    double wmin = g.edges.front().w, wmax = wmin;
    for (const Edge& e : g.edges) {
      wmin = std::min(wmin, e.w);
      wmax = std::max(wmax, e.w);
    }
    out.weight_ratio = wmax / wmin;
    return out;
  }
  if (mode == SparsifierMode::none)
    throw std::invalid_argument("graph exceeds the size budget and sparsification is disabled");
  if (support.size() > kDenseResistanceLimit)
    throw std::invalid_argument("resistance sparsifier supports up to 2000 support vertices");

  const std::vector<double> resistance = effective_resistances(g);
  std::vector<double> sample_weight(g.edges.size());
  double total = 0.0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    sample_weight[i] = g.edges[i].w * resistance[i];
    total += sample_weight[i];
  }
  const AliasTable table(sample_weight);
  Rng rng(derive_seed(seed, "sample"));
  std::vector<std::uint64_t> hits(g.edges.size(), 0);
  for (std::uint64_t t = 0; t < q; ++t) ++hits[table.draw(rng)];

  std::vector<Edge> sampled;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (hits[i] == 0) continue;
    // Each draw contributes w_e / (q * p_e); p_e = sample_weight[i] / total.
    const double w = static_cast<double>(hits[i]) * g.edges[i].w * total /
                     (static_cast<double>(q) * sample_weight[i]);
    sampled.push_back({g.edges[i].u, g.edges[i].v, w});
  }
  out.graph = WeightedGraph::build(g.n, std::move(sampled));
  out.eta = static_cast<double>(out.graph.edges.size()) * eps * eps / ns;
  out.pass_through = false;
  double wmin = out.graph.edges.front().w, wmax = wmin;
  for (const Edge& e : out.graph.edges) {
    wmin = std::min(wmin, e.w);
    wmax = std::max(wmax, e.w);
  }
  out.weight_ratio = wmax / wmin;

  LSKETCH_CHECK(static_cast<double>(out.graph.edges.size()) <=
                    4.0 * ns * std::log2(std::max(2.0, ns)) / (eps * eps),
                "sparsifier output exceeds its size budget");
  LSKETCH_CHECK(out.weight_ratio <= std::pow(ns, 8.0),
                "sparsifier output weights span too wide a range");

  if (verify) verify_against(g, out.graph, eps, seed);
  return out;
}

}  // namespace lsketch
