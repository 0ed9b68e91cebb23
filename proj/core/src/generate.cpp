#include "lsketch/generate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lsketch/rng.hpp"

namespace lsketch {

WeightedGraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (d >= n) throw std::invalid_argument("degree must be below n");
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even");
  Rng rng(derive_seed(seed, "regular"));
  std::vector<std::uint32_t> stubs(static_cast<std::size_t>(n) * d);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;

  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const std::uint32_t a = stubs[i], b = stubs[i + 1];
      if (a == b || !seen.emplace(std::min(a, b), std::max(a, b)).second) simple = false;
    }
    if (!simple) continue;
    std::vector<Edge> edges;
    edges.reserve(seen.size());
    for (const auto& [a, b] : seen) edges.push_back({a, b, 1.0});
    return WeightedGraph::build(n, std::move(edges));
  }
  throw std::runtime_error("no simple d-regular pairing found; lower d or change the seed");
}

WeightedGraph barbell(std::uint32_t n) {
  if (n < 4) throw std::invalid_argument("barbell needs at least 4 vertices");
  const std::uint32_t a = (n + 1) / 2;
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < a; ++u)
    for (std::uint32_t v = u + 1; v < a; ++v) edges.push_back({u, v, 1.0});
  for (std::uint32_t u = a; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  edges.push_back({a - 1, a, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

WeightedGraph power_law(std::uint32_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  Rng rng(derive_seed(seed, "powerlaw"));
  std::vector<double> want(n);
  const double cap = std::sqrt(static_cast<double>(n));
  double total = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    want[i] = std::min(cap, 3.0 * std::pow(static_cast<double>(i + 1), -2.0 / 3.0) *
                                std::pow(static_cast<double>(n), 1.0 / 3.0));
    total += want[i];
  }
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const double p = std::min(1.0, want[u] * want[v] / total);
      if (rng.next_double() < p) edges.push_back({u, v, 1.0});
    }
  }
  return WeightedGraph::build(n, std::move(edges));
}

WeightedGraph complete(std::uint32_t n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

WeightedGraph path(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

WeightedGraph star(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t v = 1; v < n; ++v) edges.push_back({0, v, 1.0});
  return WeightedGraph::build(n, std::move(edges));
}

WeightedGraph clique_chain(std::uint32_t count, std::uint32_t size, std::uint32_t last) {
  if (count == 0 || size < 1 || last < 1)
    throw std::invalid_argument("clique chain needs positive sizes");
  std::vector<Edge> edges;
  std::uint32_t base = 0;
  std::uint32_t prev_end = 0;
  for (std::uint32_t c = 0; c < count; ++c) {
    const std::uint32_t k = c + 1 == count ? last : size;
    for (std::uint32_t u = 0; u < k; ++u)
      for (std::uint32_t v = u + 1; v < k; ++v) edges.push_back({base + u, base + v, 1.0});
    if (c > 0) edges.push_back({prev_end, base, 1.0});
    prev_end = base + k - 1;
    base += k;
  }
  return WeightedGraph::build(base, std::move(edges));
}

WeightedGraph log_uniform_weights(WeightedGraph g, double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0 && hi >= lo)) throw std::invalid_argument("need 0 < lo <= hi");
  Rng rng(derive_seed(seed, "weights"));
  const double span = std::log(hi / lo);
  for (Edge& e : g.edges) e.w *= lo * std::exp(span * rng.next_double());
  return g;
}

void write_graph(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "# n " << g.n << "\n";
  out.precision(17);
  for (const Edge& e : g.edges) out << e.u << " " << e.v << " " << e.w << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

WeightedGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Edge> edges;
  std::uint32_t n = 0;
  bool n_pinned = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hdr(line.substr(first + 1));
      std::string key;
      if (hdr >> key && key == "n") {
        std::uint64_t declared = 0;
        if (hdr >> declared) {
          n = static_cast<std::uint32_t>(declared);
          n_pinned = true;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::uint32_t u = 0, v = 0;
    double w = 0.0;
    if (!(ls >> u >> v >> w))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'u v w'");
    edges.push_back({u, v, w});
    if (!n_pinned) n = std::max({n, u + 1, v + 1});
  }
  return WeightedGraph::build(n, std::move(edges));
}

void write_vector(const QueryVector& x, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.precision(17);
  for (const double v : x) out << v << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

QueryVector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  QueryVector x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      x.push_back(std::stod(line.substr(first)));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected a number");
    }
  }
  return x;
}

}  // namespace lsketch
