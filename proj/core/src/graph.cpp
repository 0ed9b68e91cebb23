#include "lsketch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lsketch {

bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.w == b.w;
}

WeightedGraph WeightedGraph::build(std::uint32_t n, std::vector<Edge> raw) {
  for (auto& e : raw) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
    if (!std::isfinite(e.w) || e.w <= 0.0) throw std::invalid_argument("edge weight must be finite and > 0");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(raw.begin(), raw.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  WeightedGraph g;
  g.n = n;
  g.edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (!g.edges.empty() && g.edges.back().u == e.u && g.edges.back().v == e.v) {
      g.edges.back().w += e.w;  // parallel edges coalesce
    } else {
      g.edges.push_back(e);
    }
  }
  return g;
}

double WeightedGraph::total_weight() const {
  double t = 0.0;
  for (const auto& e : edges) t += e.w;
  return t;
}

DegreeTable degrees(const WeightedGraph& g) {
  DegreeTable d;
  d.weighted.assign(g.n, 0.0);
  d.count.assign(g.n, 0);
  for (const auto& e : g.edges) {
    d.weighted[e.u] += e.w;
    d.weighted[e.v] += e.w;
    ++d.count[e.u];
    ++d.count[e.v];
  }
  return d;
}

double quadratic_form(const WeightedGraph& g, const QueryVector& x) {
  if (x.size() != g.n) throw std::invalid_argument("query vector length != vertex count");
  double q = 0.0;
  for (const auto& e : g.edges) {
    const double d = x[e.u] - x[e.v];
    q += e.w * d * d;
  }
  return q;
}

std::vector<std::uint32_t> vertex_support(const WeightedGraph& g) {
  std::vector<char> seen(g.n, 0);
  for (const auto& e : g.edges) seen[e.u] = seen[e.v] = 1;
  std::vector<std::uint32_t> s;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (seen[v]) s.push_back(v);
  }
  return s;
}

namespace {

// Adjacency over support vertices only; index = position in support list.
struct LocalAdjacency {
  std::vector<std::uint32_t> verts;          // sorted global ids
  std::vector<std::int64_t> local_of;        // global id -> local index or -1
  std::vector<std::vector<std::uint32_t>> nbr;

  explicit LocalAdjacency(const WeightedGraph& g) : verts(vertex_support(g)) {
    local_of.assign(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<std::int64_t>(i);
    nbr.resize(verts.size());
    for (const auto& e : g.edges) {
      nbr[static_cast<std::size_t>(local_of[e.u])].push_back(static_cast<std::uint32_t>(local_of[e.v]));
      nbr[static_cast<std::size_t>(local_of[e.v])].push_back(static_cast<std::uint32_t>(local_of[e.u]));
    }
  }
};

}  // namespace

std::vector<std::vector<std::uint32_t>> connected_components(const WeightedGraph& g) {
  LocalAdjacency adj(g);
  const std::size_t k = adj.verts.size();
  std::vector<char> visited(k, 0);
  std::vector<std::vector<std::uint32_t>> comps;
  std::vector<std::uint32_t> stack;
  for (std::size_t start = 0; start < k; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> comp;
    stack.push_back(static_cast<std::uint32_t>(start));
    visited[start] = 1;
    while (!stack.empty()) {
      const std::uint32_t at = stack.back();
      stack.pop_back();
      comp.push_back(adj.verts[at]);
      for (std::uint32_t nx : adj.nbr[at]) {
        if (!visited[nx]) {
          visited[nx] = 1;
          stack.push_back(nx);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<std::uint32_t>& vertices) {
  std::vector<char> in(g.n, 0);
  for (std::uint32_t v : vertices) in[v] = 1;
  WeightedGraph sub;
  sub.n = g.n;
  for (const auto& e : g.edges) {
    if (in[e.u] && in[e.v]) sub.edges.push_back(e);
  }
  return sub;
}

double volume(const DegreeTable& deg, const std::vector<std::uint32_t>& vertices) {
  double vol = 0.0;
  for (std::uint32_t v : vertices) vol += deg.weighted[v];
  return vol;
}

double conductance(const WeightedGraph& g, const std::vector<std::uint32_t>& side) {
  std::vector<char> in(g.n, 0);
  for (std::uint32_t v : side) in[v] = 1;
  double cut = 0.0, vol_s = 0.0, vol_rest = 0.0;
  for (const auto& e : g.edges) {
    if (in[e.u] != in[e.v]) cut += e.w;
    if (in[e.u]) vol_s += e.w; else vol_rest += e.w;
    if (in[e.v]) vol_s += e.w; else vol_rest += e.w;
  }
  const double denom = std::min(vol_s, vol_rest);
  if (!(denom > 0.0)) throw std::invalid_argument("conductance: side or complement has zero volume");
  return cut / denom;
}

std::vector<WeightClass> weight_class_partition(const WeightedGraph& g) {
  std::vector<WeightClass> classes;
  if (g.edges.empty()) return classes;
  double w_min = g.edges.front().w;
  for (const auto& e : g.edges) w_min = std::min(w_min, e.w);
  // frexp is exact: ratio in [2^(i-1), 2^i) <=> exponent i.
  auto class_of = [w_min](double w) {
    int e = 0;
    std::frexp(w / w_min, &e);
    return e;
  };
  int max_i = 1;
  for (const auto& e : g.edges) max_i = std::max(max_i, class_of(e.w));
  std::vector<std::vector<Edge>> buckets(static_cast<std::size_t>(max_i) + 1);
  for (const auto& e : g.edges) buckets[static_cast<std::size_t>(class_of(e.w))].push_back(e);
  for (int i = 1; i <= max_i; ++i) {
    auto& b = buckets[static_cast<std::size_t>(i)];
    if (b.empty()) continue;
    WeightClass wc;
    wc.index = i;
    wc.gamma = std::ldexp(w_min, i - 1);
    wc.graph.n = g.n;
    wc.graph.edges = std::move(b);
    classes.push_back(std::move(wc));
  }
  return classes;
}

}  // namespace lsketch
