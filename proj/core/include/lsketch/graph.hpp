#pragma once

#include <cstdint>
#include <vector>

namespace lsketch {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double w = 0.0;
};

bool operator==(const Edge& a, const Edge& b);

// Undirected weighted graph over the dense id space [0, n).
// Canonical form: u < v per edge, edges sorted lexicographically, parallel
// edges coalesced by weight sum, all weights finite and > 0, no self-loops.
// Subgraphs keep the parent id space so query vectors indexed by global id
// work unchanged at every level of a decomposition.
struct WeightedGraph {
  std::uint32_t n = 0;
  std::vector<Edge> edges;

  // Normalizes raw edges into canonical form; throws std::invalid_argument
  // on self-loops, out-of-range ids, or non-positive/non-finite weights.
  static WeightedGraph build(std::uint32_t n, std::vector<Edge> raw);

  double total_weight() const;
};

struct DegreeTable {
  std::vector<double> weighted;      // delta_u = sum of incident weights
  std::vector<std::uint32_t> count;  // unweighted incident edge count
};

using QueryVector = std::vector<double>;

// One side of a cut. side holds S sorted ascending with vol(S) <= vol(V\S);
// conductance = w(S, V\S) / min(vol S, vol V\S).
struct Cut {
  std::vector<std::uint32_t> side;
  double conductance = 0.0;
  std::vector<Edge> crossing;
};

DegreeTable degrees(const WeightedGraph& g);

// x^T L(g) x = sum_e w_e (x_u - x_v)^2; requires x.size() == g.n.
// Summation order is fixed by the canonical edge order, so results are
// reproducible bit-for-bit. Exactly 0 for constant x (every term is 0).
double quadratic_form(const WeightedGraph& g, const QueryVector& x);

// Vertices with at least one incident edge, ascending.
std::vector<std::uint32_t> vertex_support(const WeightedGraph& g);

// Connected components of the edge-induced subgraph (isolated ids omitted),
// each sorted ascending, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> connected_components(const WeightedGraph& g);

// Edges of g with both endpoints inside `vertices` (which must be sorted).
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<std::uint32_t>& vertices);

double volume(const DegreeTable& deg, const std::vector<std::uint32_t>& vertices);

// Conductance of S within g; requires 0 < vol(S) and 0 < vol(V\S).
double conductance(const WeightedGraph& g, const std::vector<std::uint32_t>& side);

// Dyadic weight class: every member weight lies in [gamma, 2*gamma).
struct WeightClass {
  int index = 0;  // class i covers [2^(i-1)*w_min, 2^i*w_min), i >= 1
  double gamma = 0.0;
  WeightedGraph graph;
};

// Splits edges into dyadic classes anchored at w_min. Only nonempty classes
// are returned, ascending by index; class count <= ceil(log2(wmax/wmin)) + 1.
// Each returned subgraph keeps the global vertex id space.
std::vector<WeightClass> weight_class_partition(const WeightedGraph& g);

}  // namespace lsketch
