#pragma once

#include <cstdint>
#include <string>

#include "lsketch/graph.hpp"

namespace lsketch {

// Unit-weight generators; decorate with log_uniform_weights for spread.
// All are deterministic in (arguments, seed).

// Configuration-model d-regular simple graph. n*d must be even; throws if
// no simple pairing is found within the attempt budget.
WeightedGraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// Two cliques of size ceil(n/2) and floor(n/2) joined by one edge.
WeightedGraph barbell(std::uint32_t n);

// Chung-Lu graph with expected degrees proportional to (i+1)^{-2/3},
// capped at sqrt(n). May be disconnected.
WeightedGraph power_law(std::uint32_t n, std::uint64_t seed);

WeightedGraph complete(std::uint32_t n);
WeightedGraph path(std::uint32_t n);
WeightedGraph star(std::uint32_t n);  // center 0, leaves 1..n-1

// `count` cliques in a row (all of size `size` except the last, of size
// `last`), consecutive cliques joined by a single bridge edge.
WeightedGraph clique_chain(std::uint32_t count, std::uint32_t size, std::uint32_t last);

// Multiplies each edge weight by an independent log-uniform draw from
// [lo, hi].
WeightedGraph log_uniform_weights(WeightedGraph g, double lo, double hi, std::uint64_t seed);

// Text formats: graphs as "u v w" lines with '#' comments (a "# n <count>"
// comment pins the vertex count; otherwise max id + 1 is used); vectors as
// one value per line.
void write_graph(const WeightedGraph& g, const std::string& path);
WeightedGraph read_graph(const std::string& path);
void write_vector(const QueryVector& x, const std::string& path);
QueryVector read_vector(const std::string& path);

}  // namespace lsketch
