#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lsketch/generate.hpp"
#include "lsketch/preprocess.hpp"
#include "lsketch/rng.hpp"

using namespace lsketch;

namespace {

WeightedGraph two_triangles_bridge() {
  return WeightedGraph::build(6, {{0, 1, 1.0},
                                  {0, 2, 1.0},
                                  {1, 2, 1.0},
                                  {3, 4, 1.0},
                                  {3, 5, 1.0},
                                  {4, 5, 1.0},
                                  {2, 3, 1.0}});
}

double removed_budget(const WeightedGraph& g, double h) {
  const double m = static_cast<double>(g.edges.size());
  return 8.0 * h * m * std::log2(std::max(2.0, m));
}

}  // namespace

TEST_CASE("an expander certifies whole with nothing removed") {
  // lambda1(K20) = 20/19 >= h^2/2 for any h <= 1.
  PreprocessStats stats;
  const auto res = preprocess(complete(20), 0.9, &stats);
  REQUIRE(res.certified.size() == 1);
  CHECK(res.certified[0].edges.size() == 190);
  CHECK(res.q_edges.edges.empty());
  CHECK(stats.splits == 0);
  CHECK(stats.certified_lambda == 1);
  CHECK(stats.max_depth == 0);
}

TEST_CASE("a single edge certifies at any threshold") {
  const auto g = WeightedGraph::build(2, {{0, 1, 1.5}});
  const auto res = preprocess(g, 0.5);
  REQUIRE(res.certified.size() == 1);
  CHECK(res.q_edges.edges.empty());
}

TEST_CASE("the bridge between two triangles is removed at a high threshold") {
  // lambda1 = 0.2047 < h^2/2 = 0.245 and the sweep finds the bridge with
  // conductance 1/7 < 0.7, so exactly that edge lands in the removed set.
  PreprocessStats stats;
  const auto res = preprocess(two_triangles_bridge(), 0.7, &stats);
  REQUIRE(res.q_edges.edges.size() == 1);
  CHECK(res.q_edges.edges[0] == Edge{2, 3, 1.0});
  REQUIRE(res.certified.size() == 2);
  CHECK(res.certified[0].edges.size() == 3);
  CHECK(res.certified[1].edges.size() == 3);
  CHECK(stats.splits == 1);
  CHECK(stats.max_depth >= 1);
  CHECK(removed_budget(two_triangles_bridge(), 0.7) >= 1.0);
}

TEST_CASE("the same graph survives intact at a low threshold") {
  // conductance of the bridge cut is 1/7 > 0.1, so the sweep certifies.
  PreprocessStats stats;
  const auto res = preprocess(two_triangles_bridge(), 0.1, &stats);
  REQUIRE(res.certified.size() == 1);
  CHECK(res.q_edges.edges.empty());
  CHECK(stats.certified_lambda + stats.certified_sweep == 1);
}

TEST_CASE("a barbell splits into its cliques") {
  PreprocessStats stats;
  const auto res = preprocess(barbell(60), 0.3, &stats);
  CHECK(stats.splits >= 1);
  CHECK(!res.q_edges.edges.empty());
  // Every certified piece must carry every input edge not in the removed set.
  std::size_t kept = 0;
  for (const auto& p : res.certified) kept += p.edges.size();
  CHECK(kept + res.q_edges.edges.size() == barbell(60).edges.size());
  CHECK(static_cast<double>(res.q_edges.edges.size()) <=
        removed_budget(barbell(60), 0.3));
}

TEST_CASE("disconnected inputs are handled component by component") {
  // Two K5s with no connection: both certify, nothing removed.
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) {
      e.push_back({i, j, 1.0});
      e.push_back({i + 5, j + 5, 1.0});
    }
  const auto res = preprocess(WeightedGraph::build(10, e), 0.8);
  CHECK(res.certified.size() == 2);
  CHECK(res.q_edges.edges.empty());
}

TEST_CASE("inputs outside the contract are rejected") {
  const auto g = WeightedGraph::build(2, {{0, 1, 1.0}});
  CHECK_THROWS_AS(preprocess(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(preprocess(g, 1.5), std::invalid_argument);
  // Weight spread beyond a factor of two.
  const auto bad = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 2.5}});
  CHECK_THROWS_AS(preprocess(bad, 0.5), std::invalid_argument);
  // Exactly a factor of two is allowed.
  const auto edge2 = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  preprocess(edge2, 0.5);
}

TEST_CASE("removed-set budget holds on random graphs") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto g = power_law(80, seed);
    if (g.edges.empty()) continue;
    for (double h : {0.05, 0.1, 0.2}) {
      PreprocessStats stats;
      const auto res = preprocess(g, h, &stats);
      CHECK(static_cast<double>(res.q_edges.edges.size()) <=
            removed_budget(g, h) + 1e-9);
      // Certified pieces partition the kept edges.
      std::size_t kept = 0;
      for (const auto& p : res.certified) kept += p.edges.size();
      CHECK(kept + res.q_edges.edges.size() == g.edges.size());
    }
  }
}
