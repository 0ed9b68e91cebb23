#include <doctest.h>

#include <stdexcept>

#include "lsketch/graph.hpp"

using namespace lsketch;

TEST_CASE("build canonicalizes, sorts and coalesces") {
  auto g = WeightedGraph::build(4, {{2, 1, 0.5}, {0, 1, 1.0}, {1, 2, 0.25}});
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0] == Edge{0, 1, 1.0});
  CHECK(g.edges[1] == Edge{1, 2, 0.75});
  CHECK(g.total_weight() == doctest::Approx(1.75));
}

TEST_CASE("build rejects bad edges") {
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, -1.0}}), std::invalid_argument);
}

TEST_CASE("quadratic form on a 3-path") {
  auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK(quadratic_form(g, {0.0, 1.0, 2.0}) == doctest::Approx(2.0));
  CHECK(quadratic_form(g, {5.0, 5.0, 5.0}) == 0.0);  // exact, not approximate
  CHECK_THROWS_AS(quadratic_form(g, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("degrees and support skip isolated vertices") {
  auto g = WeightedGraph::build(5, {{1, 3, 2.0}, {3, 4, 1.0}});
  const auto d = degrees(g);
  CHECK(d.weighted[3] == doctest::Approx(3.0));
  CHECK(d.count[3] == 2);
  CHECK(d.count[0] == 0);
  CHECK(vertex_support(g) == std::vector<std::uint32_t>{1, 3, 4});
}

TEST_CASE("connected components are edge-induced and ordered") {
  auto g = WeightedGraph::build(7, {{0, 1, 1.0}, {1, 2, 1.0}, {4, 5, 1.0}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(comps[1] == std::vector<std::uint32_t>{4, 5});
}

TEST_CASE("induced subgraph keeps the global index space") {
  auto g = WeightedGraph::build(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  const auto sub = induced_subgraph(g, {1, 2, 3});
  CHECK(sub.n == 5);
  REQUIRE(sub.edges.size() == 2);
  CHECK(sub.edges[0] == Edge{1, 2, 1.0});
}

TEST_CASE("conductance of the bridge cut") {
  // Two triangles joined by a bridge: cut {0,1,2} has weight 1, volumes 7/7.
  auto g = WeightedGraph::build(6, {{0, 1, 1.0},
                                    {0, 2, 1.0},
                                    {1, 2, 1.0},
                                    {3, 4, 1.0},
                                    {3, 5, 1.0},
                                    {4, 5, 1.0},
                                    {2, 3, 1.0}});
  CHECK(conductance(g, {0, 1, 2}) == doctest::Approx(1.0 / 7.0));
  const auto d = degrees(g);
  CHECK(volume(d, {0, 1, 2}) == doctest::Approx(7.0));
}

TEST_CASE("weight classes are dyadic above the minimum") {
  auto g = WeightedGraph::build(4, {{0, 1, 1.0}, {1, 2, 3.0}, {2, 3, 4.0}});
  const auto classes = weight_class_partition(g);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].index == 1);
  CHECK(classes[0].gamma == doctest::Approx(1.0));
  CHECK(classes[0].graph.edges.size() == 1);
  CHECK(classes[1].index == 2);  // [2, 4): holds the weight-3 edge
  CHECK(classes[1].graph.edges[0].w == doctest::Approx(3.0));
  CHECK(classes[2].index == 3);  // [4, 8)
  CHECK(classes[2].graph.edges[0].w == doctest::Approx(4.0));
}
