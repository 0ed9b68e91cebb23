#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lsketch/generate.hpp"
#include "lsketch/rng.hpp"
#include "lsketch/serialize.hpp"
#include "lsketch/sketch_basic.hpp"
#include "lsketch/sketch_s2.hpp"

using namespace lsketch;

TEST_CASE("a sparse cycle is stored exactly and answers exactly") {
  SketchParams p;
  p.eps = 0.5;
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 30; ++i) e.push_back({i, (i + 1) % 30, 1.0});
  const auto g = WeightedGraph::build(30, e);
  const auto build = build_improved(g, p, 3);

  CHECK(build.sketch.s2_strata.empty());
  CHECK(build.sketch.stored_strata.size() == 1);
  CHECK(build.reference.edges == g.edges);  // pass-through end to end

  Rng rng(derive_seed(1, "probe"));
  for (int t = 0; t < 50; ++t) {
    QueryVector x(30);
    for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
    CHECK(estimate_improved(build.sketch, x) ==
          doctest::Approx(quadratic_form(g, x)).epsilon(1e-12));
  }
}

TEST_CASE("a single edge is kept whole") {
  SketchParams p;
  p.eps = 0.3;
  const auto g = WeightedGraph::build(2, {{0, 1, 2.5}});
  const auto build = build_improved(g, p, 9);
  REQUIRE(build.sketch.stored_strata.size() == 1);
  CHECK(build.sketch.stored_strata[0].kind == Stratum::Kind::whole);
  const QueryVector x{1.0, -1.0};
  CHECK(estimate_improved(build.sketch, x) == doctest::Approx(10.0));
}

TEST_CASE("query dimension is enforced") {
  SketchParams p;
  const auto build = build_improved(path(5), p, 1);
  CHECK_THROWS_AS(estimate_improved(build.sketch, QueryVector(4, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("record counts beat the degree-split sketch on a clique chain") {
  // 300 vertices, 11103 edges. At eps = 0.2 the in-arc sampler stores the 3
  // bridges and draws 27 per head (8103 records); the degree-split sketch
  // stores the bridges and draws 30 per vertex (9003 records).
  const auto g = clique_chain(4, 75, 75);
  SketchParams p;
  p.eps = 0.2;

  const auto imp = build_improved(g, p, 41);
  const auto bas = build_basic(g, p, 41);
  const auto ri = size_report(imp.sketch);
  const auto rb = size_report(bas.sketch);
  CHECK(ri.stored_edge_records == 3);
  CHECK(ri.sample_draws == 27 * 300);
  CHECK(ri.records() == 8103);
  CHECK(rb.stored_edge_records == 3);
  CHECK(rb.sample_draws == 30 * 300);
  CHECK(rb.records() == 9003);
  CHECK(ri.records() < rb.records());

  // Unbiased w.r.t. the reference; here everything passed through, so the
  // reference is the input and a single estimate lands within a few
  // standard deviations.
  CHECK(imp.reference.edges == g.edges);
  QueryVector x(300);
  Rng rng(derive_seed(4, "probe"));
  for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
  const double exact = quadratic_form(g, x);
  CHECK(std::abs(estimate_improved(imp.sketch, x) - exact) < 0.5 * exact);
}

TEST_CASE("a finer accuracy stores the chain outright and still wins") {
  const auto g = clique_chain(4, 75, 75);
  SketchParams p;
  p.eps = 0.15;
  const auto imp = build_improved(g, p, 41);
  const auto bas = build_basic(g, p, 41);
  const auto ri = size_report(imp.sketch);
  const auto rb = size_report(bas.sketch);
  CHECK(ri.records() == 11103);  // whole graph in one low stratum
  CHECK(ri.sample_draws == 0);
  CHECK(rb.records() == 14403);  // 48 draws * 300 + 3 bridges
  CHECK(ri.records() < rb.records());

  // Exact answers when nothing was sampled.
  QueryVector x(300);
  Rng rng(derive_seed(6, "probe"));
  for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
  CHECK(estimate_improved(imp.sketch, x) ==
        doctest::Approx(quadratic_form(g, x)).epsilon(1e-12));
}

TEST_CASE("builds are deterministic in the seed") {
  const auto g = barbell(30);
  SketchParams p;
  p.eps = 0.3;
  const auto a = build_improved(g, p, 77);
  const auto b = build_improved(g, p, 77);
  QueryVector x(30);
  Rng rng(derive_seed(8, "probe"));
  for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
  CHECK(estimate_improved(a.sketch, x) == estimate_improved(b.sketch, x));
}
