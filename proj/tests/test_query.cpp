#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lsketch/generate.hpp"
#include "lsketch/query.hpp"
#include "lsketch/rng.hpp"

using namespace lsketch;

namespace {

// A hand-built file whose replicas store single edges of chosen weights, so
// every replica's estimate at x = (1, 0) is just its weight.
SketchFile crafted(std::vector<double> weights) {
  SketchFile file;
  file.algo = Algo::basic;
  file.n = 2;
  for (const double w : weights) {
    BasicSketch sk;
    sk.n = 2;
    BasicClassSketch cls;
    cls.class_index = 1;
    cls.gamma = w;
    cls.q = WeightedGraph::build(2, {{0, 1, w}});
    sk.classes.push_back(std::move(cls));
    file.basic_replicas.push_back(std::move(sk));
  }
  return file;
}

}  // namespace

TEST_CASE("the median picks the middle replica") {
  const auto file = crafted({3.0, 100.0, 3.1});
  const auto rep = median_query(file, {1.0, 0.0});
  CHECK(rep.estimate == doctest::Approx(3.1));
  CHECK(rep.replicas == std::vector<double>{3.0, 100.0, 3.1});
  CHECK(!rep.exact.has_value());
}

TEST_CASE("an oracle fills in the exact value and relative error") {
  const auto file = crafted({3.0, 100.0, 3.1});
  const auto g = WeightedGraph::build(2, {{0, 1, 4.0}});
  const auto rep = median_query(file, {1.0, 0.0}, &g);
  REQUIRE(rep.exact.has_value());
  CHECK(*rep.exact == doctest::Approx(4.0));
  REQUIRE(rep.relative_error.has_value());
  CHECK(*rep.relative_error == doctest::Approx(0.9 / 4.0));
}

TEST_CASE("a zero oracle value leaves the relative error unset") {
  const auto file = crafted({3.0, 100.0, 3.1});
  const auto g = WeightedGraph::build(2, {{0, 1, 4.0}});
  const auto rep = median_query(file, {2.0, 2.0}, &g);
  REQUIRE(rep.exact.has_value());
  CHECK(*rep.exact == doctest::Approx(0.0));
  CHECK(!rep.relative_error.has_value());
}

TEST_CASE("degenerate files and vectors are rejected") {
  CHECK_THROWS_AS(median_query(crafted({1.0, 2.0}), {1.0, 0.0}),
                  std::invalid_argument);  // even count
  CHECK_THROWS_AS(median_query(crafted({}), {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(median_query(crafted({1.0, 2.0, 3.0}), {1.0, 0.0, 0.0}),
                  std::invalid_argument);  // wrong dimension
}

TEST_CASE("median queries land within eps with margin on real sketches") {
  // 200 random queries against barbell(34) at eps = 0.3, 25 replicas; the
  // clique degrees (16) exceed alpha = 15, so the degree-split sketch
  // genuinely samples. The guarantee is >= 95% within eps; demand >= 90%
  // to keep slack, and check both algorithms.
  const auto g = barbell(34);
  SketchParams p;
  p.eps = 0.3;
  for (const Algo algo : {Algo::basic, Algo::improved}) {
    const auto file = build_sketch_file(g, p, algo, 13);
    Rng rng(derive_seed(3, "queries"));
    int ok = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
      QueryVector x(34);
      for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
      const auto rep = median_query(file, x, &g);
      if (!rep.relative_error.has_value()) continue;
      ++total;
      if (*rep.relative_error <= 0.3) ++ok;
    }
    CHECK(total >= 190);
    CHECK(ok >= (total * 9) / 10);
  }
}

TEST_CASE("replica estimates vary but the median is stable across seeds") {
  // barbell(34): clique degrees 16 > alpha = 15, so the replicas really
  // sample (a smaller barbell is all light and exact at this accuracy).
  const auto g = barbell(34);
  SketchParams p;
  p.eps = 0.3;
  const auto f1 = build_sketch_file(g, p, Algo::basic, 21);
  const auto f2 = build_sketch_file(g, p, Algo::basic, 22);
  QueryVector x(34);
  Rng rng(derive_seed(9, "probe"));
  for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
  const double exact = quadratic_form(g, x);
  const auto r1 = median_query(f1, x);
  const auto r2 = median_query(f2, x);
  CHECK(r1.estimate != r2.estimate);  // different seeds, different draws
  CHECK(std::abs(r1.estimate - exact) <= 0.3 * exact);
  CHECK(std::abs(r2.estimate - exact) <= 0.3 * exact);
}
