#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lsketch/generate.hpp"
#include "lsketch/spectral.hpp"

using namespace lsketch;

TEST_CASE("single edge: lambda1 is 2 regardless of weight") {
  auto g = WeightedGraph::build(2, {{0, 1, 5.0}});
  const auto cert = lambda1(g);
  CHECK(cert.lambda1 == doctest::Approx(2.0));
  CHECK(cert.method == SpectralCertificate::Method::dense_eig);
}

TEST_CASE("complete graphs: lambda1 is m/(m-1)") {
  CHECK(lambda1(complete(5)).lambda1 == doctest::Approx(1.25));
  CHECK(lambda1(complete(20)).lambda1 == doctest::Approx(20.0 / 19.0));
}

TEST_CASE("two triangles with a bridge") {
  auto g = WeightedGraph::build(6, {{0, 1, 1.0},
                                    {0, 2, 1.0},
                                    {1, 2, 1.0},
                                    {3, 4, 1.0},
                                    {3, 5, 1.0},
                                    {4, 5, 1.0},
                                    {2, 3, 1.0}});
  CHECK(lambda1(g).lambda1 == doctest::Approx(0.2046663545568726));
}

TEST_CASE("eigenvector scaling survives weight scaling") {
  // Normalized spectra are invariant under uniform weight scaling.
  auto g1 = WeightedGraph::build(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  auto g2 = WeightedGraph::build(4, {{0, 1, 7.0}, {1, 2, 7.0}, {2, 3, 7.0}});
  CHECK(lambda1(g1).lambda1 == doctest::Approx(0.5));
  CHECK(lambda1(g2).lambda1 == doctest::Approx(0.5));
}

TEST_CASE("disconnected or trivial support is rejected") {
  auto g = WeightedGraph::build(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK_THROWS_AS(lambda1(g), std::invalid_argument);
  WeightedGraph empty;
  empty.n = 3;
  CHECK_THROWS_AS(lambda1(empty), std::invalid_argument);
}

TEST_CASE("power iteration agrees with the dense path on a large expander") {
  // 520 vertices forces the power branch; solve densely via a 500-vertex
  // subproblem is not comparable, so instead check against the same graph's
  // Rayleigh upper bound and a sweep lower bound.
  const auto g = random_regular(520, 6, 11);
  const auto cert = lambda1(g);
  CHECK(cert.method == SpectralCertificate::Method::power_iteration);
  // d-regular random graphs have lambda1 near 1 - 2*sqrt(d-1)/d; allow slack.
  CHECK(cert.lambda1 > 0.1);
  CHECK(cert.lambda1 < 0.6);
  // The sweep bound phi <= sqrt(2 * lambda-estimate) must hold for the
  // vector actually returned (checked internally; also assert here).
  const Cut cut = sweep_cut(g, cert.vec);
  CHECK(cut.conductance <= std::sqrt(2.0 * cert.lambda1) + 1e-6);
}

TEST_CASE("sweep on two triangles with a bridge finds the bridge") {
  auto g = WeightedGraph::build(6, {{0, 1, 1.0},
                                    {0, 2, 1.0},
                                    {1, 2, 1.0},
                                    {3, 4, 1.0},
                                    {3, 5, 1.0},
                                    {4, 5, 1.0},
                                    {2, 3, 1.0}});
  const auto cert = lambda1(g);
  const Cut cut = sweep_cut(g, cert.vec);
  CHECK(cut.conductance == doctest::Approx(1.0 / 7.0));
  REQUIRE(cut.crossing.size() == 1);
  CHECK(cut.crossing[0] == Edge{2, 3, 1.0});
  CHECK(cut.side.size() == 3);
}

TEST_CASE("sweep on a path cuts an end or the middle per the vector") {
  const auto g = path(4);
  const auto cert = lambda1(g);
  const Cut cut = sweep_cut(g, cert.vec);
  // The Fiedler order on a path is monotone, so the best prefix is {0,1}.
  CHECK(cut.conductance == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("sweep rejects constant vectors") {
  const auto g = path(4);
  CHECK_THROWS_AS(sweep_cut(g, std::vector<double>(4, 1.0)), std::invalid_argument);
}

TEST_CASE("sweep respects ties by vertex id and returns the smaller side") {
  // Every balanced cut of K4 has conductance 4/6; singletons have 1. The
  // sweep must find the balanced optimum whatever the eigenvector's ties.
  const auto g = complete(4);
  const auto cert = lambda1(g);
  const Cut cut = sweep_cut(g, cert.vec);
  CHECK(cut.side.size() == 2);
  CHECK(cut.conductance == doctest::Approx(2.0 / 3.0));
}
