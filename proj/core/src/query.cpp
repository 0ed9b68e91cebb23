#include "lsketch/query.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "lsketch/rng.hpp"

namespace lsketch {

SketchFile build_sketch_file(const WeightedGraph& g, const SketchParams& params, Algo algo,
                             std::uint64_t seed, SparsifierMode mode, bool parallel) {
  params.validate();
  SketchFile file;
  file.params = params;
  file.algo = algo;
  file.master_seed = seed;
  file.n = g.n;
  const std::uint32_t r = params.replicas();

  if (algo == Algo::basic) {
    file.basic_replicas.resize(r);
    auto one = [&](std::uint32_t i) {
      file.basic_replicas[i] =
          build_basic(g, params, derive_seed(seed, "replica", i), mode).sketch;
    };
    if (parallel) {
      std::vector<std::future<void>> jobs;
      jobs.reserve(r);
      for (std::uint32_t i = 0; i < r; ++i)
        jobs.push_back(std::async(std::launch::async, one, i));
      for (auto& j : jobs) j.get();
    } else {
      for (std::uint32_t i = 0; i < r; ++i) one(i);
    }
  } else {
    file.improved_replicas.resize(r);
    auto one = [&](std::uint32_t i) {
      file.improved_replicas[i] =
          build_improved(g, params, derive_seed(seed, "replica", i), mode).sketch;
    };
    if (parallel) {
      std::vector<std::future<void>> jobs;
      jobs.reserve(r);
      for (std::uint32_t i = 0; i < r; ++i)
        jobs.push_back(std::async(std::launch::async, one, i));
      for (auto& j : jobs) j.get();
    } else {
      for (std::uint32_t i = 0; i < r; ++i) one(i);
    }
  }
  return file;
}

QueryReport median_query(const SketchFile& file, const QueryVector& x,
                         const WeightedGraph* oracle) {
  if (x.size() != file.n) throw std::invalid_argument("query vector has the wrong dimension");
  QueryReport rep;
  if (file.algo == Algo::basic) {
    rep.replicas.reserve(file.basic_replicas.size());
    for (const BasicSketch& sk : file.basic_replicas) rep.replicas.push_back(estimate_basic(sk, x));
  } else {
    rep.replicas.reserve(file.improved_replicas.size());
    for (const ImprovedSketch& sk : file.improved_replicas)
      rep.replicas.push_back(estimate_improved(sk, x));
  }
  if (rep.replicas.empty()) throw std::invalid_argument("sketch has no replicas");
  if (rep.replicas.size() % 2 == 0)
    throw std::invalid_argument("replica count must be odd for a well-defined median");
  std::vector<double> sorted = rep.replicas;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  rep.estimate = sorted[sorted.size() / 2];

  if (oracle) {
    const double exact = quadratic_form(*oracle, x);
    rep.exact = exact;
    if (exact != 0.0) rep.relative_error = std::abs(rep.estimate - exact) / std::abs(exact);
  }
  return rep;
}

}  // namespace lsketch
