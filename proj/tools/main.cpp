// Command-line front end: generate graphs, build sketches, query them,
// report sizes, and run benchmark sweeps.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "lsketch/generate.hpp"
#include "lsketch/query.hpp"
#include "lsketch/rng.hpp"
#include "lsketch/serialize.hpp"

namespace {

using namespace lsketch;

struct BuildOpts {
  std::string graph, out;
  std::string algo = "basic";
  std::string sparsifier = "resistance";
  double eps = 0.3;
  double delta = 0.05;
  double c_alpha = 2.0, c_beta = 2.0, c_med = 8.0, c_sparsify = 1.5;
  double h_override = 0.0;
  bool has_h_override = false;
  std::uint64_t seed = 1;
  bool tight = false;
  bool serial = false;
};

SketchParams to_params(const BuildOpts& o) {
  SketchParams p;
  p.eps = o.tight ? o.eps / 3.0 : o.eps;
  p.delta = o.delta;
  p.c_alpha = o.c_alpha;
  p.c_beta = o.c_beta;
  p.c_med = o.c_med;
  p.c_sparsify = o.c_sparsify;
  if (o.has_h_override) p.h_override = o.h_override;
  p.validate();
  return p;
}

Algo to_algo(const std::string& s) {
  if (s == "basic") return Algo::basic;
  if (s == "improved") return Algo::improved;
  throw CLI::ValidationError("--algo", "must be 'basic' or 'improved'");
}

SparsifierMode to_mode(const std::string& s) {
  if (s == "resistance") return SparsifierMode::resistance;
  if (s == "none") return SparsifierMode::none;
  throw CLI::ValidationError("--sparsifier", "must be 'resistance' or 'none'");
}

void print_size(const SketchFile& file) {
  const SizeReport rep = size_report(file);
  const std::uint64_t r = std::max<std::uint64_t>(
      1, file.algo == Algo::basic ? file.basic_replicas.size() : file.improved_replicas.size());
  std::cout << "replicas              " << r << "\n"
            << "records (total)       " << rep.records() << "\n"
            << "records (per replica) " << rep.records() / r << "\n"
            << "  stored edges        " << rep.stored_edge_records << "\n"
            << "  sample draws        " << rep.sample_draws << "\n"
            << "  distinct samples    " << rep.sample_records_distinct << "\n"
            << "degree entries        " << rep.degree_entries << "\n"
            << "id bits per vertex    " << rep.id_bits_per_vertex << "\n"
            << "bits (total)          " << rep.total_bits() << "\n"
            << "  stored edge bits    " << rep.stored_edge_bits << "\n"
            << "  sample bits         " << rep.sample_bits << "\n"
            << "  degree table bits   " << rep.degree_table_bits << "\n";
}

int run_bench(const std::string& graph_path, const std::string& algos_csv,
              const std::string& eps_csv, int trials, std::uint64_t seed, double delta) {
  const WeightedGraph g = read_graph(graph_path);
  std::vector<std::string> algos;
  for (std::size_t a = 0, b = 0; a <= algos_csv.size(); a = b + 1) {
    b = algos_csv.find(',', a);
    if (b == std::string::npos) b = algos_csv.size();
    if (b > a) algos.push_back(algos_csv.substr(a, b - a));
  }
  std::vector<double> epss;
  for (std::size_t a = 0, b = 0; a <= eps_csv.size(); a = b + 1) {
    b = eps_csv.find(',', a);
    if (b == std::string::npos) b = eps_csv.size();
    if (b > a) epss.push_back(std::stod(eps_csv.substr(a, b - a)));
  }

  std::cout << "algo,eps,records,bits,mean_rel_err,p95_rel_err,build_ms,query_us\n";
  for (const std::string& algo : algos) {
    for (const double eps : epss) {
      SketchParams p;
      p.eps = eps;
      p.delta = delta;
      const auto t0 = std::chrono::steady_clock::now();
      const SketchFile file =
          build_sketch_file(g, p, to_algo(algo), derive_seed(seed, algo, std::uint64_t(eps * 1e6)));
      const auto t1 = std::chrono::steady_clock::now();
      const double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

      Rng rng(derive_seed(seed, "bench-queries"));
      std::vector<double> errs;
      QueryVector x(g.n, 0.0);
      double query_us = 0.0;
      for (int t = 0; t < trials; ++t) {
        for (double& c : x) c = 2.0 * rng.next_double() - 1.0;
        const auto q0 = std::chrono::steady_clock::now();
        const QueryReport rep = median_query(file, x, &g);
        const auto q1 = std::chrono::steady_clock::now();
        query_us += std::chrono::duration<double, std::micro>(q1 - q0).count();
        if (rep.relative_error) errs.push_back(*rep.relative_error);
      }
      std::sort(errs.begin(), errs.end());
      const double mean =
          errs.empty() ? 0.0 : std::accumulate(errs.begin(), errs.end(), 0.0) / errs.size();
      const double p95 = errs.empty() ? 0.0 : errs[static_cast<std::size_t>(0.95 * (errs.size() - 1))];
      const SizeReport rep = size_report(file);
      const std::uint64_t r = std::max<std::uint64_t>(1, p.replicas());
      std::cout << algo << "," << eps << "," << rep.records() / r << "," << rep.total_bits() / r
                << "," << mean << "," << p95 << "," << build_ms << ","
                << (trials > 0 ? query_us / trials : 0.0) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sketches answering quadratic-form queries on weighted graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list form");
  std::string gen_kind = "regular", gen_out, gen_weights = "unit";
  std::uint32_t gen_n = 100, gen_d = 6, gen_cliques = 7, gen_size = 71, gen_last = 74;
  double gen_wmin = 1.0, gen_wmax = 1.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "regular|barbell|powerlaw|complete|path|star|clique-chain")
      ->capture_default_str();
  gen->add_option("--n", gen_n, "vertex count")->capture_default_str();
  gen->add_option("--d", gen_d, "degree (regular)")->capture_default_str();
  gen->add_option("--cliques", gen_cliques, "clique count (clique-chain)")->capture_default_str();
  gen->add_option("--size", gen_size, "clique size (clique-chain)")->capture_default_str();
  gen->add_option("--last", gen_last, "last clique size (clique-chain)")->capture_default_str();
  gen->add_option("--weights", gen_weights, "unit|loguniform")->capture_default_str();
  gen->add_option("--wmin", gen_wmin, "log-uniform lower bound")->capture_default_str();
  gen->add_option("--wmax", gen_wmax, "log-uniform upper bound")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output path")->required();

  // build
  auto* build = app.add_subcommand("build", "Build a sketch file from a graph");
  BuildOpts bo;
  build->add_option("--graph", bo.graph, "input edge list")->required();
  build->add_option("--out", bo.out, "output sketch file")->required();
  build->add_option("--algo", bo.algo, "basic|improved")->capture_default_str();
  build->add_option("--eps", bo.eps, "target relative error")->capture_default_str();
  build->add_option("--delta", bo.delta, "failure probability")->capture_default_str();
  build->add_option("--seed", bo.seed, "master seed")->capture_default_str();
  build->add_option("--sparsifier", bo.sparsifier, "resistance|none")->capture_default_str();
  build->add_option("--c-alpha", bo.c_alpha, "basic budget constant")->capture_default_str();
  build->add_option("--c-beta", bo.c_beta, "improved budget constant")->capture_default_str();
  build->add_option("--c-med", bo.c_med, "replica constant")->capture_default_str();
  build->add_option("--c-sparsify", bo.c_sparsify, "sparsifier constant")->capture_default_str();
  auto* hopt = build->add_option("--h-override", bo.h_override,
                                 "splitter threshold override, in (0, 1]");
  build->add_flag("--tight", bo.tight, "build at eps/3 so end-to-end error meets eps");
  build->add_flag("--serial", bo.serial, "build replicas sequentially");

  // query
  auto* query = app.add_subcommand("query", "Evaluate x^T L x from a sketch file");
  std::string q_sketch, q_vector, q_graph;
  query->add_option("--sketch", q_sketch, "sketch file")->required();
  query->add_option("--vector", q_vector, "query vector (one value per line)")->required();
  query->add_option("--graph", q_graph, "optional oracle graph for error reporting");

  // size
  auto* size = app.add_subcommand("size", "Report sketch size accounting");
  std::string s_sketch;
  size->add_option("--sketch", s_sketch, "sketch file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep (algo, eps) and print CSV metrics");
  std::string b_graph, b_algos = "basic,improved", b_eps = "0.5,0.35,0.25,0.18";
  int b_trials = 20;
  std::uint64_t b_seed = 1;
  double b_delta = 0.05;
  bench->add_option("--graph", b_graph, "input edge list")->required();
  bench->add_option("--algos", b_algos, "comma-separated algorithms")->capture_default_str();
  bench->add_option("--eps-list", b_eps, "comma-separated eps values")->capture_default_str();
  bench->add_option("--trials", b_trials, "queries per configuration")->capture_default_str();
  bench->add_option("--seed", b_seed, "master seed")->capture_default_str();
  bench->add_option("--delta", b_delta, "failure probability")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      WeightedGraph g;
      if (gen_kind == "regular") {
        g = random_regular(gen_n, gen_d, gen_seed);
      } else if (gen_kind == "barbell") {
        g = barbell(gen_n);
      } else if (gen_kind == "powerlaw") {
        g = power_law(gen_n, gen_seed);
      } else if (gen_kind == "complete") {
        g = complete(gen_n);
      } else if (gen_kind == "path") {
        g = path(gen_n);
      } else if (gen_kind == "star") {
        g = star(gen_n);
      } else if (gen_kind == "clique-chain") {
        g = clique_chain(gen_cliques, gen_size, gen_last);
      } else {
        throw CLI::ValidationError("--kind", "unknown graph kind");
      }
      if (gen_weights == "loguniform") {
        g = log_uniform_weights(std::move(g), gen_wmin, gen_wmax, gen_seed);
      } else if (gen_weights != "unit") {
        throw CLI::ValidationError("--weights", "must be 'unit' or 'loguniform'");
      }
      write_graph(g, gen_out);
      std::cout << "wrote " << gen_out << ": n=" << g.n << " edges=" << g.edges.size() << "\n";
      return 0;
    }
    if (build->parsed()) {
      bo.has_h_override = hopt->count() > 0;
      const WeightedGraph g = read_graph(bo.graph);
      const SketchParams p = to_params(bo);
      const SketchFile file =
          build_sketch_file(g, p, to_algo(bo.algo), bo.seed, to_mode(bo.sparsifier), !bo.serial);
      write_sketch_file(file, bo.out);
      const SizeReport rep = size_report(file);
      std::cout << "wrote " << bo.out << ": replicas=" << p.replicas()
                << " records=" << rep.records() << " bits=" << rep.total_bits() << "\n";
      return 0;
    }
    if (query->parsed()) {
      const SketchFile file = read_sketch_file(q_sketch);
      const QueryVector x = read_vector(q_vector);
      WeightedGraph oracle;
      const bool have_oracle = !q_graph.empty();
      if (have_oracle) oracle = read_graph(q_graph);
      const QueryReport rep = median_query(file, x, have_oracle ? &oracle : nullptr);
      std::cout.precision(17);
      std::cout << "estimate " << rep.estimate << "\n";
      if (rep.exact) std::cout << "exact    " << *rep.exact << "\n";
      if (rep.relative_error) std::cout << "rel_err  " << *rep.relative_error << "\n";
      return 0;
    }
    if (size->parsed()) {
      print_size(read_sketch_file(s_sketch));
      return 0;
    }
    if (bench->parsed()) {
      return run_bench(b_graph, b_algos, b_eps, b_trials, b_seed, b_delta);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
