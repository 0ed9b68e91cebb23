#include "lsketch/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "check.hpp"
#include "lsketch/rng.hpp"

namespace lsketch {
namespace {

constexpr std::uint32_t kDenseLimit = 500;

struct LocalGraph {
  std::vector<std::uint32_t> verts;               // sorted global ids
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> deg;
};

LocalGraph localize(const WeightedGraph& g) {
  LocalGraph lg;
  lg.verts = vertex_support(g);
  if (lg.verts.empty()) throw std::invalid_argument("graph has no edges");
  lg.local.reserve(lg.verts.size() * 2);
  for (std::uint32_t i = 0; i < lg.verts.size(); ++i) lg.local.emplace(lg.verts[i], i);
  lg.adj.resize(lg.verts.size());
  lg.deg.assign(lg.verts.size(), 0.0);
  for (const Edge& e : g.edges) {
    const std::uint32_t a = lg.local.at(e.u), b = lg.local.at(e.v);
    lg.adj[a].emplace_back(b, e.w);
    lg.adj[b].emplace_back(a, e.w);
    lg.deg[a] += e.w;
    lg.deg[b] += e.w;
  }
  return lg;
}

void require_connected(const LocalGraph& lg) {
  std::vector<char> seen(lg.verts.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : lg.adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != lg.verts.size())
    throw std::invalid_argument("support is disconnected; split into components first");
}

SpectralCertificate dense_lambda1(const LocalGraph& lg) {
  const std::uint32_t k = static_cast<std::uint32_t>(lg.verts.size());
  Eigen::MatrixXd nl = Eigen::MatrixXd::Zero(k, k);
  for (std::uint32_t i = 0; i < k; ++i) nl(i, i) = 1.0;
  for (std::uint32_t a = 0; a < k; ++a)
    for (const auto& [b, w] : lg.adj[a]) nl(a, b) -= w / std::sqrt(lg.deg[a] * lg.deg[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(nl);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  SpectralCertificate cert;
  cert.lambda1 = solver.eigenvalues()(1);
  cert.method = SpectralCertificate::Method::dense_eig;
  const Eigen::VectorXd z = solver.eigenvectors().col(1);
  cert.vec.assign(lg.verts.empty() ? 0 : lg.verts.back() + 1, 0.0);
  for (std::uint32_t i = 0; i < k; ++i) cert.vec[lg.verts[i]] = z(i) / std::sqrt(lg.deg[i]);
  return cert;
}

// Power iteration on M = 2I - NL with the top eigenvector D^{1/2}*ones
// projected out exactly each step. The Rayleigh quotient of any iterate
// orthogonal to that eigenvector upper bounds 2 - lambda1.
SpectralCertificate power_lambda1(const LocalGraph& lg) {
  const std::uint32_t k = static_cast<std::uint32_t>(lg.verts.size());
  std::vector<double> q0(k);
  double q0norm = 0.0;
  for (std::uint32_t i = 0; i < k; ++i) {
    q0[i] = std::sqrt(lg.deg[i]);
    q0norm += lg.deg[i];
  }
  q0norm = std::sqrt(q0norm);
  for (double& c : q0) c /= q0norm;

  // Deterministic generic start; mixed bits avoid accidental orthogonality
  // to the target eigenvector.
  std::vector<double> v(k);
  for (std::uint32_t i = 0; i < k; ++i)
    v[i] = static_cast<double>(mix64(i + 1) >> 11) * 0x1.0p-53 - 0.5;

  auto project_normalize = [&](std::vector<double>& x) {
    double dot = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) dot += x[i] * q0[i];
    double norm = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) {
      x[i] -= dot * q0[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-300) throw std::runtime_error("power iteration collapsed");
    for (double& c : x) c /= norm;
  };

  auto matvec = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (std::uint32_t a = 0; a < k; ++a) {
      double acc = x[a];
      for (const auto& [b, w] : lg.adj[a]) acc += w / std::sqrt(lg.deg[a] * lg.deg[b]) * x[b];
      out[a] = acc;
    }
  };

  project_normalize(v);
  std::vector<double> mv(k);
  double mu_prev = -1.0;
  const std::uint32_t max_iter = 20000;
  for (std::uint32_t it = 0; it < max_iter; ++it) {
    matvec(v, mv);
    double mu = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) mu += v[i] * mv[i];
    if (it > 0 && std::abs(mu - mu_prev) <= 1e-4 * std::max(1.0, std::abs(mu))) {
      v = mv;
      project_normalize(v);
      break;
    }
    mu_prev = mu;
    v = mv;
    project_normalize(v);
  }

  matvec(v, mv);
  double mu = 0.0;
  for (std::uint32_t i = 0; i < k; ++i) mu += v[i] * mv[i];
  SpectralCertificate cert;
  cert.lambda1 = 2.0 - mu;
  cert.method = SpectralCertificate::Method::power_iteration;
  cert.vec.assign(lg.verts.back() + 1, 0.0);
  for (std::uint32_t i = 0; i < k; ++i) cert.vec[lg.verts[i]] = v[i] / std::sqrt(lg.deg[i]);
  return cert;
}

}  // namespace

SpectralCertificate lambda1(const WeightedGraph& g) {
  const LocalGraph lg = localize(g);
  if (lg.verts.size() < 2) throw std::invalid_argument("support must have at least 2 vertices");
  require_connected(lg);
  SpectralCertificate cert =
      lg.verts.size() <= kDenseLimit ? dense_lambda1(lg) : power_lambda1(lg);
  if (cert.vec.size() < g.n) cert.vec.resize(g.n, 0.0);
  return cert;
}

Cut sweep_cut(const WeightedGraph& g, const std::vector<double>& y) {
  if (y.size() < g.n) throw std::invalid_argument("sweep vector too short");
  const LocalGraph lg = localize(g);
  const std::uint32_t k = static_cast<std::uint32_t>(lg.verts.size());
  if (k < 2) throw std::invalid_argument("support must have at least 2 vertices");

  // Recenter so the sweep bound applies to the vector actually used; the
  // prefix order is shift-invariant.
  double total_vol = 0.0, dy = 0.0;
  for (std::uint32_t i = 0; i < k; ++i) {
    total_vol += lg.deg[i];
    dy += lg.deg[i] * y[lg.verts[i]];
  }
  const double shift = dy / total_vol;
  std::vector<double> yc(k);
  double denom = 0.0;
  for (std::uint32_t i = 0; i < k; ++i) {
    yc[i] = y[lg.verts[i]] - shift;
    denom += lg.deg[i] * yc[i] * yc[i];
  }
  if (denom <= 1e-30 * total_vol)
    throw std::invalid_argument("sweep vector is constant on the support");
  double num = 0.0;
  for (const Edge& e : g.edges) {
    const double d = yc[lg.local.at(e.u)] - yc[lg.local.at(e.v)];
    num += e.w * d * d;
  }
  const double bound = std::sqrt(2.0 * num / denom);

  std::vector<std::uint32_t> order(k);
  for (std::uint32_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (yc[a] != yc[b]) return yc[a] < yc[b];
    return lg.verts[a] < lg.verts[b];
  });

  std::vector<char> in_prefix(k, 0);
  double cut_w = 0.0, vol_s = 0.0;
  double best_phi = std::numeric_limits<double>::infinity();
  std::uint32_t best_len = 0;
  for (std::uint32_t pos = 0; pos + 1 < k; ++pos) {
    const std::uint32_t u = order[pos];
    double to_prefix = 0.0;
    for (const auto& [b, w] : lg.adj[u])
      if (in_prefix[b]) to_prefix += w;
    in_prefix[u] = 1;
    cut_w += lg.deg[u] - 2.0 * to_prefix;
    vol_s += lg.deg[u];
    const double phi = cut_w / std::min(vol_s, total_vol - vol_s);
    if (phi < best_phi) {
      best_phi = phi;
      best_len = pos + 1;
    }
  }
  LSKETCH_CHECK(best_phi <= bound + 1e-9, "sweep exceeded its Cheeger certificate");

  std::vector<char> in_side(k, 0);
  double side_vol = 0.0;
  for (std::uint32_t pos = 0; pos < best_len; ++pos) {
    in_side[order[pos]] = 1;
    side_vol += lg.deg[order[pos]];
  }
  const bool flip = side_vol > total_vol - side_vol;
  Cut cut;
  cut.conductance = best_phi;
  for (std::uint32_t i = 0; i < k; ++i)
    if (in_side[i] != flip) cut.side.push_back(lg.verts[i]);
  for (const Edge& e : g.edges)
    if (in_side[lg.local.at(e.u)] != in_side[lg.local.at(e.v)]) cut.crossing.push_back(e);
  return cut;
}

}  // namespace lsketch
