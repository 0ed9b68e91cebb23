#pragma once

#include <vector>

#include "lsketch/graph.hpp"

namespace lsketch {

// Second-smallest eigenvalue of the degree-normalized Laplacian of the
// support of g, with the matching eigenvector brought back to vertex space
// (scaled by D^{-1/2}) for sweep use. vec is global-indexed, zero off the
// support, and D-orthogonal to the all-ones vector on the support.
struct SpectralCertificate {
  double lambda1 = 0.0;
  enum class Method { dense_eig, power_iteration } method = Method::dense_eig;
  std::vector<double> vec;
};

// Requires a connected support with at least 2 vertices; throws
// std::invalid_argument on an empty or disconnected support. Supports up to
// 500 vertices are solved densely; larger ones by deflated power iteration
// on 2I - normalized Laplacian, whose Rayleigh-quotient estimate upper
// bounds the true eigenvalue.
SpectralCertificate lambda1(const WeightedGraph& g);

// Best prefix cut of the support ordered by y (ties by vertex id). The
// returned conductance is certified against the Cheeger sweep bound
// sqrt(2 * RQ(y')) where y' is y recentered to be D-orthogonal to ones;
// a violation aborts, as it can only be an implementation bug.
Cut sweep_cut(const WeightedGraph& g, const std::vector<double>& y);

}  // namespace lsketch
