#pragma once

#include <cstdint>
#include <optional>

namespace lsketch {

// Accuracy/size knobs plus every quantity derived from them. eps is the
// target relative error, delta the per-query failure probability; c_alpha
// and c_beta scale the per-vertex sample budgets of the two sketch families.
struct SketchParams {
  double eps = 0.3;
  double delta = 0.05;
  double c_alpha = 2.0;
  double c_beta = 2.0;
  double c_med = 8.0;
  double c_sparsify = 1.5;
  std::optional<double> h_override;  // experiment hook; must lie in (0, 1]

  // Per-heavy-vertex draw budget ceil(c_alpha * eps^(-5/3)).
  std::uint32_t alpha() const;

  // Per-vertex in-arc draw budget ceil(c_beta * eps^(-8/5)).
  std::uint32_t beta() const;

  // Raw expansion threshold alpha * eps^2 (~ c_alpha * eps^(1/3)).
  double h_basic() const;

  // Threshold actually handed to the splitter: the override if set, else
  // h_basic clamped into (0, 1]. Conductance never exceeds 1, so values
  // above 1 would make every >=3-vertex component uncertifiable; the clamp
  // is the identity in the regime eps <= (1/c_alpha)^3.
  double h_effective() const;

  // Odd replica count 2*ceil((c_med/2) * ln(1/delta)) + 1.
  std::uint32_t replicas() const;

  // Throws std::invalid_argument unless eps, delta in (0,1), the constants
  // are positive, and any h_override lies in (0, 1].
  void validate() const;
};

}  // namespace lsketch
