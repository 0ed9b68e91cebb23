#include "lsketch/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lsketch {

std::uint32_t SketchParams::alpha() const {
  return static_cast<std::uint32_t>(std::ceil(c_alpha * std::pow(eps, -5.0 / 3.0)));
}

std::uint32_t SketchParams::beta() const {
  return static_cast<std::uint32_t>(std::ceil(c_beta * std::pow(eps, -8.0 / 5.0)));
}

double SketchParams::h_basic() const { return static_cast<double>(alpha()) * eps * eps; }

double SketchParams::h_effective() const {
  if (h_override) return *h_override;
  return std::min(h_basic(), 1.0);
}

std::uint32_t SketchParams::replicas() const {
  const double half = (c_med / 2.0) * std::log(1.0 / delta);
  return 2u * static_cast<std::uint32_t>(std::ceil(half)) + 1u;
}

void SketchParams::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(c_alpha > 0.0 && c_beta > 0.0 && c_med > 0.0 && c_sparsify > 0.0))
    throw std::invalid_argument("budget constants must be positive");
  if (h_override && !(*h_override > 0.0 && *h_override <= 1.0))
    throw std::invalid_argument("h override must lie in (0, 1]");
  if (alpha() < 1 || beta() < 1) throw std::invalid_argument("sample budgets must be at least 1");
}

}  // namespace lsketch
