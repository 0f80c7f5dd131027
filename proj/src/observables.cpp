#include "qdghz/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdghz {

double ghz_probability(const StateVector4& state, double tau) {
  const Complex overlap = state[0] + std::polar(1.0, -tau) * state[3];
  // Clamp round-off only; the bound holds exactly for unit-norm states.
  return std::clamp(0.5 * std::norm(overlap), 0.0, 1.0);
}

GhzOptimum ghz_probability_max(const StateVector4& state) {
  const double s = std::abs(state[0]) + std::abs(state[3]);
  double tau_star = 0.0;
  if (state[3] != Complex{}) {
    tau_star = std::remainder(std::arg(state[3]) - std::arg(state[0]), 2.0 * std::numbers::pi);
    if (tau_star <= -std::numbers::pi) tau_star += 2.0 * std::numbers::pi;
  }
  return {std::clamp(0.5 * s * s, 0.0, 1.0), tau_star};
}

// Clamped: a unit-norm state can carry |B_j|^2 = 1 + ulp.
std::array<double, 4> populations(const Amplitudes& amplitudes) {
  std::array<double, 4> p;
  for (std::size_t j = 0; j < 4; ++j) p[j] = std::min(std::norm(amplitudes[j]), 1.0);
  return p;
}

GhzReport ghz_report(const StateVector4& state, double tau) {
  const auto opt = ghz_probability_max(state);
  return {ghz_probability(state, tau), opt.p_ghz_max, opt.tau_star,
          std::norm(state[1]) + std::norm(state[2])};
}

}  // namespace qdghz
