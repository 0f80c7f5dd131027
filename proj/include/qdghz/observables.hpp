#pragma once

#include <array>

#include "qdghz/state.hpp"

namespace qdghz {

/// |<GHZ_tau|psi>|^2 = 0.5 |B0 + e^{-i tau} B3|^2 for the target
/// (|000> + e^{i tau} |111>) / sqrt(2), with |000> = vacuum and |111> = triexciton.
double ghz_probability(const StateVector4& state, double tau);

struct GhzOptimum {
  double p_ghz_max;
  double tau_star;  // arg(B3) - arg(B0) in (-pi, pi]; 0 when B3 == 0
};

/// Overlap maximized over the GHZ phase: 0.5 (|B0| + |B3|)^2.
GhzOptimum ghz_probability_max(const StateVector4& state);

std::array<double, 4> populations(const Amplitudes& amplitudes);
inline std::array<double, 4> populations(const StateVector4& state) {
  return populations(state.amplitudes());
}

struct GhzReport {
  double p_ghz;
  double p_ghz_max;
  double tau_star;
  // |B1|^2 + |B2|^2. Separates true GHZ proximity from the vacuum, which also scores 0.5.
  double residual_population;
};

GhzReport ghz_report(const StateVector4& state, double tau);

}  // namespace qdghz
