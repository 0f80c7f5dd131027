#pragma once

// Reference integrator for i dB/dt = H B. Shares nothing with the spectral path:
// classical RK4 with step doubling and local extrapolation.

#include <span>
#include <vector>

#include "qdghz/model.hpp"
#include "qdghz/state.hpp"

namespace qdghz {

struct IntegratorConfig {
  double dt_max = 0.01;      // fs
  double error_tol = 1e-10;  // per-step error target, amplitude units

  void validate() const;
};

inline constexpr double kMinStep = 1e-8;  // fs

/// One state per requested time. `times` must be strictly increasing and start at >= 0;
/// b0 is the state at t = 0. Throws StepUnderflow if the step controller drops below kMinStep.
std::vector<StateVector4> integrate_schrodinger(const Hamiltonian4& h, const StateVector4& b0,
                                                std::span<const double> times,
                                                const IntegratorConfig& cfg = {});

}  // namespace qdghz
