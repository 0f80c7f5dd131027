#include "qdghz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdghz/errors.hpp"

namespace qdghz {

namespace {

// dB/dt = -i H B
Amplitudes rhs(const Hamiltonian4& h, const Amplitudes& b) {
  Amplitudes d = h.apply(b);
  for (auto& z : d) z = Complex(z.imag(), -z.real());
  return d;
}

Amplitudes axpy(const Amplitudes& y, double a, const Amplitudes& x) {
  Amplitudes out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + a * x[i];
  return out;
}

Amplitudes rk4_step(const Hamiltonian4& h, const Amplitudes& y, double dt) {
  const Amplitudes k1 = rhs(h, y);
  const Amplitudes k2 = rhs(h, axpy(y, 0.5 * dt, k1));
  const Amplitudes k3 = rhs(h, axpy(y, 0.5 * dt, k2));
  const Amplitudes k4 = rhs(h, axpy(y, dt, k3));
  Amplitudes out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt_max > 0.0) || !std::isfinite(dt_max)) throw ValidationError("dt_max", "must be > 0");
  if (!(error_tol > 1e-15 && error_tol < 1e-3)) throw ValidationError("error_tol", "must lie in (1e-15, 1e-3)");
}

std::vector<StateVector4> integrate_schrodinger(const Hamiltonian4& h, const StateVector4& b0,
                                                std::span<const double> times,
                                                const IntegratorConfig& cfg) {
  cfg.validate();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0 || (i > 0 && !(times[i] > times[i - 1]))) {
      throw ValidationError("times", "must be finite, non-negative and strictly increasing");
    }
  }

  std::vector<StateVector4> out;
  out.reserve(times.size());
  Amplitudes y = b0.amplitudes();
  double t = 0.0;
  double dt = cfg.dt_max;

  for (const double target : times) {
    while (t < target) {
      const double remaining = target - t;
      const bool last = dt >= remaining * (1.0 - 1e-12);
      const double step = last ? remaining : dt;

      // Step doubling: one full step against two half steps.
      const Amplitudes coarse = rk4_step(h, y, step);
      const Amplitudes fine = rk4_step(h, rk4_step(h, y, 0.5 * step), 0.5 * step);
      double err = 0.0;
      for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(fine[i] - coarse[i]));
      err /= 15.0;

      if (err <= cfg.error_tol) {
        // Richardson extrapolation of the two estimates.
        for (std::size_t i = 0; i < 4; ++i) y[i] = fine[i] + (fine[i] - coarse[i]) / 15.0;
        t = last ? target : t + step;
        const double grow = err == 0.0 ? 2.0 : std::min(2.0, 0.9 * std::pow(cfg.error_tol / err, 0.2));
        if (!last) dt = std::min(cfg.dt_max, step * std::max(1.0, grow));
      } else {
        dt = step * std::max(0.1, 0.9 * std::pow(cfg.error_tol / err, 0.2));
        if (dt < kMinStep) {
          throw StepUnderflow("step " + std::to_string(dt) + " fs needed at t = " + std::to_string(t) + " fs");
        }
      }
    }
    out.emplace_back(y);
  }
  return out;
}

}  // namespace qdghz
