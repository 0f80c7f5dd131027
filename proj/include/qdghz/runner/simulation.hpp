#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qdghz/runner/config.hpp"

namespace qdghz {

inline constexpr const char* kVersion = "qdghz 0.1.0";

struct TrajectoryRow {
  double t;
  Amplitudes b;
  std::array<double, 4> p;
  double p_ghz;
  double p_ghz_max;
};

struct SweepMember {
  SweepAxis axis;
  double value;
};

struct TrajectoryMeta {
  SystemParams params;
  Solver solver = Solver::spectral;
  std::optional<SweepMember> member;
  std::optional<double> max_deviation;  // spectral vs oracle, when validated
  std::string version = kVersion;
};

struct Trajectory {
  TrajectoryMeta meta;
  std::vector<TrajectoryRow> rows;
};

/// t_start + i * t_step for every i with the result <= t_end (within 1e-9 of a step).
std::vector<double> time_grid(const SystemParams& params);

Trajectory simulate(const SystemParams& params, Solver solver, const IntegratorConfig& integrator = {},
                    bool validate = false);

/// Largest componentwise |B_spectral - B_oracle| over the parameter set's time grid.
double propagator_deviation(const SystemParams& params, const IntegratorConfig& integrator = {});

/// One trajectory per sweep member, in sweep order. Members run concurrently.
std::vector<Trajectory> run_simulation(const RunConfig& cfg);

}  // namespace qdghz
