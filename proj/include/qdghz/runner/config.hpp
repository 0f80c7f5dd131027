#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdghz/model.hpp"
#include "qdghz/oracle.hpp"

namespace qdghz {

enum class SweepAxis { omega_rabi, delta, eta, phi, tau };

std::string_view axis_name(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view name);
/// Writes `value` into the field selected by `axis`.
void apply_axis(SystemParams& params, SweepAxis axis, double value);

struct Sweep {
  SweepAxis axis;
  std::vector<double> values;
};

enum class Solver { spectral, oracle };

std::string_view solver_name(Solver solver);

struct RunConfig {
  SystemParams params;
  std::optional<Sweep> sweep;
  bool emit_csv = true;
  bool emit_svg = true;
  std::string out_prefix = "qdghz_run";
  bool validate = false;          // run the oracle alongside and record the deviation
  bool emit_scaled_time = false;  // extra omega_t column
  Solver solver = Solver::spectral;
  IntegratorConfig integrator;

  /// One parameter set per sweep value, in sweep order; just `params` without a sweep.
  std::vector<SystemParams> members() const;
  void check() const;
};

/// Flat `key = value` text, `#` comments, comma-separated lists.
///
/// Keys: eta, omega_rabi, delta, phi, tau, t_start, t_end, t_step,
/// initial_state (vacuum | single | bi | tri | custom), initial_amplitudes
/// (8 reals: re0, im0, ..., re3, im3; required for custom), sweep
/// (`<axis>: v1, v2, ...`), outputs (csv, svg), out, validate, emit_scaled_time,
/// solver (spectral | oracle), dt_max, error_tol.
///
/// Throws ParseError (with line number) for malformed lines and ValidationError
/// naming the key for unknown keys or out-of-range values.
RunConfig parse_config(std::string_view text);

/// Omega sweep {0.1, 0.05, 0.03, 0.01} fs^-1 at eta = 0.1, delta = 0, phi = 0.
RunConfig fig1_config();
/// Delta sweep {0.1, 0.3, 1.0, 3.0} x eta at eta = 0.1, Omega = 0.05 fs^-1, phi = 0.
RunConfig fig2_config();

}  // namespace qdghz
