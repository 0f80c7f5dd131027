// qdghz: GHZ-state generation in three Forster-coupled quantum dots.
//
//   qdghz simulate run.cfg [--out prefix] [--svg|--no-svg] [--oracle]
//   qdghz fig1 | fig2      [--out prefix] [--svg|--no-svg] [--oracle]
//   qdghz validate
//
// Exit codes: 0 success, 1 validation or runtime failure, 2 configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qdghz/errors.hpp"
#include "qdghz/runner/config.hpp"
#include "qdghz/runner/csv.hpp"
#include "qdghz/runner/simulation.hpp"
#include "qdghz/runner/svg.hpp"
#include "qdghz/runner/validation.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr double kValidationThreshold = 1e-8;

struct OutputOptions {
  std::optional<std::string> out;
  std::optional<bool> svg;
  bool oracle = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out, "Output path prefix");
  cmd->add_flag("--svg,!--no-svg", opts.svg, "Write (or skip) the SVG plot");
  cmd->add_flag("--oracle", opts.oracle, "Propagate with the RK4 integrator instead of the closed form");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdghz::ValidationError("config", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string member_suffix(const qdghz::Trajectory& traj) {
  if (!traj.meta.member) return {};
  return "_" + std::string(qdghz::axis_name(traj.meta.member->axis)) + "_" +
         qdghz::format_number(traj.meta.member->value);
}

int run(qdghz::RunConfig cfg, const OutputOptions& opts, const std::string& title) {
  if (opts.out) cfg.out_prefix = *opts.out;
  if (opts.svg) cfg.emit_svg = *opts.svg;
  if (opts.oracle) cfg.solver = qdghz::Solver::oracle;
  cfg.check();

  const auto trajs = qdghz::run_simulation(cfg);
  const std::filesystem::path prefix(cfg.out_prefix);
  if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());

  bool deviation_ok = true;
  for (const auto& traj : trajs) {
    double lo = 1.0, hi = 0.0;
    for (const auto& row : traj.rows) {
      lo = std::min(lo, row.p_ghz);
      hi = std::max(hi, row.p_ghz);
    }
    std::cout << (traj.meta.member ? member_suffix(traj).substr(1) : std::string("run"))
              << ": p_ghz in [" << qdghz::format_number(lo) << ", " << qdghz::format_number(hi) << "]";
    if (traj.meta.max_deviation) {
      std::cout << ", spectral vs oracle " << qdghz::format_number(*traj.meta.max_deviation);
      deviation_ok = deviation_ok && *traj.meta.max_deviation < kValidationThreshold;
    }
    std::cout << '\n';
    if (cfg.emit_csv) {
      const auto path = cfg.out_prefix + member_suffix(traj) + ".csv";
      qdghz::emit_csv(path, traj, cfg.emit_scaled_time);
      std::cout << "  wrote " << path << '\n';
    }
  }
  if (cfg.emit_svg) {
    const auto path = cfg.out_prefix + ".svg";
    qdghz::emit_svg(path, trajs, title);
    std::cout << "wrote " << path << '\n';
  }
  return deviation_ok ? 0 : kExitValidation;
}

int validate(double perturbation) {
  qdghz::ValidationOptions options;
  options.threshold = kValidationThreshold;
  options.hamiltonian_perturbation = perturbation;
  const auto report = qdghz::validate_suite(options);
  for (const auto& set : report.sets) {
    std::cout << (set.pass ? "PASS  " : "FAIL  ") << set.label << "  max |B_spectral - B_oracle| = "
              << qdghz::format_number(set.max_deviation) << '\n';
  }
  std::cout << (report.pass() ? "all sets within " : "deviation exceeds ") << qdghz::format_number(report.threshold)
            << '\n';
  return report.pass() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ-state generation in three Forster-coupled quantum dots"};
  app.require_subcommand(1);

  OutputOptions sim_opts, fig1_opts, fig2_opts;
  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run a key = value configuration file");
  simulate->add_option("config", config_path, "Configuration file")->required();
  add_output_options(simulate, sim_opts);

  auto* fig1 = app.add_subcommand("fig1", "Omega sweep 0.1, 0.05, 0.03, 0.01 fs^-1 at resonance");
  add_output_options(fig1, fig1_opts);
  auto* fig2 = app.add_subcommand("fig2", "Detuning sweep 0.1, 0.3, 1, 3 x eta at Omega = 0.05 fs^-1");
  add_output_options(fig2, fig2_opts);

  double perturbation = 0.0;
  auto* check = app.add_subcommand("validate", "Compare the closed form against the integrator on all figure sets");
  check->add_option("--perturb-hamiltonian", perturbation, "Negative control: offset xi_00 on the spectral side")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*simulate) return run(qdghz::parse_config(read_file(config_path)), sim_opts, "");
    if (*fig1) return run(qdghz::fig1_config(), fig1_opts, "η = 0.1, Δ = 0, φ = 0");
    if (*fig2) return run(qdghz::fig2_config(), fig2_opts, "η = 0.1, Ω = 0.05 fs⁻¹, φ = 0");
    if (*check) return validate(perturbation);
  } catch (const qdghz::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qdghz::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
