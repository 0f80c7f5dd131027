#include "qdghz/runner/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "qdghz/observables.hpp"
#include "qdghz/spectral.hpp"

namespace qdghz {

namespace {

TrajectoryRow make_row(double t, const StateVector4& state, double tau) {
  const auto report = ghz_report(state, tau);
  TrajectoryRow row{t, state.amplitudes(), populations(state), report.p_ghz, report.p_ghz_max};
  for (double p : row.p)
    if (p < 0.0 || p > 1.0) throw std::logic_error("population outside [0, 1]");
  if (row.p_ghz < 0.0 || row.p_ghz > 1.0 || row.p_ghz_max < 0.0 || row.p_ghz_max > 1.0) {
    throw std::logic_error("GHZ probability outside [0, 1]");
  }
  return row;
}

std::vector<StateVector4> spectral_states(const Hamiltonian4& h, const StateVector4& b0,
                                          const std::vector<double>& times) {
  const ClosedFormPropagator prop(eigensystem(h), b0);
  std::vector<StateVector4> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(prop.at(t));
  return out;
}

double max_componentwise(const std::vector<StateVector4>& a, const std::vector<StateVector4>& b) {
  double dev = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(a[n][i] - b[n][i]));
  return dev;
}

}  // namespace

std::vector<double> time_grid(const SystemParams& params) {
  params.validate();
  const auto count =
      static_cast<std::size_t>(std::floor((params.t_end - params.t_start) / params.t_step + 1e-9));
  std::vector<double> times;
  times.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) times.push_back(params.t_start + static_cast<double>(i) * params.t_step);
  return times;
}

Trajectory simulate(const SystemParams& params, Solver solver, const IntegratorConfig& integrator, bool validate) {
  const auto h = build_hamiltonian(params);
  const auto b0 = params.initial_state.state();
  const auto times = time_grid(params);

  std::vector<StateVector4> states;
  std::optional<double> deviation;
  if (solver == Solver::spectral) {
    states = spectral_states(h, b0, times);
    if (validate) deviation = max_componentwise(states, integrate_schrodinger(h, b0, times, integrator));
  } else {
    states = integrate_schrodinger(h, b0, times, integrator);
    if (validate) deviation = max_componentwise(states, spectral_states(h, b0, times));
  }

  Trajectory traj;
  traj.meta.params = params;
  traj.meta.solver = solver;
  traj.meta.max_deviation = deviation;
  traj.rows.reserve(times.size());
  for (std::size_t n = 0; n < times.size(); ++n) traj.rows.push_back(make_row(times[n], states[n], params.tau));
  return traj;
}

double propagator_deviation(const SystemParams& params, const IntegratorConfig& integrator) {
  const auto h = build_hamiltonian(params);
  const auto b0 = params.initial_state.state();
  const auto times = time_grid(params);
  return max_componentwise(spectral_states(h, b0, times), integrate_schrodinger(h, b0, times, integrator));
}

std::vector<Trajectory> run_simulation(const RunConfig& cfg) {
  cfg.check();
  const auto members = cfg.members();
  std::vector<std::future<Trajectory>> jobs;
  jobs.reserve(members.size());
  for (const auto& p : members) {
    jobs.push_back(std::async(std::launch::async, [&cfg, p] {
      return simulate(p, cfg.solver, cfg.integrator, cfg.validate);
    }));
  }
  std::vector<Trajectory> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.push_back(jobs[i].get());
    if (cfg.sweep) out.back().meta.member = SweepMember{cfg.sweep->axis, cfg.sweep->values[i]};
  }
  return out;
}

}  // namespace qdghz
