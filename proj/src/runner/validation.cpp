#include "qdghz/runner/validation.hpp"

#include <algorithm>

#include "qdghz/runner/csv.hpp"
#include "qdghz/runner/simulation.hpp"
#include "qdghz/spectral.hpp"

namespace qdghz {

std::vector<LabeledParams> figure_parameter_sets() {
  std::vector<LabeledParams> sets;
  for (const auto& run : {fig1_config(), fig2_config()}) {
    const auto members = run.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      sets.push_back(LabeledParams{std::string(run.out_prefix) + " " + std::string(axis_name(run.sweep->axis)) + "=" +
                          format_number(run.sweep->values[i]),
                      members[i]});
    }
  }
  return sets;
}

bool ValidationReport::pass() const {
  return std::all_of(sets.begin(), sets.end(), [](const SetReport& s) { return s.pass; });
}

ValidationReport validate_suite(const ValidationOptions& options) {
  ValidationReport report{{}, options.threshold};
  for (const auto& [label, params] : figure_parameter_sets()) {
    const auto h = build_hamiltonian(params);
    const auto b0 = params.initial_state.state();
    const auto times = time_grid(params);

    auto spectral_h = h;
    if (options.hamiltonian_perturbation != 0.0) {
      Matrix4c m = h.elements();
      m(0, 0) += options.hamiltonian_perturbation;
      spectral_h = Hamiltonian4::from_elements(m);
    }
    const ClosedFormPropagator prop(eigensystem(spectral_h), b0);
    const auto reference = integrate_schrodinger(h, b0, times, options.integrator);
    double dev = 0.0;
    for (std::size_t n = 0; n < times.size(); ++n) {
      const auto b = prop.at(times[n]);
      for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(b[i] - reference[n][i]));
    }
    report.sets.push_back({label, dev, dev < options.threshold});
  }
  return report;
}

}  // namespace qdghz
