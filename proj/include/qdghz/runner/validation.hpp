#pragma once

#include <string>
#include <vector>

#include "qdghz/runner/config.hpp"

namespace qdghz {

struct LabeledParams {
  std::string label;
  SystemParams params;
};

/// The eight parameter sets behind the two figures (four Omega values at delta = 0,
/// four detunings at Omega = 0.05), eta = 0.1, phi = 0, 0..500 fs.
std::vector<LabeledParams> figure_parameter_sets();

struct SetReport {
  std::string label;
  double max_deviation;
  bool pass;
};

struct ValidationReport {
  std::vector<SetReport> sets;
  double threshold;
  bool pass() const;
};

struct ValidationOptions {
  double threshold = 1e-8;
  // Test hook: added to xi_00 on the spectral side only. Nonzero values must fail the suite.
  double hamiltonian_perturbation = 0.0;
  IntegratorConfig integrator;
};

ValidationReport validate_suite(const ValidationOptions& options = {});

}  // namespace qdghz
