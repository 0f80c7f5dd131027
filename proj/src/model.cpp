#include "qdghz/model.hpp"

#include <cmath>
#include <numbers>

#include "qdghz/errors.hpp"

namespace qdghz {

namespace {

void require_finite(double v, const char* key) {
  if (!std::isfinite(v)) throw ValidationError(key, "must be finite");
}

}  // namespace

StateVector4 InitialState::state() const {
  switch (kind_) {
    case Kind::vacuum: return StateVector4::basis(0);
    case Kind::single: return StateVector4::basis(1);
    case Kind::bi: return StateVector4::basis(2);
    case Kind::tri: return StateVector4::basis(3);
    case Kind::custom:
      try {
        return StateVector4::normalized(raw_);
      } catch (const ValidationError& e) {
        throw ValidationError("initial_amplitudes", e.what());
      }
  }
  throw ValidationError("initial_state", "unknown kind");
}

std::string InitialState::describe() const {
  switch (kind_) {
    case Kind::vacuum: return "vacuum";
    case Kind::single: return "single";
    case Kind::bi: return "bi";
    case Kind::tri: return "tri";
    case Kind::custom: return "custom";
  }
  return "unknown";
}

void SystemParams::validate() const {
  require_finite(eta, "eta");
  require_finite(omega_rabi, "omega_rabi");
  require_finite(delta, "delta");
  require_finite(phi, "phi");
  require_finite(tau, "tau");
  require_finite(t_start, "t_start");
  require_finite(t_end, "t_end");
  require_finite(t_step, "t_step");
  if (omega_rabi < 0.0) throw ValidationError("omega_rabi", "must be >= 0 (carry the phase in phi)");
  if (t_start < 0.0) throw ValidationError("t_start", "must be >= 0");
  if (!(t_end > t_start)) throw ValidationError("t_end", "must exceed t_start");
  if (!(t_step > 0.0)) throw ValidationError("t_step", "must be > 0");
  (void)initial_state.state();
}

bool is_hermitian(const Matrix4c& m, double relative_tolerance) {
  const double bound = relative_tolerance * std::max(m.max_abs(), 1e-300);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > bound) return false;
  return true;
}

Hamiltonian4 Hamiltonian4::from_elements(const Matrix4c& elements) {
  if (!is_hermitian(elements, kHermitianTolerance)) {
    throw ValidationError("hamiltonian", "not Hermitian");
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if ((i > j + 1 || j > i + 1) && elements(i, j) != Complex{}) {
        throw ValidationError("hamiltonian", "nonzero element outside the tridiagonal band");
      }
  Matrix4c m = elements;
  // Diagonal of a Hermitian matrix is real; drop rounding noise.
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = m(i, i).real();
  return Hamiltonian4(m);
}

double Hamiltonian4::trace() const {
  return m_(0, 0).real() + m_(1, 1).real() + m_(2, 2).real() + m_(3, 3).real();
}

Hamiltonian4 Hamiltonian4::negated() const {
  Matrix4c m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = -m_(i, j);
  return Hamiltonian4(m);
}

Hamiltonian4 build_hamiltonian(const SystemParams& params) {
  params.validate();
  const double eta = params.eta;
  const double delta = params.delta;
  const double omega = params.omega_rabi;
  const Complex up = std::polar(1.0, params.phi);
  const Complex down = std::conj(up);
  const double sqrt3 = std::numbers::sqrt3;

  Matrix4c m;
  m(0, 0) = 1.5 * (eta - delta);
  m(1, 1) = 0.5 * (7.0 * eta - delta);
  m(2, 2) = 0.5 * (7.0 * eta + delta);
  m(3, 3) = 1.5 * (eta + delta);
  m(0, 1) = sqrt3 * omega * up;
  m(1, 2) = 2.0 * omega * down;
  m(2, 3) = sqrt3 * omega * down;
  for (std::size_t i = 0; i < 3; ++i) m(i + 1, i) = std::conj(m(i, i + 1));
  return Hamiltonian4::from_elements(m);
}

}  // namespace qdghz
