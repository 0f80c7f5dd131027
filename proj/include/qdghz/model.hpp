#pragma once

// Effective exciton-ladder model of three identical Forster-coupled quantum dots
// driven by a common laser, restricted to the optically active J=3/2 manifold.
//
// Units: hbar = 1, rates and energies in rad/fs, times in fs. The band gap and
// laser frequency of the host material enter only through the detuning
// delta = (band gap - hbar * laser frequency) / hbar, and the field amplitude
// only through the Rabi frequency (hbar * omega_rabi = dipole * field).

#include <string>
#include <string_view>

#include "qdghz/matrix4.hpp"
#include "qdghz/state.hpp"

namespace qdghz {

class InitialState {
 public:
  enum class Kind { vacuum, single, bi, tri, custom };

  static InitialState vacuum() { return InitialState(Kind::vacuum, {}); }
  static InitialState single() { return InitialState(Kind::single, {}); }
  static InitialState bi() { return InitialState(Kind::bi, {}); }
  static InitialState tri() { return InitialState(Kind::tri, {}); }
  /// Raw amplitudes; normalized when the state is materialized.
  static InitialState custom(const Amplitudes& raw) { return InitialState(Kind::custom, raw); }

  Kind kind() const { return kind_; }
  const Amplitudes& raw() const { return raw_; }

  /// Throws ValidationError for a zero or non-finite custom vector.
  StateVector4 state() const;
  std::string describe() const;

  friend bool operator==(const InitialState&, const InitialState&) = default;

 private:
  InitialState(Kind kind, const Amplitudes& raw) : kind_(kind), raw_(raw) {}

  Kind kind_;
  Amplitudes raw_;
};

struct SystemParams {
  double eta = 0.1;         // Forster hopping rate, rad/fs
  double omega_rabi = 0.05; // Rabi frequency magnitude, rad/fs
  double delta = 0.0;       // laser detuning, rad/fs
  double phi = 0.0;         // laser phase, rad
  double tau = 0.0;         // relative phase of the target GHZ state, rad
  double t_start = 0.0;     // fs
  double t_end = 500.0;     // fs
  double t_step = 0.5;      // fs
  InitialState initial_state = InitialState::vacuum();

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Hermitian, tridiagonal 4x4 Hamiltonian on the exciton ladder.
class Hamiltonian4 {
 public:
  static constexpr double kHermitianTolerance = 1e-14;

  /// Throws ValidationError unless `elements` is Hermitian (relative 1e-14)
  /// and zero outside the tridiagonal band.
  static Hamiltonian4 from_elements(const Matrix4c& elements);

  const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const Matrix4c& elements() const { return m_; }

  double trace() const;
  Amplitudes apply(const Amplitudes& v) const { return m_ * v; }
  Hamiltonian4 negated() const;

 private:
  explicit Hamiltonian4(const Matrix4c& m) : m_(m) {}

  Matrix4c m_;
};

bool is_hermitian(const Matrix4c& m, double relative_tolerance);

/// Matrix elements xi_jk = <j|H|k>:
///   diagonal    1.5(eta - delta), 0.5(7 eta - delta), 0.5(7 eta + delta), 1.5(eta + delta)
///   xi_01 = sqrt(3) omega e^{+i phi}, xi_12 = 2 omega e^{-i phi}, xi_23 = sqrt(3) omega e^{-i phi}
/// with the lower triangle the conjugate transpose.
Hamiltonian4 build_hamiltonian(const SystemParams& params);

}  // namespace qdghz
