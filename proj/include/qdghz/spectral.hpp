#pragma once

// Closed-form propagation on the exciton ladder.
//
// The amplitudes evolve as
//
//   B_j(t) = exp(-i shift t) * sum_k lambda_jk * exp(-i scale mu_k t)
//
// where mu_k are the roots of the characteristic quartic of (H - shift) / scale,
// shift = xi_11 and scale = |xi_21| = 2 Omega. The roots come from a Ferrari
// (resolvent cubic) solution; the eigenvectors O are null vectors of H - E_k and
// lambda_jk = O_jk c_k with O c = B(0).

#include <array>

#include "qdghz/matrix4.hpp"
#include "qdghz/model.hpp"
#include "qdghz/state.hpp"

namespace qdghz {

/// Monic quartic mu^4 + r1 mu^3 + r2 mu^2 + r3 mu + r4.
struct QuarticCoefficients {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;

  double operator()(double mu) const { return (((mu + r1) * mu + r2) * mu + r3) * mu + r4; }
  double derivative(double mu) const { return ((4.0 * mu + 3.0 * r1) * mu + 2.0 * r2) * mu + r3; }
  /// Sum of |terms|; the scale of the rounding error in operator().
  double magnitude(double mu) const;
};

inline constexpr double kMinScale = 1e-12;  // rad/fs

/// Coefficients of det((H - shift) / scale - mu) = 0. Throws DegenerateScale if scale <= kMinScale.
QuarticCoefficients characteristic_coefficients(const Hamiltonian4& h, double shift, double scale);

/// Four real roots in ascending order, each polished so that
/// |p(mu)| <= 1e-10 max(1, |mu|^4). Throws ComplexRootResidual if a root keeps an
/// imaginary part above 1e-9 max(1, |mu|) after cleanup.
std::array<double, 4> solve_quartic(const QuarticCoefficients& c);

struct SpectralDecomposition {
  std::array<double, 4> mu{};        // scaled roots, ascending
  std::array<double, 4> energies{};  // shift + scale * mu, rad/fs
  Matrix4c vectors;                  // unitary; column k is the eigenvector of energies[k]
  double shift = 0.0;                // xi_11 on the scaled path, 0 otherwise
  double scale = 1.0;                // 2 Omega on the scaled path, 1 otherwise
  bool scaled = false;
};

/// Relative gap (to the spectral width) below which eigenvalues are one cluster.
inline constexpr double kDegeneracyGap = 1e-9;

SpectralDecomposition eigensystem(const Hamiltonian4& h);

/// lambda_jk = O_jk c_k with O c = b0, so sum_k lambda_jk = B_j(0).
Matrix4c mode_coefficients(const SpectralDecomposition& sd, const StateVector4& b0);

/// Closed-form evolution from a fixed initial state. Cheap to evaluate at many times.
class ClosedFormPropagator {
 public:
  ClosedFormPropagator(SpectralDecomposition sd, const StateVector4& b0);

  StateVector4 at(double t) const;

  const SpectralDecomposition& decomposition() const { return sd_; }
  const Matrix4c& lambda() const { return lambda_; }

 private:
  SpectralDecomposition sd_;
  Matrix4c lambda_;
};

StateVector4 propagate_closed_form(const SpectralDecomposition& sd, const StateVector4& b0, double t);

}  // namespace qdghz
