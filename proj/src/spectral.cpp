#include "qdghz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qdghz/errors.hpp"

namespace qdghz {

namespace {

using Poly = std::array<double, 5>;  // low to high

Complex dot(const Amplitudes& a, const Amplitudes& b) {
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Amplitudes& v) { return std::sqrt(norm_squared(v)); }

void scale_in_place(Amplitudes& v, Complex f) {
  for (auto& z : v) z *= f;
}

// Modified Gram-Schmidt, two passes. A column that collapses is replaced by the
// first unit vector that still has a component outside the span so far.
void orthonormalize(std::vector<Amplitudes>& cols) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto project_out = [&](Amplitudes& v) {
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < k; ++j) {
          const Complex d = dot(cols[j], v);
          for (std::size_t i = 0; i < 4; ++i) v[i] -= d * cols[j][i];
        }
    };
    Amplitudes v = cols[k];
    project_out(v);
    double n = norm(v);
    for (std::size_t e = 0; n < 1e-8 && e < 4; ++e) {
      v = Amplitudes{};
      v[e] = 1.0;
      project_out(v);
      n = norm(v);
    }
    scale_in_place(v, 1.0 / n);
    cols[k] = v;
  }
}

// Null space of m with the given dimension, by Gaussian elimination with
// complete pivoting stopped after 4 - dim pivots.
std::vector<Amplitudes> null_space(Matrix4c w, std::size_t dim) {
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  const std::size_t target_rank = 4 - dim;
  std::size_t rank = 0;
  for (; rank < target_rank; ++rank) {
    std::size_t pr = rank, pc = rank;
    double best = 0.0;
    for (std::size_t i = rank; i < 4; ++i)
      for (std::size_t j = rank; j < 4; ++j)
        if (std::abs(w(i, j)) > best) {
          best = std::abs(w(i, j));
          pr = i;
          pc = j;
        }
    if (best == 0.0) break;
    for (std::size_t j = 0; j < 4; ++j) std::swap(w(rank, j), w(pr, j));
    for (std::size_t i = 0; i < 4; ++i) std::swap(w(i, rank), w(i, pc));
    std::swap(perm[rank], perm[pc]);
    for (std::size_t i = rank + 1; i < 4; ++i) {
      const Complex f = w(i, rank) / w(rank, rank);
      for (std::size_t j = rank; j < 4; ++j) w(i, j) -= f * w(rank, j);
    }
  }

  std::vector<Amplitudes> out;
  for (std::size_t free = rank; free < 4 && out.size() < dim; ++free) {
    Amplitudes x{};
    x[free] = 1.0;
    for (std::size_t i = rank; i-- > 0;) {
      Complex s{};
      for (std::size_t j = i + 1; j < 4; ++j) s += w(i, j) * x[j];
      x[i] = -s / w(i, i);
    }
    Amplitudes v{};
    for (std::size_t k = 0; k < 4; ++k) v[perm[k]] = x[k];
    scale_in_place(v, 1.0 / norm(v));
    out.push_back(v);
  }
  return out;
}

// Cyclic Jacobi on a small Hermitian matrix; returns eigenvectors as columns of `u`.
void jacobi_hermitian(std::vector<std::vector<Complex>>& a, std::vector<std::vector<Complex>>& u) {
  const std::size_t n = a.size();
  u.assign(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1.0;
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += std::norm(a[i][j]);
        if (i != j) off += std::norm(a[i][j]);
      }
    if (off <= 1e-32 * total || off == 0.0) return;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a[p][q]);
        if (apq == 0.0) continue;
        // Phase the (p, q) block real, then apply the real symmetric rotation.
        const Complex phase = a[p][q] / apq;
        const double theta = (a[q][q].real() - a[p][p].real()) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G acts on columns p, q: col_p' = c col_p - s conj(phase) col_q, col_q' = s phase col_p + c col_q.
        const Complex gpq = s * phase;
        const Complex gqp = -s * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp + gqp * akq;
          a[k][q] = gpq * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk + std::conj(gqp) * aqk;
          a[q][k] = std::conj(gpq) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex ukp = u[k][p], ukq = u[k][q];
          u[k][p] = c * ukp + gqp * ukq;
          u[k][q] = gpq * ukp + c * ukq;
        }
      }
  }
}

// Rotates an orthonormal basis of a (near-)degenerate invariant subspace onto
// the eigenvectors of H restricted to it.
void rayleigh_ritz(const Hamiltonian4& h, std::vector<Amplitudes>& basis) {
  const std::size_t m = basis.size();
  std::vector<Amplitudes> hb(m);
  for (std::size_t j = 0; j < m; ++j) hb[j] = h.apply(basis[j]);
  std::vector<std::vector<Complex>> s(m, std::vector<Complex>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[i][j] = dot(basis[i], hb[j]);
  for (std::size_t i = 0; i < m; ++i) {
    s[i][i] = s[i][i].real();
    for (std::size_t j = i + 1; j < m; ++j) {
      s[i][j] = 0.5 * (s[i][j] + std::conj(s[j][i]));
      s[j][i] = std::conj(s[i][j]);
    }
  }
  std::vector<std::vector<Complex>> u;
  jacobi_hermitian(s, u);
  std::vector<Amplitudes> rotated(m, Amplitudes{});
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < 4; ++i) rotated[j][i] += basis[k][i] * u[k][j];
  basis = std::move(rotated);
}

Poly multiply_linear(const Poly& p, double root) {
  // (mu - root) * p
  Poly out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i + 1] += p[i];
    out[i] -= root * p[i];
  }
  return out;
}

}  // namespace

QuarticCoefficients characteristic_coefficients(const Hamiltonian4& h, double shift, double scale) {
  if (!(scale > kMinScale)) {
    throw DegenerateScale("scale " + std::to_string(scale) + " rad/fs is too small; use the unscaled path");
  }
  std::array<double, 4> diag{};
  std::array<double, 3> coupling{};  // |A_{i,i+1}|^2
  for (std::size_t i = 0; i < 4; ++i) diag[i] = (h(i, i).real() - shift) / scale;
  for (std::size_t i = 0; i < 3; ++i) coupling[i] = std::norm(h(i, i + 1)) / (scale * scale);

  // Continuant: q_k = (mu - a_{k-1}) q_{k-1} - |b_{k-2}|^2 q_{k-2}.
  Poly prev{1.0};
  Poly cur = multiply_linear(prev, diag[0]);
  for (std::size_t k = 2; k <= 4; ++k) {
    Poly next = multiply_linear(cur, diag[k - 1]);
    for (std::size_t i = 0; i < 5; ++i) next[i] -= coupling[k - 2] * prev[i];
    prev = cur;
    cur = next;
  }
  return {cur[3], cur[2], cur[1], cur[0]};
}

SpectralDecomposition eigensystem(const Hamiltonian4& h) {
  SpectralDecomposition sd;
  const double coupling = std::abs(h(2, 1));
  if (coupling > kMinScale) {
    sd.scaled = true;
    sd.shift = h(1, 1).real();
    sd.scale = coupling;
  }
  const auto mu = solve_quartic(characteristic_coefficients(h, sd.shift, sd.scale));
  std::array<double, 4> e{};
  for (std::size_t k = 0; k < 4; ++k) e[k] = sd.shift + sd.scale * mu[k];

  const double width = e[3] - e[0];
  std::vector<Amplitudes> cols;
  for (std::size_t k = 0; k < 4;) {
    std::size_t j = k;
    while (j + 1 < 4 && e[j + 1] - e[j] <= kDegeneracyGap * width) ++j;
    const std::size_t m = j - k + 1;
    const double centre = std::accumulate(e.begin() + static_cast<std::ptrdiff_t>(k),
                                          e.begin() + static_cast<std::ptrdiff_t>(j + 1), 0.0) /
                          static_cast<double>(m);
    Matrix4c shifted = h.elements();
    for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= centre;
    auto block = null_space(shifted, m);
    if (m > 1) {
      orthonormalize(block);
      rayleigh_ritz(h, block);
    }
    cols.insert(cols.end(), block.begin(), block.end());
    k = j + 1;
  }
  orthonormalize(cols);

  std::array<double, 4> energy{};
  for (std::size_t k = 0; k < 4; ++k) energy[k] = dot(cols[k], h.apply(cols[k])).real();
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return energy[a] < energy[b]; });

  for (std::size_t k = 0; k < 4; ++k) {
    Amplitudes v = cols[order[k]];
    for (const auto& z : v) {
      if (std::abs(z) > 1e-12) {
        scale_in_place(v, std::conj(z) / std::abs(z));
        break;
      }
    }
    sd.vectors.set_column(k, v);
    sd.energies[k] = energy[order[k]];
    sd.mu[k] = (sd.energies[k] - sd.shift) / sd.scale;
  }
  return sd;
}

Matrix4c mode_coefficients(const SpectralDecomposition& sd, const StateVector4& b0) {
  const Amplitudes c = solve_linear(sd.vectors, b0.amplitudes());
  Matrix4c lambda;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) lambda(j, k) = sd.vectors(j, k) * c[k];
  return lambda;
}

ClosedFormPropagator::ClosedFormPropagator(SpectralDecomposition sd, const StateVector4& b0)
    : sd_(std::move(sd)), lambda_(mode_coefficients(sd_, b0)) {}

StateVector4 ClosedFormPropagator::at(double t) const {
  std::array<Complex, 4> phase{};
  for (std::size_t k = 0; k < 4; ++k) phase[k] = std::polar(1.0, -sd_.energies[k] * t);
  Amplitudes b{};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) b[j] += lambda_(j, k) * phase[k];
  return StateVector4(b);
}

StateVector4 propagate_closed_form(const SpectralDecomposition& sd, const StateVector4& b0, double t) {
  return ClosedFormPropagator(sd, b0).at(t);
}

}  // namespace qdghz
