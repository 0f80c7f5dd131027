#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qdghz {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 4>;

/// Dense 4x4 complex matrix, row-major.
class Matrix4c {
 public:
  constexpr Matrix4c() = default;

  static Matrix4c identity() {
    Matrix4c m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * 4 + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * 4 + col]; }

  Amplitudes column(std::size_t col) const {
    return {(*this)(0, col), (*this)(1, col), (*this)(2, col), (*this)(3, col)};
  }
  void set_column(std::size_t col, const Amplitudes& v) {
    for (std::size_t i = 0; i < 4; ++i) (*this)(i, col) = v[i];
  }

  Matrix4c adjoint() const;
  double max_abs() const;

  friend Matrix4c operator*(const Matrix4c& a, const Matrix4c& b);
  friend Amplitudes operator*(const Matrix4c& a, const Amplitudes& v);
  friend bool operator==(const Matrix4c&, const Matrix4c&) = default;

 private:
  std::array<Complex, 16> data_{};
};

inline Matrix4c Matrix4c::adjoint() const {
  Matrix4c out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

inline double Matrix4c::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

inline Matrix4c operator*(const Matrix4c& a, const Matrix4c& b) {
  Matrix4c out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < 4; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Amplitudes operator*(const Matrix4c& a, const Amplitudes& v) {
  Amplitudes out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += a(i, j) * v[j];
  return out;
}

/// Solves a * x = rhs by Gaussian elimination with partial pivoting.
/// Throws std::domain_error if `a` is numerically singular.
Amplitudes solve_linear(Matrix4c a, Amplitudes rhs);

}  // namespace qdghz
