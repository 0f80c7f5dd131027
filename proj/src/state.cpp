#include "qdghz/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdghz/errors.hpp"

namespace qdghz {

double norm_squared(const Amplitudes& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

StateVector4::StateVector4(const Amplitudes& amplitudes) : b_(amplitudes) {
  const double n2 = qdghz::norm_squared(b_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw ValidationError("state", "norm squared " + std::to_string(n2) + " is not 1");
  }
}

StateVector4 StateVector4::normalized(const Amplitudes& raw) {
  const double n2 = qdghz::norm_squared(raw);
  if (!std::isfinite(n2) || n2 == 0.0) {
    throw ValidationError("state", "cannot normalize a zero or non-finite vector");
  }
  const double inv = 1.0 / std::sqrt(n2);
  Amplitudes b = raw;
  for (auto& z : b) z *= inv;
  return StateVector4(b);
}

StateVector4 StateVector4::basis(std::size_t level) {
  if (level > 3) throw ValidationError("state", "ladder level out of range");
  Amplitudes b{};
  b[level] = 1.0;
  return StateVector4(b);
}

double StateVector4::norm_squared() const { return qdghz::norm_squared(b_); }

Amplitudes solve_linear(Matrix4c a, Amplitudes rhs) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Complex{}) throw std::domain_error("solve_linear: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < 4; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t r = col + 1; r < 4; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  Amplitudes x{};
  for (std::size_t i = 4; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t j = i + 1; j < 4; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace qdghz
