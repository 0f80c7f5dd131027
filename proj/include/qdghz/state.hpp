#pragma once

#include "qdghz/matrix4.hpp"

namespace qdghz {

/// Amplitudes (B0, B1, B2, B3) over the exciton ladder |0> vacuum, |1> single,
/// |2> biexciton, |3> triexciton. Always unit norm to within kNormTolerance.
class StateVector4 {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// Throws ValidationError when the norm is off by more than kNormTolerance.
  explicit StateVector4(const Amplitudes& amplitudes);

  /// Rescales a raw vector to unit norm. Throws ValidationError for a zero or non-finite vector.
  static StateVector4 normalized(const Amplitudes& raw);
  static StateVector4 basis(std::size_t level);

  const Complex& operator[](std::size_t i) const { return b_[i]; }
  const Amplitudes& amplitudes() const { return b_; }
  double norm_squared() const;

 private:
  Amplitudes b_;
};

double norm_squared(const Amplitudes& v);

}  // namespace qdghz
