// Real roots of the monic characteristic quartic via Ferrari's resolvent cubic.
//
// With mu = y - r1/4 the quartic becomes y^4 + p y^2 + q y + r. For the largest
// root m of the resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 it factors as
//
//   (y^2 - s y + p/2 + m + q/(2s)) (y^2 + s y + p/2 + m - q/(2s)),  s = sqrt(2m).
//
// Ferrari loses accuracy near repeated roots, so every root is polished against
// the original polynomial and close pairs are re-solved through the critical
// point between them.

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qdghz/errors.hpp"
#include "qdghz/spectral.hpp"

namespace qdghz {

namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kClusterTolerance = 1e-5;

// Coefficients low to high: r4, r3, r2, r1, 1.
std::array<double, 5> low_to_high(const QuarticCoefficients& c) { return {c.r4, c.r3, c.r2, c.r1, 1.0}; }

// k-th derivative of the quartic at x.
double derivative_at(const QuarticCoefficients& c, int k, double x) {
  const auto a = low_to_high(c);
  double acc = 0.0;
  for (int i = 4; i >= k; --i) {
    double factor = 1.0;
    for (int j = 0; j < k; ++j) factor *= static_cast<double>(i - j);
    acc = acc * x + factor * a[static_cast<std::size_t>(i)];
  }
  return acc;
}

double largest_resolvent_root(double a, double b, double c) {
  // m^3 + a m^2 + b m + c
  const double q = (a * a - 3.0 * b) / 9.0;
  const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
  double m;
  if (r * r < q * q * q) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q * q * q), -1.0, 1.0));
    const double sq = -2.0 * std::sqrt(q);
    const double two_pi = 2.0 * std::numbers::pi;
    m = std::max({sq * std::cos(theta / 3.0), sq * std::cos((theta + two_pi) / 3.0),
                  sq * std::cos((theta - two_pi) / 3.0)}) -
        a / 3.0;
  } else {
    const double big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q * q * q)), r);
    const double small = big == 0.0 ? 0.0 : q / big;
    m = big + small - a / 3.0;
  }
  auto f = [&](double x) { return ((x + a) * x + b) * x + c; };
  auto df = [&](double x) { return (3.0 * x + 2.0 * a) * x + b; };
  for (int i = 0; i < 8; ++i) {
    const double d = df(m);
    if (d == 0.0) break;
    const double next = m - f(m) / d;
    if (!(std::abs(f(next)) < std::abs(f(m)))) break;
    m = next;
  }
  return std::max(m, 0.0);
}

// Both roots of y^2 + b y + c without cancellation.
std::array<Complex, 2> quadratic_roots(Complex b, Complex c) {
  Complex sd = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * sd).real() < 0.0) sd = -sd;
  const Complex q = -0.5 * (b + sd);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q, c / q};
}

std::array<Complex, 4> ferrari(const QuarticCoefficients& co) {
  const double a = co.r1;
  const double a2 = a * a;
  const double p = co.r2 - 3.0 * a2 / 8.0;
  const double q = co.r3 - a * co.r2 / 2.0 + a2 * a / 8.0;
  const double r = co.r4 - a * co.r3 / 4.0 + a2 * co.r2 / 16.0 - 3.0 * a2 * a2 / 256.0;

  const double m = largest_resolvent_root(p, p * p / 4.0 - r, -q * q / 8.0);
  const double s = std::sqrt(2.0 * m);

  std::array<Complex, 4> y;
  if (s > 0.0) {
    const auto first = quadratic_roots(-s, p / 2.0 + m + q / (2.0 * s));
    const auto second = quadratic_roots(s, p / 2.0 + m - q / (2.0 * s));
    y = {first[0], first[1], second[0], second[1]};
  } else {
    // q == 0: biquadratic in y^2.
    const auto z = quadratic_roots(p, r);
    y = {std::sqrt(z[0]), -std::sqrt(z[0]), std::sqrt(z[1]), -std::sqrt(z[1])};
  }
  for (auto& v : y) v -= a / 4.0;
  return y;
}

double newton_polish(const QuarticCoefficients& c, double x) {
  for (int i = 0; i < 30; ++i) {
    const double f = c(x);
    const double df = c.derivative(x);
    if (f == 0.0 || df == 0.0) break;
    const double next = x - f / df;
    if (!(std::abs(c(next)) < std::abs(f))) break;
    x = next;
  }
  return x;
}

// Root of the k-th derivative near x, by Newton on that derivative.
double derivative_root(const QuarticCoefficients& c, int k, double x) {
  for (int i = 0; i < 50; ++i) {
    const double f = derivative_at(c, k, x);
    const double df = derivative_at(c, k + 1, x);
    if (f == 0.0 || df == 0.0) break;
    const double next = x - f / df;
    if (!(std::abs(derivative_at(c, k, next)) < std::abs(f))) break;
    x = next;
  }
  return x;
}

// Safeguarded Newton on [lo, hi] where the quartic changes sign.
double bracketed_root(const QuarticCoefficients& c, double lo, double hi) {
  double flo = c(lo);
  if (flo == 0.0) return lo;
  if (c(hi) == 0.0) return hi;
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    const double f = c(x);
    if (f == 0.0) return x;
    if ((f < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
    }
    const double df = c.derivative(x);
    double next = df != 0.0 ? x - f / df : 0.5 * (lo + hi);
    if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) next = 0.5 * (lo + hi);
    if (next == x || std::abs(hi - lo) <= 4.0 * DBL_EPSILON * std::abs(x)) return next;
    x = next;
  }
  return x;
}

double rounding_bound(const QuarticCoefficients& c, double x) { return 16.0 * DBL_EPSILON * c.magnitude(x); }

[[noreturn]] void complex_root(double re, double im) {
  throw ComplexRootResidual("quartic root " + std::to_string(re) + (im < 0 ? " - " : " + ") +
                            std::to_string(std::abs(im)) + "i is not real");
}

// Two roots that Ferrari placed close together, or as a near-real conjugate pair.
// The local extremum between them decides: a double root, two real roots, or a
// genuinely complex pair.
std::array<double, 2> resolve_pair(const QuarticCoefficients& c, double guess) {
  const double x = derivative_root(c, 1, guess);
  const double value = c(x);
  const double curvature = 0.5 * derivative_at(c, 2, x);
  if (std::abs(value) <= rounding_bound(c, x) || curvature == 0.0) return {x, x};
  const double disc = -value / curvature;
  if (disc < 0.0) {
    const double im = std::sqrt(-disc);
    if (im > kImagTolerance * std::max(1.0, std::abs(x))) complex_root(x, im);
    return {x, x};
  }
  const double half = std::sqrt(disc);
  std::array<double, 2> out{};
  for (int side = 0; side < 2; ++side) {
    const double dir = side == 0 ? -1.0 : 1.0;
    double reach = 2.0 * half;
    double outer = x + dir * reach;
    for (int i = 0; i < 60 && (c(outer) < 0.0) == (value < 0.0); ++i) {
      reach *= 2.0;
      outer = x + dir * reach;
    }
    out[static_cast<std::size_t>(side)] = bracketed_root(c, std::min(x, outer), std::max(x, outer));
  }
  return out;
}

}  // namespace

double QuarticCoefficients::magnitude(double mu) const {
  const double a = std::abs(mu);
  return (((a + std::abs(r1)) * a + std::abs(r2)) * a + std::abs(r3)) * a + std::abs(r4);
}

std::array<double, 4> solve_quartic(const QuarticCoefficients& c) {
  for (double v : {c.r1, c.r2, c.r3, c.r4})
    if (!std::isfinite(v)) throw ComplexRootResidual("quartic coefficients must be finite");

  auto z = ferrari(c);
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });

  std::array<double, 4> roots{};
  std::size_t k = 0;
  while (k < 4) {
    std::size_t j = k;
    while (j + 1 < 4 &&
           std::abs(z[j + 1] - z[j]) <= kClusterTolerance * std::max(1.0, std::abs(z[j]))) {
      ++j;
    }
    const std::size_t size = j - k + 1;
    double centre = 0.0;
    for (std::size_t i = k; i <= j; ++i) centre += z[i].real();
    centre /= static_cast<double>(size);

    if (size == 1) {
      if (std::abs(z[k].imag()) > kImagTolerance * std::max(1.0, std::abs(z[k]))) {
        complex_root(z[k].real(), z[k].imag());
      }
      roots[k] = newton_polish(c, z[k].real());
    } else if (size == 2) {
      const auto pair = resolve_pair(c, centre);
      roots[k] = pair[0];
      roots[k + 1] = pair[1];
    } else {
      // Three or four coincident roots: they meet where the (size-1)-th derivative vanishes.
      const double x = derivative_root(c, static_cast<int>(size) - 1, centre);
      const bool multiple = std::abs(c(x)) <= rounding_bound(c, x);
      for (std::size_t i = k; i <= j; ++i) {
        if (multiple) {
          roots[i] = x;
        } else {
          if (std::abs(z[i].imag()) > kImagTolerance * std::max(1.0, std::abs(z[i]))) {
            complex_root(z[i].real(), z[i].imag());
          }
          roots[i] = newton_polish(c, z[i].real());
        }
      }
    }
    k = j + 1;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qdghz
