#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qdghz/errors.hpp"
#include "qdghz/observables.hpp"
#include "support/reference.hpp"

using namespace qdghz;

namespace {
const double kR = 1.0 / std::sqrt(2.0);
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("overlap with the GHZ target") {
  const auto vacuum = StateVector4::basis(0);
  for (double tau : {0.0, 0.3, kPi, -2.0}) CHECK(ghz_probability(vacuum, tau) == doctest::Approx(0.5).epsilon(1e-15));

  const StateVector4 ghz({kR, 0.0, 0.0, kR});
  CHECK(ghz_probability(ghz, 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  const StateVector4 anti({kR, 0.0, 0.0, -kR});
  CHECK(ghz_probability(anti, 0.0) < 1e-15);
  CHECK(ghz_probability(anti, kPi) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("overlap maximized over the GHZ phase") {
  const auto best = ghz_probability_max(StateVector4({kR, 0.0, 0.0, -kR}));
  CHECK(best.p_ghz_max == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(best.tau_star == doctest::Approx(kPi).epsilon(1e-15));

  const auto vac = ghz_probability_max(StateVector4::basis(0));
  CHECK(vac.p_ghz_max == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vac.tau_star == 0.0);

  // Spin-3/2 rotation at omega t = pi/4: |B0| = |B3| = cos^3(pi/4).
  const double c3 = std::pow(std::cos(kPi / 4.0), 3);
  const double s = std::sqrt(3.0) * c3;
  const StateVector4 rotated({c3, Complex(0.0, -s), -s, Complex(0.0, c3)});
  CHECK(ghz_probability_max(rotated).p_ghz_max == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(ghz_probability_max(rotated).tau_star == doctest::Approx(kPi / 2.0).epsilon(1e-14));
}

TEST_CASE("populations") {
  const auto p = populations(StateVector4::basis(0));
  CHECK(p == std::array<double, 4>{1.0, 0.0, 0.0, 0.0});
  const auto q = populations(StateVector4({0.5, 0.5, 0.5, 0.5}));
  for (double v : q) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));

  const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
  const StateVector4 rotated({c * c * c, Complex(0.0, -std::sqrt(3.0) * c * c * s), -std::sqrt(3.0) * c * s * s,
                              Complex(0.0, s * s * s)});
  const auto r = populations(rotated);
  const std::array<double, 4> expected{1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8};
  for (std::size_t i = 0; i < 4; ++i) CHECK(r[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("report separates vacuum from true GHZ proximity") {
  const auto vac = ghz_report(StateVector4::basis(0), 0.0);
  const auto ghz = ghz_report(StateVector4({kR, 0.0, 0.0, kR}), 0.0);
  CHECK(vac.residual_population == 0.0);
  CHECK(vac.p_ghz == doctest::Approx(0.5));
  CHECK(ghz.p_ghz == doctest::Approx(1.0));
  const auto mixed = ghz_report(StateVector4({0.5, 0.5, 0.5, 0.5}), 0.0);
  CHECK(mixed.residual_population == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("properties over random states") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int n = 0; n < 1000; ++n) {
    const StateVector4 state(reference::random_state(rng));
    const auto best = ghz_probability_max(state);
    CHECK(best.p_ghz_max <= 1.0);
    CHECK(std::abs(ghz_probability(state, best.tau_star) - best.p_ghz_max) < 1e-14);
    const double theta = angle(rng);
    Amplitudes rotated = state.amplitudes();
    for (auto& z : rotated) z *= std::polar(1.0, theta);
    const StateVector4 phased(rotated);

    for (int k = 0; k < 100; ++k) {
      const double tau = angle(rng);
      const double p = ghz_probability(state, tau);
      CHECK(p >= 0.0);
      CHECK(p <= best.p_ghz_max + 1e-15);
      CHECK(std::abs(p - ghz_probability(state, tau + 2.0 * kPi)) < 1e-14);
      CHECK(std::abs(p - ghz_probability(phased, tau)) < 1e-14);
    }
  }
}

TEST_CASE("state vectors must be normalized") {
  CHECK_THROWS_AS(StateVector4({1.0, 1.0, 0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(StateVector4::normalized({}), ValidationError);
  CHECK_NOTHROW(StateVector4({1.0 + 1e-10, 0.0, 0.0, 0.0}));
  const auto n = StateVector4::normalized({2.0, 0.0, 0.0, 2.0});
  CHECK(n[0].real() == doctest::Approx(kR));
}
