#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "eprsim/angle.hpp"
#include "eprsim/qm_reference.hpp"
#include "test_support.hpp"

using namespace eprsim;

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;

// Independent check for the singlet probabilities: rotate the coefficient
// vector of (|xy> - |yx>)/sqrt(2) at station 1 by phi with the standard
// 2x2 rotation matrix (tensored with the identity) and square the four
// coefficients. Basis order xx, xy, yx, yy.
std::array<double, 4> rotated_singlet_probabilities(double phi) {
  const std::array<double, 4> c{0.0, kInvSqrt2, -kInvSqrt2, 0.0};
  const double cs = std::cos(phi), sn = std::sin(phi);
  const std::array<double, 4> r{
      cs * c[0] - sn * c[2],
      cs * c[1] - sn * c[3],
      sn * c[0] + cs * c[2],
      sn * c[1] + cs * c[3],
  };
  return {r[0] * r[0], r[1] * r[1], r[2] * r[2], r[3] * r[3]};
}
}  // namespace

TEST_CASE("spinor evolution matches the closed-form precession state") {
  const PrecessionParams params{1.0};

  SUBCASE("t = 0: equal real amplitudes") {
    const Spinor s = evolve_spinor(0.0, params);
    CHECK(s.up.real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(s.up.imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(s.down.real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
  }

  SUBCASE("t = 2 pi / omega: global sign flip after one full period") {
    const Spinor s = evolve_spinor(2.0 * kPi, params);
    CHECK(s.up.real() == doctest::Approx(-kInvSqrt2).epsilon(1e-12));
    CHECK(std::abs(s.up.imag()) < 1e-12);
    CHECK(s.down.real() == doctest::Approx(-kInvSqrt2).epsilon(1e-12));
  }

  SUBCASE("t = pi / omega: purely imaginary half-period state (-i, +i)/sqrt(2)") {
    const Spinor s = evolve_spinor(kPi, params);
    CHECK(std::abs(s.up.real()) < 1e-12);
    CHECK(s.up.imag() == doctest::Approx(-kInvSqrt2).epsilon(1e-12));
    CHECK(s.down.imag() == doctest::Approx(+kInvSqrt2).epsilon(1e-12));
  }

  SUBCASE("omega scaling: phase depends on omega * t only") {
    const Spinor a = evolve_spinor(0.4, PrecessionParams{2.5});
    const Spinor b = evolve_spinor(1.0, PrecessionParams{1.0});
    CHECK(std::abs(a.up - b.up) < 1e-14);
    CHECK(std::abs(a.down - b.down) < 1e-14);
  }

  SUBCASE("non-finite time rejected") {
    CHECK_THROWS_AS(evolve_spinor(std::nan(""), params), std::domain_error);
    CHECK_THROWS_AS(evolve_spinor(INFINITY, params), std::domain_error);
  }

  SUBCASE("normalization holds for arbitrary times") {
    test_support::UniformSampler u(11);
    for (int i = 0; i < 200; ++i) {
      const double t = u.next(-50.0, 50.0);
      CHECK(std::abs(evolve_spinor(t, params).norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("transverse expectations trace the radius-1/2 circle") {
  const PrecessionParams params{1.0};

  SUBCASE("t = 0 gives (1/2, 0)") {
    const auto [sx, sy] = transverse_expectations(evolve_spinor(0.0, params));
    CHECK(sx == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(sy) < 1e-14);
  }

  SUBCASE("quarter period gives (0, 1/2)") {
    const auto [sx, sy] = transverse_expectations(evolve_spinor(kPi / 2.0, params));
    CHECK(std::abs(sx) < 1e-12);
    CHECK(sy == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("z eigenstate has zero transverse expectation") {
    const auto [sx, sy] = transverse_expectations(Spinor{{1.0, 0.0}, {0.0, 0.0}});
    CHECK(sx == 0.0);
    CHECK(sy == 0.0);
  }

  SUBCASE("unnormalized spinor rejected") {
    CHECK_THROWS_AS(transverse_expectations(Spinor{{0.8, 0.0}, {0.7, 0.0}}),
                    std::invalid_argument);
  }

  SUBCASE("sx^2 + sy^2 = 1/4 along the whole evolution") {
    test_support::UniformSampler u(3);
    for (int i = 0; i < 200; ++i) {
      const double t = u.next(-20.0, 20.0);
      const auto [sx, sy] = transverse_expectations(evolve_spinor(t, params));
      CHECK(std::abs(sx * sx + sy * sy - 0.25) < 1e-12);
      CHECK(sx == doctest::Approx(0.5 * std::cos(t)).epsilon(1e-12));
      CHECK(sy == doctest::Approx(0.5 * std::sin(t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("singlet prediction: channel probabilities and correlation") {
  SUBCASE("phi = 0: aligned analyzers never coincide in the same channel") {
    const SingletPrediction p = singlet_prediction(0.0);
    CHECK(p.p_pp == 0.0);
    CHECK(p.p_pm == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.correlation == doctest::Approx(-1.0).epsilon(1e-14));
  }

  SUBCASE("phi = pi/2: crossed analyzers always coincide") {
    const SingletPrediction p = singlet_prediction(kPi / 2.0);
    CHECK(p.p_pp == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.correlation == doctest::Approx(+1.0).epsilon(1e-14));
  }

  SUBCASE("phi = pi/4: flat distribution, zero correlation") {
    const SingletPrediction p = singlet_prediction(kPi / 4.0);
    CHECK(p.p_pp == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p.p_pm == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(p.correlation) < 1e-14);
  }

  SUBCASE("non-finite angle rejected") {
    CHECK_THROWS_AS(singlet_prediction(std::nan("")), std::domain_error);
  }

  SUBCASE("invariants on random angles") {
    test_support::UniformSampler u(17);
    for (int i = 0; i < 300; ++i) {
      const double phi = u.next(-12.0, 12.0);
      const SingletPrediction p = singlet_prediction(phi);
      CHECK(std::abs(p.p_pp + p.p_pm + p.p_mp + p.p_mm - 1.0) < 1e-12);
      CHECK(std::abs(p.correlation - ((p.p_pp + p.p_mm) - (p.p_pm + p.p_mp))) < 1e-12);
      CHECK(p.p_pp == p.p_mm);
      CHECK(p.p_pm == p.p_mp);
      CHECK(p.p_pp >= 0.0);
      CHECK(p.p_pp <= 0.5 + 1e-12);
      CHECK(std::abs(p.correlation) <= 1.0 + 1e-12);
      CHECK(p.correlation == doctest::Approx(-std::cos(2.0 * phi)).epsilon(1e-12));
    }
  }

  SUBCASE("half-turn periodicity") {
    test_support::UniformSampler u(23);
    for (int i = 0; i < 100; ++i) {
      const double phi = u.next(0.0, kPi);
      const SingletPrediction a = singlet_prediction(phi);
      const SingletPrediction b = singlet_prediction(phi + kPi);
      CHECK(a.p_pp == doctest::Approx(b.p_pp).epsilon(1e-12));
      CHECK(a.correlation == doctest::Approx(b.correlation).epsilon(1e-12));
    }
  }

  SUBCASE("rotation consistency against the explicit coefficient rotation") {
    test_support::UniformSampler u(29);
    for (int i = 0; i < 100; ++i) {
      const double phi = u.next(0.0, kPi);
      const auto probs = rotated_singlet_probabilities(phi);
      const SingletPrediction p = singlet_prediction(phi);
      CHECK(std::abs(p.p_pp - probs[0]) < 1e-12);  // both in rotated x'
      CHECK(std::abs(p.p_pm - probs[1]) < 1e-12);
      CHECK(std::abs(p.p_mp - probs[2]) < 1e-12);
      CHECK(std::abs(p.p_mm - probs[3]) < 1e-12);
    }
  }
}
