#include "eprsim/qm_reference.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "eprsim/angle.hpp"

namespace eprsim {

namespace {

using Cx = std::complex<double>;
using Mat2c = std::array<std::array<Cx, 2>, 2>;

constexpr Mat2c kSigmaX{{{Cx(0, 0), Cx(1, 0)}, {Cx(1, 0), Cx(0, 0)}}};
constexpr Mat2c kSigmaY{{{Cx(0, 0), Cx(0, -1)}, {Cx(0, 1), Cx(0, 0)}}};

// <psi| (sigma/2) |psi>, real by hermiticity.
double half_sigma_expectation(const Spinor& psi, const Mat2c& sigma) {
  const std::array<Cx, 2> v{psi.up, psi.down};
  Cx acc(0, 0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) acc += std::conj(v[r]) * sigma[r][c] * v[c];
  return 0.5 * acc.real();
}

}  // namespace

Spinor evolve_spinor(double t, const PrecessionParams& params) {
  if (!std::isfinite(t)) throw std::domain_error("evolve_spinor: non-finite time");
  if (!std::isfinite(params.omega))
    throw std::domain_error("evolve_spinor: non-finite omega");
  const double half_phase = 0.5 * params.omega * t;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {std::polar(inv_sqrt2, -half_phase), std::polar(inv_sqrt2, +half_phase)};
}

std::pair<double, double> transverse_expectations(const Spinor& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("transverse_expectations: spinor is not normalized");
  return {half_sigma_expectation(psi, kSigmaX), half_sigma_expectation(psi, kSigmaY)};
}

SingletPrediction singlet_prediction(double phi) {
  if (!std::isfinite(phi)) throw std::domain_error("singlet_prediction: non-finite angle");
  const double reduced = reduce_mod_pi(phi);
  const double s = std::sin(reduced);
  const double c = std::cos(reduced);
  const double same = 0.5 * s * s;   // both photons in the same primed channel
  const double cross = 0.5 * c * c;  // opposite channels
  SingletPrediction out;
  out.phi = reduced;
  out.p_pp = same;
  out.p_mm = same;
  out.p_pm = cross;
  out.p_mp = cross;
  out.correlation = (out.p_pp + out.p_mm) - (out.p_pm + out.p_mp);
  return out;
}

}  // namespace eprsim
