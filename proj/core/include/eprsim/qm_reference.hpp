#pragma once

#include <complex>
#include <utility>

namespace eprsim {

/// Two-component spin state. Physical states satisfy |up|^2 + |down|^2 = 1.
struct Spinor {
  std::complex<double> up;
  std::complex<double> down;

  double norm() const { return std::sqrt(std::norm(up) + std::norm(down)); }
};

/// Larmor angular frequency for precession about z; the sign carries the
/// field orientation. Units: hbar = 1 and spin operators are sigma/2, so
/// transverse expectation values have amplitude 1/2.
struct PrecessionParams {
  double omega = 1.0;
};

/// State at time t of a spin prepared in the transverse plane:
/// (e^{-i w t / 2}, e^{+i w t / 2}) / sqrt(2).
/// Throws std::domain_error for non-finite t.
Spinor evolve_spinor(double t, const PrecessionParams& params);

/// (<S_x>, <S_y>) of a normalized spinor, evaluated with the Pauli matrices
/// in the S = sigma/2 convention. For evolve_spinor(t) this traces the
/// circle ((1/2) cos wt, (1/2) sin wt). Throws std::invalid_argument if psi
/// deviates from unit norm by more than 1e-9.
std::pair<double, double> transverse_expectations(const Spinor& psi);

/// Joint channel probabilities and correlation of the two-photon
/// polarization singlet at relative analyzer angle phi:
///   p_pp = p_mm = sin^2(phi) / 2,   p_pm = p_mp = cos^2(phi) / 2,
///   correlation = -cos(2 phi).
struct SingletPrediction {
  double phi;  ///< reduced to [0, pi)
  double p_pp;
  double p_pm;
  double p_mp;
  double p_mm;
  double correlation;
};

/// phi may be any finite real; it is reduced mod pi (all coefficients are
/// half-turn periodic after squaring). Throws std::domain_error otherwise.
SingletPrediction singlet_prediction(double phi);

}  // namespace eprsim
