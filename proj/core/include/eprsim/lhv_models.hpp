#pragma once

#include <optional>

#include "eprsim/estimate.hpp"
#include "eprsim/hidden_vars.hpp"
#include "eprsim/monte_carlo.hpp"
#include "eprsim/quadrature.hpp"

namespace eprsim {

enum class Method { quadrature, monte_carlo };

// --- Malus-law coincidence model -------------------------------------------
// Each pair carries one shared polarization angle theta; a station detects
// with probability proportional to the transmitted intensity.

/// Joint detection intensity cos^2(theta) * cos^2(theta - phi) for source
/// angle theta and relative analyzer angle phi.
double naive_coincidence_intensity(double theta, double phi);

/// Coincidence probability after averaging theta uniformly over [0, pi) and
/// dividing by the pair production rate 1/2:
///   (1/4 + cos(2 phi)/8) / (1/2)  =  1/2 + cos(2 phi)/4.
/// Nonzero minimum 1/4 at phi = pi/2.
double naive_model_probability(double phi);

// --- unpolarized two-component model ----------------------------------------
// Each station receives the sum of two independently phase-shifted
// polarization components; the detected signal is not norm-bounded by 1.

/// Station-1 signal amplitude cos(theta) cos(gamma_x) + sin(theta) cos(gamma_y).
double amplitude_a(const HiddenVars& hv);

/// Station-2 signal amplitude: amplitude_a with theta -> theta + phi.
double amplitude_b(const HiddenVars& hv, double phi);

/// Both station amplitudes for one draw. Magnitudes can reach sqrt(2).
struct AmplitudePair {
  double a_signal;
  double b_signal;
};
AmplitudePair evaluate_amplitudes(const HiddenVars& hv, double phi);

/// Mean of A*B over the phase offsets (gamma_x, gamma_y) in [0, pi]^2 with
/// the 1/pi^2 prefactor, by 2-axis quadrature. Analytically this contracts
/// to cos(phi)/2 independent of theta; it is computed, not assumed.
/// Throws NumericError if the quadrature residual exceeds 1e-9.
Estimate unpolarized_inner_average(double theta, double phi,
                                   const QuadratureSpec& spec = half_turn_spec(2));

/// Full coincidence probability of the model: the theta-average of the
/// squared inner phase average, divided by the pair production rate 1/2.
///
/// method selects nested quadrature or the grouped Monte Carlo estimator;
/// an MCConfig must be supplied exactly when method == monte_carlo. The
/// grouped path reports its raw (biased-high) value with the bias estimate
/// alongside; consumers wanting the unbiased number use Estimate::unbiased().
Estimate unpolarized_model_probability(double phi, Method method,
                                       std::optional<MCConfig> mc = std::nullopt,
                                       int mc_group = 256,
                                       const QuadratureSpec& spec = half_turn_spec(3));

// --- dichotomic sign model ----------------------------------------------------
/// A concrete +-1 outcome function of a shared hidden angle:
/// sign(cos 2(analyzer - lambda)), ties at zero broken to +1.
int sign_model_outcome(double analyzer, double lambda);

}  // namespace eprsim
