#include "eprsim/lhv_models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/rng.hpp"

namespace eprsim {

namespace {
constexpr double kQuadratureTolerance = 1e-9;

void require_converged(const Estimate& e, const char* what) {
  if (e.std_error > kQuadratureTolerance)
    throw NumericError(std::string(what) + ": quadrature residual " +
                           std::to_string(e.std_error) + " above tolerance",
                       e.std_error);
}
}  // namespace

double naive_coincidence_intensity(double theta, double phi) {
  const double a = std::cos(theta);
  const double b = std::cos(theta - phi);
  return a * a * b * b;
}

double naive_model_probability(double phi) {
  // theta-average 1/4 + cos(2 phi)/8, divided by the pair rate 1/2.
  return 0.5 + 0.25 * std::cos(2.0 * phi);
}

double amplitude_a(const HiddenVars& hv) {
  return std::cos(hv.theta) * std::cos(hv.gamma_x) +
         std::sin(hv.theta) * std::cos(hv.gamma_y);
}

double amplitude_b(const HiddenVars& hv, double phi) {
  return std::cos(hv.theta + phi) * std::cos(hv.gamma_x) +
         std::sin(hv.theta + phi) * std::cos(hv.gamma_y);
}

AmplitudePair evaluate_amplitudes(const HiddenVars& hv, double phi) {
  return {amplitude_a(hv), amplitude_b(hv, phi)};
}

Estimate unpolarized_inner_average(double theta, double phi, const QuadratureSpec& spec) {
  // Double mean over the phase offsets as two nested 1-axis passes.
  const QuadratureSpec outer{spec.rule, spec.points_per_axis, {spec.domain.at(0)}};
  const QuadratureSpec inner{spec.rule, spec.points_per_axis, {spec.domain.at(1)}};
  double worst_inner = 0.0;
  const auto gamma_x_integrand = [&](double gx) {
    const auto gamma_y_integrand = [&](double gy) {
      const HiddenVars hv{theta, gx, gy};
      return amplitude_a(hv) * amplitude_b(hv, phi);
    };
    const Estimate ei = integrate_1d(gamma_y_integrand, inner);
    worst_inner = std::max(worst_inner, ei.std_error);
    return ei.value;
  };
  Estimate e = integrate_1d(gamma_x_integrand, outer);
  const double area = outer.domain[0].length() * inner.domain[0].length();
  e.value /= area;
  e.std_error = (e.std_error + worst_inner * outer.domain[0].length()) / area;
  require_converged(e, "unpolarized_inner_average");
  return e;
}

Estimate unpolarized_model_probability(double phi, Method method, std::optional<MCConfig> mc,
                                       int mc_group, const QuadratureSpec& spec) {
  if (method == Method::monte_carlo && !mc)
    throw ConfigError("unpolarized_model_probability: monte_carlo needs an MCConfig");
  if (method == Method::quadrature && mc)
    throw ConfigError("unpolarized_model_probability: MCConfig given but method is quadrature");

  const auto integrand = [phi](const HiddenVars& hv) {
    return amplitude_a(hv) * amplitude_b(hv, phi);
  };

  if (method == Method::quadrature) {
    Estimate e = integrate_3d_nested(
        [&integrand](double th, double gx, double gy) {
          return integrand(HiddenVars{th, gx, gy});
        },
        /*inner_square=*/true, spec);
    require_converged(e, "unpolarized_model_probability");
    e.value *= 2.0;  // divide by the pair production rate 1/2
    e.std_error *= 2.0;
    return e;
  }

  MCConfig derived = *mc;
  derived.seed = derive_seed(mc->seed, std::bit_cast<std::uint64_t>(reduce_mod_pi(phi)));
  Estimate e = mc_estimate(integrand, derived, mc_group);
  e.value *= 2.0;
  e.std_error *= 2.0;
  e.bias *= 2.0;
  return e;
}

int sign_model_outcome(double analyzer, double lambda) {
  return std::cos(2.0 * (analyzer - lambda)) >= 0.0 ? +1 : -1;
}

}  // namespace eprsim
