#pragma once

#include <string_view>

namespace eprsim {

enum class Provenance { closed_form, quadrature, monte_carlo };

std::string_view to_string(Provenance p);

/// A numeric result together with its uncertainty. For Monte Carlo results
/// std_error is the standard error of the mean; for quadrature it is the
/// residual between two refinement levels. bias is nonzero only for the
/// grouped squared-inner-mean estimator, which overshoots the target by the
/// inner variance divided by the group size; unbiased() subtracts the
/// estimated overshoot.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  Provenance method = Provenance::closed_form;
  double bias = 0.0;

  double unbiased() const { return value - bias; }
};

}  // namespace eprsim
