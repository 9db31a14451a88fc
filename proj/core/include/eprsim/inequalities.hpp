#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eprsim/correlation_model.hpp"

namespace eprsim {

/// Correlation values E(a, b) of one model over a list of analyzer pairs.
struct CorrelationCurve {
  std::vector<std::pair<double, double>> settings;  ///< (a, b) in radians
  std::vector<double> values;
  std::vector<double> std_errors;
  std::string model_id;
  Provenance method = Provenance::closed_form;
};

CorrelationCurve correlation_curve(const CorrelationModel& model,
                                   const std::vector<std::pair<double, double>>& settings);

/// E(a, b) = p++ + p-- - p+- - p-+ at phi = b - a. Throws DataError if the
/// four channel probabilities are not normalized within max(1e-9, 4 sigma).
double correlation_from_channels(const CorrelationModel& model, double a, double b);

enum class InequalityName { bell_original, chsh };

std::string_view to_string(InequalityName name);

/// Evaluated sides of a Bell-type constraint. margin is the signed slack
/// (nonnegative iff the constraint holds) and the verdict allows the
/// propagated numeric tolerance max(1e-9, 4 sigma).
struct InequalityReport {
  InequalityName name = InequalityName::bell_original;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool satisfied = true;
  std::vector<double> settings;  ///< the analyzer angles used, radians
  double tolerance = 1e-9;
  std::optional<double> violation_factor;  ///< chsh only: lhs / 2
};

/// Three-setting constraint  1 + E(b,c) >= |E(a,b) - E(a,c)|.
/// Its derivation assumes dichotomic outcomes with perfect anti-correlation
/// at equal settings; the check evaluates the arithmetic for any model and
/// leaves the interpretation to the caller.
InequalityReport bell_original_check(const CorrelationModel& model, double a, double b,
                                     double c);

/// Four-setting constraint |E(a,b) - E(a,b2) + E(a2,b) + E(a2,b2)| <= 2,
/// with lhs/2 reported as the violation factor.
InequalityReport chsh_value(const CorrelationModel& model, double a, double a2, double b,
                            double b2);

/// Exhaustive CHSH scan over the four-fold grid {k pi / density}, k < density.
/// Returns the report with maximal lhs; ties keep the lexicographically
/// first quadruple. Requires density >= 4.
InequalityReport scan_for_max_violation(const CorrelationModel& model, int grid_density);

}  // namespace eprsim
