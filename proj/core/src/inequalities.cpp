#include "eprsim/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

constexpr double kBaseTolerance = 1e-9;

// Channel evaluation at a reduced relative angle, with the normalization
// gate every consumer of channel probabilities goes through.
struct CheckedChannels {
  double correlation;
  double std_error;
};

CheckedChannels checked(const CorrelationModel& model, double phi) {
  const ChannelSet set = model.channels(phi);
  const double tol = std::max(kBaseTolerance, 4.0 * set.std_error);
  if (!(std::abs(set.sum() - 1.0) <= tol))
    throw DataError("model '" + model.id() + "': channel probabilities sum to " +
                    std::to_string(set.sum()) + " at phi = " + std::to_string(phi));
  return {set.correlation(), set.std_error};
}

// One checked evaluation per distinct reduced angle. Monte Carlo models key
// their stream on the reduced angle, so equal keys return the identical
// estimate and the error propagation below must merge them.
class PairCache {
 public:
  explicit PairCache(const CorrelationModel& model) : model_(model) {}

  int key(double a, double b) {
    const double r = reduce_mod_pi(b - a);
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] == r) return static_cast<int>(i);
    keys_.push_back(r);
    values_.push_back(checked(model_, r));
    return static_cast<int>(keys_.size()) - 1;
  }
  double value(int k) const { return values_[k].correlation; }
  double error(int k) const { return values_[k].std_error; }

 private:
  const CorrelationModel& model_;
  std::vector<double> keys_;
  std::vector<CheckedChannels> values_;
};

// sqrt(sum over distinct estimates of (net coefficient * sigma)^2)
double propagate(const PairCache& cache, const std::vector<std::pair<int, double>>& terms) {
  double var = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen = seen || terms[j].first == terms[i].first;
    if (seen) continue;
    double net = 0.0;
    for (const auto& [k, c] : terms)
      if (k == terms[i].first) net += c;
    const double s = net * cache.error(terms[i].first);
    var += s * s;
  }
  return std::sqrt(var);
}

}  // namespace

double correlation_from_channels(const CorrelationModel& model, double a, double b) {
  return checked(model, reduce_mod_pi(b - a)).correlation;
}

CorrelationCurve correlation_curve(const CorrelationModel& model,
                                   const std::vector<std::pair<double, double>>& settings) {
  CorrelationCurve curve;
  curve.settings = settings;
  curve.model_id = model.id();
  curve.method = model.provenance();
  curve.values.reserve(settings.size());
  curve.std_errors.reserve(settings.size());
  for (const auto& [a, b] : settings) {
    const CheckedChannels cc = checked(model, reduce_mod_pi(b - a));
    curve.values.push_back(cc.correlation);
    curve.std_errors.push_back(cc.std_error);
  }
  return curve;
}

std::string_view to_string(InequalityName name) {
  return name == InequalityName::bell_original ? "bell_original" : "chsh";
}

InequalityReport bell_original_check(const CorrelationModel& model, double a, double b,
                                     double c) {
  PairCache cache(model);
  const int kbc = cache.key(b, c);
  const int kab = cache.key(a, b);
  const int kac = cache.key(a, c);

  InequalityReport report;
  report.name = InequalityName::bell_original;
  report.settings = {a, b, c};
  report.lhs = 1.0 + cache.value(kbc);
  report.rhs = std::abs(cache.value(kab) - cache.value(kac));
  report.margin = report.lhs - report.rhs;

  const double s = cache.value(kab) >= cache.value(kac) ? 1.0 : -1.0;
  const double sigma = propagate(cache, {{kbc, 1.0}, {kab, -s}, {kac, s}});
  report.tolerance = std::max(kBaseTolerance, 4.0 * sigma);
  report.satisfied = report.margin >= -report.tolerance;
  return report;
}

InequalityReport chsh_value(const CorrelationModel& model, double a, double a2, double b,
                            double b2) {
  PairCache cache(model);
  const int kab = cache.key(a, b);
  const int kab2 = cache.key(a, b2);
  const int ka2b = cache.key(a2, b);
  const int ka2b2 = cache.key(a2, b2);

  const double s =
      cache.value(kab) - cache.value(kab2) + cache.value(ka2b) + cache.value(ka2b2);

  InequalityReport report;
  report.name = InequalityName::chsh;
  report.settings = {a, a2, b, b2};
  report.lhs = std::abs(s);
  report.rhs = 2.0;
  report.margin = report.rhs - report.lhs;
  report.violation_factor = report.lhs / 2.0;

  const double sigma =
      propagate(cache, {{kab, 1.0}, {kab2, -1.0}, {ka2b, 1.0}, {ka2b2, 1.0}});
  report.tolerance = std::max(kBaseTolerance, 4.0 * sigma);
  report.satisfied = report.margin >= -report.tolerance;
  return report;
}

InequalityReport scan_for_max_violation(const CorrelationModel& model, int grid_density) {
  if (grid_density < 4)
    throw ConfigError("scan_for_max_violation: grid density must be >= 4, got " +
                      std::to_string(grid_density));
  const int n = grid_density;
  const double step = kPi / n;

  // All correlations on the grid depend on the index difference only.
  std::vector<CheckedChannels> by_diff;
  by_diff.reserve(n);
  for (int k = 0; k < n; ++k) by_diff.push_back(checked(model, k * step));

  double best_lhs = -1.0;
  std::array<int, 4> best{0, 0, 0, 0};
  double best_sigma = 0.0;
  std::vector<double> net(n);
  for (int ja = 0; ja < n; ++ja)
    for (int ja2 = 0; ja2 < n; ++ja2)
      for (int jb = 0; jb < n; ++jb)
        for (int jb2 = 0; jb2 < n; ++jb2) {
          const int k1 = (jb - ja + n) % n;
          const int k2 = (jb2 - ja + n) % n;
          const int k3 = (jb - ja2 + n) % n;
          const int k4 = (jb2 - ja2 + n) % n;
          const double s = by_diff[k1].correlation - by_diff[k2].correlation +
                           by_diff[k3].correlation + by_diff[k4].correlation;
          const double lhs = std::abs(s);
          if (lhs > best_lhs) {
            best_lhs = lhs;
            best = {ja, ja2, jb, jb2};
            const std::array<std::pair<int, double>, 4> terms{
                {{k1, 1.0}, {k2, -1.0}, {k3, 1.0}, {k4, 1.0}}};
            for (const auto& [k, c] : terms) net[k] += c;
            double var = 0.0;
            for (const auto& [k, c] : terms) {
              const double x = net[k] * by_diff[k].std_error;
              var += x * x;
              net[k] = 0.0;  // each distinct estimate counted once
            }
            best_sigma = std::sqrt(var);
          }
        }

  InequalityReport report;
  report.name = InequalityName::chsh;
  report.settings = {best[0] * step, best[1] * step, best[2] * step, best[3] * step};
  report.lhs = best_lhs;
  report.rhs = 2.0;
  report.margin = report.rhs - report.lhs;
  report.violation_factor = report.lhs / 2.0;
  report.tolerance = std::max(kBaseTolerance, 4.0 * best_sigma);
  report.satisfied = report.margin >= -report.tolerance;
  return report;
}

}  // namespace eprsim
