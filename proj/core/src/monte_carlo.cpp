#include "eprsim/monte_carlo.hpp"

#include <cmath>
#include <string>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/rng.hpp"

namespace eprsim {

namespace {
// Stream ids for the three coordinates; counters index the draws.
constexpr std::uint64_t kThetaStream = 0;
constexpr std::uint64_t kGammaXStream = 1;
constexpr std::uint64_t kGammaYStream = 2;

void validate(const MCConfig& mc) {
  if (mc.samples < 1000)
    throw ConfigError("monte carlo: need at least 1000 samples, got " +
                      std::to_string(mc.samples));
}
}  // namespace

Estimate mc_estimate(const std::function<double(const HiddenVars&)>& f, const MCConfig& mc,
                     std::optional<int> inner_square_group) {
  validate(mc);
  const CounterRng rng(mc.seed);

  if (!inner_square_group) {
    const std::int64_t n = mc.samples;
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::uint64_t u = static_cast<std::uint64_t>(i);
      const HiddenVars hv{kPi * rng.uniform(kThetaStream, u),
                          kPi * rng.uniform(kGammaXStream, u),
                          kPi * rng.uniform(kGammaYStream, u)};
      const double v = f(hv);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) /
                                         static_cast<double>(n - 1));
    return {mean, std::sqrt(var / static_cast<double>(n)), Provenance::monte_carlo};
  }

  const int group = *inner_square_group;
  if (group < 2)
    throw ConfigError("monte carlo: inner-square group size must be >= 2, got " +
                      std::to_string(group));
  if (group > mc.samples)
    throw ConfigError("monte carlo: group size " + std::to_string(group) +
                      " exceeds sample count " + std::to_string(mc.samples));

  const std::int64_t n_groups = mc.samples / group;
  double sum_v = 0.0, sum_v_sq = 0.0, sum_bias = 0.0;
  for (std::int64_t g = 0; g < n_groups; ++g) {
    const double theta = kPi * rng.uniform(kThetaStream, static_cast<std::uint64_t>(g));
    double s = 0.0, s_sq = 0.0;
    for (int j = 0; j < group; ++j) {
      const std::uint64_t u = static_cast<std::uint64_t>(g) * group + j;
      const HiddenVars hv{theta, kPi * rng.uniform(kGammaXStream, u),
                          kPi * rng.uniform(kGammaYStream, u)};
      const double v = f(hv);
      s += v;
      s_sq += v * v;
    }
    const double m = s / group;
    // The squared group mean m^2 estimates mu^2 + Var/group; s2/group is an
    // unbiased estimate of the overshoot.
    const double s2 = std::max(0.0, (s_sq - group * m * m) / (group - 1));
    const double v = m * m;
    sum_v += v;
    sum_v_sq += v * v;
    sum_bias += s2 / group;
  }
  const double mean = sum_v / static_cast<double>(n_groups);
  double se = 0.0;
  if (n_groups > 1) {
    const double var = std::max(0.0, (sum_v_sq - static_cast<double>(n_groups) * mean * mean) /
                                         static_cast<double>(n_groups - 1));
    se = std::sqrt(var / static_cast<double>(n_groups));
  }
  return {mean, se, Provenance::monte_carlo, sum_bias / static_cast<double>(n_groups)};
}

}  // namespace eprsim
