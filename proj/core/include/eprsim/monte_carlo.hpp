#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "eprsim/estimate.hpp"
#include "eprsim/hidden_vars.hpp"

namespace eprsim {

/// Seeded Monte Carlo parameters. samples is the total number of
/// (theta, gamma_x, gamma_y) draws; at least 1000 are required. Estimates
/// are bit-identical for identical (seed, samples) regardless of
/// evaluation order.
struct MCConfig {
  std::uint64_t seed = 1;
  std::int64_t samples = 1'000'000;
};

/// Monte Carlo mean of f over uniform draws on [0, pi)^3.
///
/// Without inner_square_group this is the plain sample mean with the usual
/// standard error. With it, samples are split into groups of that size: all
/// draws in a group share one theta, the group mean over (gamma_x, gamma_y)
/// is squared, and the squared means are averaged across groups — the
/// estimator matching the squared-inner-average coincidence integral. The
/// squared group mean overshoots the squared true mean by Var/group; an
/// estimate of that overshoot is returned in Estimate::bias (zero for the
/// plain path), and std_error is the standard error over the group values.
Estimate mc_estimate(const std::function<double(const HiddenVars&)>& f,
                     const MCConfig& mc,
                     std::optional<int> inner_square_group = std::nullopt);

}  // namespace eprsim
