#pragma once

#include <cmath>
#include <numbers>

namespace eprsim {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Reduce an angle into [0, pi). Polarization axes and all coincidence
/// formulas in this library are half-turn periodic.
inline double reduce_mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;  // fmod rounding at the boundary
  return r;
}

}  // namespace eprsim
