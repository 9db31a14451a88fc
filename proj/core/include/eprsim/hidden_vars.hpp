#pragma once

#include "eprsim/angle.hpp"

namespace eprsim {

/// One draw of the source-side variables: the emission polarization angle
/// and the two per-polarization phase offsets. Canonical range for all
/// three is [0, pi).
struct HiddenVars {
  double theta = 0.0;
  double gamma_x = 0.0;
  double gamma_y = 0.0;

  static HiddenVars canonical(double theta, double gamma_x, double gamma_y) {
    return {reduce_mod_pi(theta), reduce_mod_pi(gamma_x), reduce_mod_pi(gamma_y)};
  }
};

}  // namespace eprsim
