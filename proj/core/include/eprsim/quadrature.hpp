#pragma once

#include <functional>
#include <vector>

#include "eprsim/estimate.hpp"

namespace eprsim {

enum class QuadratureRule { gauss_legendre, simpson };

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

/// Deterministic quadrature parameters. points_per_axis must be at least 3
/// and, for Simpson's rule, odd. domain lists one interval per axis; the
/// integration routines validate the axis count.
struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::gauss_legendre;
  int points_per_axis = 64;
  std::vector<Interval> domain;
};

/// Gauss-Legendre (default 64 points) over [0, pi] on each of `axes` axes.
QuadratureSpec half_turn_spec(int axes, int points_per_axis = 64,
                              QuadratureRule rule = QuadratureRule::gauss_legendre);

/// Plain definite integral of f over spec.domain[0] (no normalization).
/// The returned std_error is the residual against a coarser refinement
/// level of the same rule. Throws NumericError, naming the abscissa, if f
/// evaluates to a non-finite value.
Estimate integrate_1d(const std::function<double(double)>& f, const QuadratureSpec& spec);

/// Mean over axis 0 of the (optionally squared) mean over axes 1 and 2:
///
///   inner_square = true:   (1/L0) I [ (1/(L1 L2)) II f dx1 dx2 ]^2 dx0
///   inner_square = false:  (1/(L0 L1 L2)) III f dx0 dx1 dx2
///
/// The squared-inner-mean shape is the coincidence-rate structure of the
/// unpolarized two-component model: the phase average is squared before the
/// polarization-angle average.
Estimate integrate_3d_nested(const std::function<double(double, double, double)>& f,
                             bool inner_square, const QuadratureSpec& spec);

}  // namespace eprsim
