#include "eprsim/quadrature.hpp"

#include <cmath>
#include <string>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

struct Nodes {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
Nodes gauss_legendre(int n) {
  Nodes out;
  out.x.resize(n);
  out.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    out.x[i] = -x;
    out.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.w[i] = w;
    out.w[n - 1 - i] = w;
  }
  return out;
}

// Composite Simpson weights for an odd number of equally spaced points.
Nodes simpson(int n) {
  Nodes out;
  out.x.resize(n);
  out.w.resize(n);
  const double h = 2.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    out.x[i] = -1.0 + i * h;
    double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    out.w[i] = c * h / 3.0;
  }
  return out;
}

Nodes nodes_for(QuadratureRule rule, int n, const Interval& iv) {
  Nodes base = rule == QuadratureRule::gauss_legendre ? gauss_legendre(n) : simpson(n);
  const double mid = 0.5 * (iv.hi + iv.lo);
  const double half = 0.5 * (iv.hi - iv.lo);
  for (int i = 0; i < n; ++i) {
    base.x[i] = mid + half * base.x[i];
    base.w[i] *= half;
  }
  return base;
}

void validate(const QuadratureSpec& spec, int axes) {
  if (spec.points_per_axis < 3)
    throw ConfigError("quadrature spec: points_per_axis must be >= 3, got " +
                      std::to_string(spec.points_per_axis));
  if (spec.rule == QuadratureRule::simpson && spec.points_per_axis % 2 == 0)
    throw ConfigError("quadrature spec: Simpson's rule needs an odd point count, got " +
                      std::to_string(spec.points_per_axis));
  if (static_cast<int>(spec.domain.size()) != axes)
    throw ConfigError("quadrature spec: expected " + std::to_string(axes) +
                      " domain intervals, got " + std::to_string(spec.domain.size()));
}

// Coarser refinement level used for the residual bound. Simpson stays odd.
int coarse_points(QuadratureRule rule, int n) {
  int c = n / 2;
  if (rule == QuadratureRule::simpson && c % 2 == 0) ++c;
  return c >= 3 ? c : 0;  // 0: no coarser level available
}

int fine_points(QuadratureRule rule, int n) {
  return rule == QuadratureRule::simpson ? 2 * n - 1 : 2 * n;
}

double check_finite_1d(double v, double x) {
  if (!std::isfinite(v))
    throw NumericError("non-finite integrand value at x = " + std::to_string(x));
  return v;
}

double eval_1d(const std::function<double(double)>& f, const QuadratureSpec& spec, int n) {
  const Nodes nd = nodes_for(spec.rule, n, spec.domain[0]);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += nd.w[i] * check_finite_1d(f(nd.x[i]), nd.x[i]);
  return acc;
}

double eval_3d(const std::function<double(double, double, double)>& f, bool inner_square,
               const QuadratureSpec& spec, int n) {
  const Nodes n0 = nodes_for(spec.rule, n, spec.domain[0]);
  const Nodes n1 = nodes_for(spec.rule, n, spec.domain[1]);
  const Nodes n2 = nodes_for(spec.rule, n, spec.domain[2]);
  const double l0 = spec.domain[0].length();
  const double inner_area = spec.domain[1].length() * spec.domain[2].length();

  double outer = 0.0;
  for (int i = 0; i < n; ++i) {
    double inner = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = f(n0.x[i], n1.x[j], n2.x[k]);
        if (!std::isfinite(v))
          throw NumericError("non-finite integrand value at (" + std::to_string(n0.x[i]) +
                             ", " + std::to_string(n1.x[j]) + ", " + std::to_string(n2.x[k]) +
                             ")");
        inner += n1.w[j] * n2.w[k] * v;
      }
    inner /= inner_area;  // inner mean
    outer += n0.w[i] * (inner_square ? inner * inner : inner);
  }
  return outer / l0;
}

}  // namespace

QuadratureSpec half_turn_spec(int axes, int points_per_axis, QuadratureRule rule) {
  QuadratureSpec spec;
  spec.rule = rule;
  spec.points_per_axis = points_per_axis;
  spec.domain.assign(static_cast<std::size_t>(axes), Interval{0.0, kPi});
  return spec;
}

Estimate integrate_1d(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  validate(spec, 1);
  const int n = spec.points_per_axis;
  const int c = coarse_points(spec.rule, n);
  double value, other;
  if (c > 0) {
    value = eval_1d(f, spec, n);
    other = eval_1d(f, spec, c);
  } else {
    value = eval_1d(f, spec, n);
    other = eval_1d(f, spec, fine_points(spec.rule, n));
  }
  return {value, std::abs(value - other), Provenance::quadrature};
}

Estimate integrate_3d_nested(const std::function<double(double, double, double)>& f,
                             bool inner_square, const QuadratureSpec& spec) {
  validate(spec, 3);
  const int n = spec.points_per_axis;
  const int c = coarse_points(spec.rule, n);
  double value, other;
  if (c > 0) {
    value = eval_3d(f, inner_square, spec, n);
    other = eval_3d(f, inner_square, spec, c);
  } else {
    value = eval_3d(f, inner_square, spec, n);
    other = eval_3d(f, inner_square, spec, fine_points(spec.rule, n));
  }
  return {value, std::abs(value - other), Provenance::quadrature};
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::quadrature: return "quadrature";
    case Provenance::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

}  // namespace eprsim
