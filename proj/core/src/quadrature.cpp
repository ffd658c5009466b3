#include "fejer/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quad_kernel.hpp"

namespace fejer {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

IntegralEstimate from_kernel(const detail::KernelOutcome<double>& k) {
  return IntegralEstimate{k.value, k.err, k.evaluations, k.converged};
}

// Geometrically graded knots accumulating toward theta = 0 on [-pi, pi],
// matched to a peak of angular width `scale`.
std::vector<double> peaked_circle_knots(double scale) {
  std::vector<double> left, right;
  right.push_back(0.0);
  for (double w = scale; w < std::numbers::pi / 2; w *= 2.0) right.push_back(w);
  right.push_back(std::numbers::pi);
  for (std::size_t i = right.size(); i-- > 1;) left.push_back(-right[i]);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
}

namespace {

// Shifted quadrature for a flagged endpoint: u = sqrt(x - a) (resp.
// sqrt(b - x)) turns an inverse-square-root singularity into a bounded
// integrand, and the black-box g is only ever called at points a positive
// u^2 away from the endpoint. Stronger singularities remain integrable but
// may exhaust the panel budget and report nonconverged.
detail::KernelOutcome<double> sqrt_shifted(const RealIntegrand& g, double a, double b,
                                           bool from_right, const QuadratureConfig& cfg,
                                           double abs_tol) {
  const double len = std::sqrt(b - a);
  auto transformed = [&](double u) {
    const double x = from_right ? b - u * u : a + u * u;
    return 2.0 * u * g(x);
  };
  return detail::adaptive_gk<double>(transformed, {0.0, len}, abs_tol, cfg.rel_tol,
                                     cfg.max_subdivisions);
}

}  // namespace

IntegralEstimate integrate_segment(const RealIntegrand& g, double x0, double x1,
                                   const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(x0 < x1)) throw std::invalid_argument("integrate_segment: requires x0 < x1");
  if (cfg.singular_left && cfg.singular_right) {
    const double mid = (x0 + x1) / 2;
    const auto left = sqrt_shifted(g, x0, mid, false, cfg, cfg.abs_tol / 2);
    const auto right = sqrt_shifted(g, mid, x1, true, cfg, cfg.abs_tol / 2);
    return IntegralEstimate{left.value + right.value, left.err + right.err,
                            left.evaluations + right.evaluations,
                            left.converged && right.converged};
  }
  if (cfg.singular_left || cfg.singular_right)
    return from_kernel(sqrt_shifted(g, x0, x1, cfg.singular_right, cfg, cfg.abs_tol));
  auto plain = [&](double x) { return g(x); };
  return from_kernel(detail::adaptive_gk<double>(plain, {x0, x1}, cfg.abs_tol, cfg.rel_tol,
                                                 cfg.max_subdivisions));
}

IntegralEstimate integrate_segment(const RealIntegrand& g, const std::vector<double>& knots,
                                   const QuadratureConfig& cfg) {
  cfg.validate();
  if (knots.size() < 2) throw std::invalid_argument("integrate_segment: need at least two knots");
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    if (!(knots[i] < knots[i + 1]))
      throw std::invalid_argument("integrate_segment: knots must be strictly increasing");
  auto plain = [&](double x) { return g(x); };
  const int budget = std::max(cfg.max_subdivisions, static_cast<int>(knots.size()) + 64);
  return from_kernel(detail::adaptive_gk<double>(plain, knots, cfg.abs_tol, cfg.rel_tol, budget));
}

IntegralEstimate integrate_circle(const RealIntegrand& g, const QuadratureConfig& cfg) {
  cfg.validate();
  // T_n = (2pi/n) sum g(2pi j / n); doubling reuses every previous node.
  int n = 16;
  double sum = 0.0, sum_abs = 0.0;
  std::int64_t evals = 0;
  for (int j = 0; j < n; ++j) {
    const double v = g(kTwoPi * j / n);
    sum += v;
    sum_abs += std::fabs(v);
  }
  evals += n;
  double prev = kTwoPi * sum / n;

  const double eps = std::numeric_limits<double>::epsilon();
  const int n_max = 1 << 17;
  while (n < n_max) {
    for (int j = 1; j < 2 * n; j += 2) {
      const double v = g(kTwoPi * j / (2 * n));
      sum += v;
      sum_abs += std::fabs(v);
    }
    evals += n;
    n *= 2;
    const double cur = kTwoPi * sum / n;
    // Roundoff floor: an exactly reproduced sum (trigonometric polynomial
    // below the alias limit) still carries summation noise.
    const double err = std::max(std::fabs(cur - prev), 50.0 * eps * kTwoPi * sum_abs / n);
    if (n >= 64 && err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(cur)))
      return IntegralEstimate{cur, err, evals, true};
    prev = cur;
  }

  // Doubling stalled (sharply concentrated integrand): hand the period to
  // adaptive panels, keeping the cumulative evaluation count.
  const double q = std::numbers::pi / 2;
  auto plain = [&](double x) { return g(x); };
  auto fallback = detail::adaptive_gk<double>(plain, {0.0, q, 2 * q, 3 * q, 4 * q}, cfg.abs_tol,
                                              cfg.rel_tol, cfg.max_subdivisions);
  fallback.evaluations += evals;
  return from_kernel(fallback);
}

IntegralEstimate diameter_integral(const DiskFunction& f, double t, double p,
                                   const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw std::invalid_argument("diameter_integral: requires p > 0");
  const complexd dir = std::polar(1.0, t);
  auto g = [&](double x) { return std::pow(std::abs(f.value(x * dir)), p); };
  return integrate_segment(g, -1.0, 1.0, cfg);
}

IntegralEstimate circle_integral(const DiskFunction& f, double p, const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw std::invalid_argument("circle_integral: requires p > 0");
  auto g = [&](double theta) { return std::pow(f.boundary_abs(theta), p); };
  if (f.boundary_peak_scale > 0.0 && f.boundary_peak_scale < 0.5)
    return integrate_segment(g, peaked_circle_knots(f.boundary_peak_scale), cfg);
  return integrate_circle(g, cfg);
}

RadialAngularSides riesz_zygmund_sides(const HarmonicSeries& f, double t,
                                       const std::vector<double>& r_grid,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  RadialAngularSides out;

  // Radial variation along the full diameter through angle t: the two rays
  // t and t + pi, both parametrized by r in [0, 1].
  auto radial = [&](double r) {
    return std::abs(f.radial_derivative(r, t)) + std::abs(f.radial_derivative(r, t + std::numbers::pi));
  };
  out.radial = integrate_segment(radial, 0.0, 1.0, cfg);

  for (double r : r_grid) {
    if (!(r >= 0.0) || r > 1.0)
      throw std::invalid_argument("riesz_zygmund_sides: radii must lie in [0, 1]");
  }
  std::vector<double> grid(r_grid);
  grid.push_back(1.0);

  std::int64_t evals = 0;
  bool all_converged = true;
  bool first = true;
  double best = 0.0, best_err = 0.0;
  for (double r : grid) {
    auto angular = [&](double theta) { return std::abs(f.angular_derivative(r, theta)); };
    const IntegralEstimate est = integrate_circle(angular, cfg);
    evals += est.evaluations;
    all_converged = all_converged && est.converged;
    if (first || est.value > best) {
      best = est.value;
      best_err = est.err;
      out.angular_argmax_r = r;
      first = false;
    }
  }
  out.angular = IntegralEstimate{best, best_err, evals, all_converged};
  return out;
}

}  // namespace fejer
