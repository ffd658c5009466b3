#pragma once

// Double-precision quadrature for the inequality checkers: adaptive
// Gauss-Kronrod on segments, tanh-sinh for integrable endpoint
// singularities, and a spectrally convergent doubling trapezoid rule on the
// circle. Every routine reports value, error bound, evaluation count and a
// convergence flag instead of throwing on hard integrands.

#include <cstdint>
#include <functional>
#include <vector>

#include "fejer/function_model.hpp"

namespace fejer {

struct QuadratureConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  // Endpoint singularity flags for integrate_segment: when either is set the
  // segment is handled by tanh-sinh instead of Gauss-Kronrod panels.
  bool singular_left = false;
  bool singular_right = false;

  void validate() const;  // throws std::invalid_argument
};

struct IntegralEstimate {
  double value = 0.0;
  double err = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

using RealIntegrand = std::function<double(double)>;

// integral_{x0}^{x1} g. Requires x0 < x1. With a singular flag set, g is
// never evaluated at the flagged endpoint and may diverge there as long as
// the integral exists.
IntegralEstimate integrate_segment(const RealIntegrand& g, double x0, double x1,
                                   const QuadratureConfig& cfg);

// Same, with a caller-chosen initial partition (strictly increasing, at
// least two knots). Panels are refined adaptively inside the partition;
// singularity flags are not honored on this entry point.
IntegralEstimate integrate_segment(const RealIntegrand& g, const std::vector<double>& knots,
                                   const QuadratureConfig& cfg);

// integral_0^{2pi} g for 2pi-periodic g: doubling trapezoid sums, which are
// exact once the node count exceeds the trigonometric degree, with adaptive
// panel fallback if the doubling sequence stalls. g may be called at
// negative angles by the peaked path and must honor periodicity.
IntegralEstimate integrate_circle(const RealIntegrand& g, const QuadratureConfig& cfg);

// integral_{-1}^{1} |f(x e^{it})|^p dx: the p-mean of f along the rotated
// diameter. Requires p > 0.
IntegralEstimate diameter_integral(const DiskFunction& f, double t, double p,
                                   const QuadratureConfig& cfg);

// integral_0^{2pi} |f(e^{i theta})|^p dtheta. Honors f.boundary_peak_scale by
// seeding a geometrically graded partition around the peak instead of the
// uniform trapezoid start. Requires p > 0.
IntegralEstimate circle_integral(const DiskFunction& f, double p, const QuadratureConfig& cfg);

struct RadialAngularSides {
  IntegralEstimate radial;   // int_0^1 (|d/dr f(r e^{it})| + |d/dr f(r e^{i(t+pi)})|) dr
  IntegralEstimate angular;  // max over the closure grid of int_0^{2pi} |d/dtheta f(r e^{i th})| dth
  double angular_argmax_r = 1.0;
};

// Both sides of the derivative-means comparison: total variation of f along
// the full diameter at angle t against the largest angular variation over
// r_grid (the boundary r = 1 is always included; for finite series the
// angular mean is nondecreasing in r, so the supremum sits there).
RadialAngularSides riesz_zygmund_sides(const HarmonicSeries& f, double t,
                                       const std::vector<double>& r_grid,
                                       const QuadratureConfig& cfg);

}  // namespace fejer
