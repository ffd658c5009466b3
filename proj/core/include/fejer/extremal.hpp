#pragma once

// Families that exhaust the sharp constants: the half-plane-like radial
// family f_r(z) = Re(((1+rz)/(1-rz))^{1/p}), the square-root derivative of
// the conformal map onto a thin rectangle (extremal for the L^2 chain), and
// a seeded optimizer probing the conjectured constant for p > 2.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fejer/checkers.hpp"
#include "fejer/function_model.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

// f_r(z) = Re(w^{1/p}) with w = (1+rz)/(1-rz), principal branch. Positive on
// the disk since Re w > 0 there. Requires p > 0 and 0 < r < 1.
struct ExtremalFamily {
  double p = 2.0;
  double r = 0.5;
};

// |f_r(e^{i theta})|^p in closed form:
//   cos^p((1/p) atan2(2 r sin theta, 1 - r^2)) * |1 + r e^{i theta}| / |1 - r e^{i theta}|.
double extremal_boundary_density(const ExtremalFamily& f, double theta);

// integral_{-1}^{1} f_r(x)^p dx = (4/r) atanh(r) - 2, independent of p
// because f_r(x)^p = (1+rx)/(1-rx) on the real diameter.
double extremal_diameter_closed(double r);

// Evaluator bundle; boundary_peak_scale is 1 - r, the angular width of the
// boundary spike at theta = 0.
DiskFunction disk_function(const ExtremalFamily& f);

// integral_0^{2pi} dtheta / |1 - r e^{i theta}| = 4 K(2 sqrt(r)/(1+r)) / (1+r).
double kernel_integral_elliptic(double r);
IntegralEstimate kernel_integral_quadrature(double r, const QuadratureConfig& cfg);

struct SharpnessPoint {
  double r = 0.0;
  double diameter = 0.0;   // closed form
  double circle = 0.0;     // quadrature of the boundary density
  double circle_err = 0.0;
  double ratio = 0.0;      // diameter / circle
  std::int64_t evaluations = 0;
  bool converged = false;
};

// Ratio of the two sides of the harmonic bound along the family, one point
// per radius. The ratio increases toward the sharp constant as r -> 1, but
// only logarithmically in 1/(1-r). Requires p > 1.
std::vector<SharpnessPoint> sharpness_sweep(double p, const std::vector<double>& rs,
                                            const QuadratureConfig& cfg);

// Thrown when the prevertex equation cannot be bracketed for the requested
// aspect ratio (nonpositive, above 1, or so thin that sin(alpha) falls below
// long double range, around eps < 1.7e-4).
struct NoBracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conformal square-root-derivative data for the rectangle
// (-1, 1) x (-eps, eps):
//   phi'(z) = A [ (1 - z^2 e^{-2i alpha}) (1 - z^2 e^{2i alpha}) ]^{-1/2},
// with prevertices e^{+-i alpha}, -e^{+-i alpha}. The test function is
// f = Re sqrt(phi'), evaluated through principal logarithms of the two
// factors (never of the assembled product), which keeps the branch
// consistent on the disk and positive at 0.
struct RectangleMap {
  double eps = 0.0;
  double alpha = 0.0;       // asin(sin_alpha); underflows to 0 for eps < ~2e-3
  double A = 0.0;           // phi'(0) > 0
  long double sin_alpha = 0.0L;  // the solved prevertex parameter, full range

  complexd derivative(complexd z) const;       // phi'(z)
  complexd sqrt_derivative(complexd z) const;  // sqrt(phi'(z)), Re sqrt at 0 = sqrt(A)
  double f(complexd z) const;                  // Re sqrt(phi'(z))
};

// Solves sin(alpha) by bisection on log(sin alpha) so the target vertical
// half-side (A/2) K(sin alpha) equals eps. All internal quadrature runs in
// long double: sin(alpha) ~ 4 exp(-pi/(2 eps)) crushes below double range
// already near eps = 1.4e-3.
RectangleMap rectmap_solve(double eps, const QuadratureConfig& cfg);

DiskFunction disk_function(const RectangleMap& map);

// Closure bundle for the L^2 chain checker. Boundary and |hg| integrals use
// the exact elliptic reductions (perimeter = 2A(K + K'), boundary integral
// = perimeter/2 + pi A, |hg|-norm = perimeter/4); the diameter at t = 0 uses
// the singularity-shifted long double path, other angles fall back to plain
// quadrature, which is regular there.
Theorem4Input theorem4_input(const RectangleMap& map);

struct RectangleSharpness {
  double eps = 0.0;
  double diameter = 0.0;  // int_{-1}^{1} f(x)^2 dx = 2 - O(eps log(1/eps)) -> 2
  double middle = 0.0;    // 1/2 boundary + hg_norm
  double boundary = 0.0;  // int_0^{2pi} f^2 dtheta = 2 + 2 eps + pi A
  double hg_norm = 0.0;   // 1 + eps
};

RectangleSharpness theorem4_sharpness(const RectangleMap& map, const QuadratureConfig& cfg);
RectangleSharpness theorem4_sharpness(double eps, const QuadratureConfig& cfg);

// Taylor section of ((1+rz)/(1-rz))^{1/p} split evenly into analytic and
// co-analytic halves: the degree-`degree` harmonic warm start whose ratio
// approaches the family's as degree grows. Requires p > 0, 0 < r < 1.
HarmonicSeries extremal_truncation(double p, double r, int degree);

struct ExplorerResult {
  double p = 0.0;
  int budget = 0;
  std::uint64_t seed = 0;
  int restarts = 0;
  std::int64_t evaluations = 0;   // objective evaluations actually spent
  double best_ratio = 0.0;
  double ratio_err = 0.0;         // propagated quadrature error of the best ratio
  HarmonicSeries best;
};

// Seeded search for the largest diameter-to-circle ratio over degree <= 12
// harmonic series at exponent p > 2, by Nelder-Mead restarts alternating
// between truncated-family warm starts and Gaussian random starts. The
// budget counts objective evaluations (>= 100). Deterministic for a fixed
// (p, budget, seed).
ExplorerResult conjecture_explore(double p, int budget, std::uint64_t seed,
                                  const QuadratureConfig& cfg);

// Recomputes the ratio of a witness with the same quadrature settings the
// explorer used; reproduces best_ratio up to the propagated error budget.
double explorer_ratio(const HarmonicSeries& f, double p, const QuadratureConfig& cfg);

}  // namespace fejer
