#include "fejer/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fejer/constants.hpp"
#include "quad_kernel.hpp"

namespace fejer {

namespace {

constexpr double kPi = std::numbers::pi;
using ld = long double;
constexpr ld kPiL = std::numbers::pi_v<ld>;

void require_family(double p, double r) {
  if (!(p > 0.0)) throw std::invalid_argument("extremal family: requires p > 0");
  if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("extremal family: requires 0 < r < 1");
}

}  // namespace

double extremal_boundary_density(const ExtremalFamily& f, double theta) {
  require_family(f.p, f.r);
  // w = (1 + r e^{i th}) / (1 - r e^{i th}) has arg w = atan2(2 r sin th, 1 - r^2).
  const double arg_w = std::atan2(2.0 * f.r * std::sin(theta), (1.0 - f.r) * (1.0 + f.r));
  const complexd e = std::polar(1.0, theta);
  const double mod_w = std::abs(1.0 + f.r * e) / std::abs(1.0 - f.r * e);
  return std::pow(std::fabs(std::cos(arg_w / f.p)), f.p) * mod_w;
}

double extremal_diameter_closed(double r) {
  if (!(r > 0.0) || !(r < 1.0))
    throw std::invalid_argument("extremal_diameter_closed: requires 0 < r < 1");
  return 4.0 / r * arctanh(r) - 2.0;
}

DiskFunction disk_function(const ExtremalFamily& f) {
  require_family(f.p, f.r);
  const double p = f.p, r = f.r;
  return DiskFunction{
      [p, r](complexd z) {
        const complexd w = (1.0 + r * z) / (1.0 - r * z);
        return complexd(std::pow(w, 1.0 / p).real(), 0.0);
      },
      [p, r](double theta) {
        // |f_r| = |cos(arg w / p)| |w|^{1/p}: the p-th root of the density.
        const double arg_w = std::atan2(2.0 * r * std::sin(theta), (1.0 - r) * (1.0 + r));
        const complexd e = std::polar(1.0, theta);
        const double mod_w = std::abs(1.0 + r * e) / std::abs(1.0 - r * e);
        return std::fabs(std::cos(arg_w / p)) * std::pow(mod_w, 1.0 / p);
      },
      1.0 - r,
  };
}

double kernel_integral_elliptic(double r) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::invalid_argument("kernel_integral_elliptic: requires 0 <= r < 1");
  // Complementary modulus of 2 sqrt(r)/(1+r) is exactly (1-r)/(1+r).
  return 4.0 * elliptic_K_from_complement((1.0 - r) / (1.0 + r)) / (1.0 + r);
}

IntegralEstimate kernel_integral_quadrature(double r, const QuadratureConfig& cfg) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::invalid_argument("kernel_integral_quadrature: requires 0 <= r < 1");
  DiskFunction kernel{
      [r](complexd z) { return complexd(1.0, 0.0) / (1.0 - r * z); },
      [r](double theta) { return 1.0 / std::abs(1.0 - r * std::polar(1.0, theta)); },
      r > 0.5 ? 1.0 - r : 0.0,
  };
  return circle_integral(kernel, 1.0, cfg);
}

std::vector<SharpnessPoint> sharpness_sweep(double p, const std::vector<double>& rs,
                                            const QuadratureConfig& cfg) {
  if (!(p > 1.0)) throw std::invalid_argument("sharpness_sweep: requires p > 1");
  std::vector<SharpnessPoint> points;
  points.reserve(rs.size());
  for (double r : rs) {
    const ExtremalFamily fam{p, r};
    const DiskFunction df = disk_function(fam);
    const IntegralEstimate circ = circle_integral(df, p, cfg);
    SharpnessPoint pt;
    pt.r = r;
    pt.diameter = extremal_diameter_closed(r);
    pt.circle = circ.value;
    pt.circle_err = circ.err;
    pt.ratio = pt.diameter / circ.value;
    pt.evaluations = circ.evaluations;
    pt.converged = circ.converged;
    points.push_back(pt);
  }
  return points;
}

// ---------------------------------------------------------------------------
// Rectangle geometry. All solver-side quadrature runs in long double because
// sin(alpha) ~ 4 exp(-pi / (2 eps)) leaves double range near eps = 1.4e-3.

namespace {

struct LdEstimate {
  ld value = 0;
  ld err = 0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

constexpr ld kLdAbs = 1e-18L;
constexpr ld kLdRel = 3e-15L;

LdEstimate from_outcome(const detail::KernelOutcome<ld>& k) {
  return LdEstimate{k.value, k.err, k.evaluations, k.converged};
}

// integral_0^1 dx / sqrt((1-x^2)^2 + 4 x^2 m^2), substituted x = tanh(s):
//   integral_0^inf ds / sqrt(1 + (m sinh 2s)^2),
// which moves the near-singularity at x = 1 out to a plain exponential tail.
LdEstimate halfwidth_core(ld m) {
  const ld s_knee = std::asinh(1.0L / m) / 2;
  const ld s_max = s_knee + 30.0L;
  auto f = [m](ld s) {
    const ld u = m * std::sinh(2 * s);
    return 1.0L / std::sqrt(1.0L + u * u);
  };
  return from_outcome(
      detail::adaptive_gk<ld>(f, {0.0L, s_knee, s_max}, kLdAbs, kLdRel, 6000));
}

// K(m) = integral_0^{pi/2} dpsi / sqrt(1 - m^2 sin^2 psi); regular for m < 1.
LdEstimate vertical_factor(ld m) {
  auto f = [m](ld psi) {
    const ld s = m * std::sin(psi);
    return 1.0L / std::sqrt((1.0L - s) * (1.0L + s));
  };
  return from_outcome(
      detail::adaptive_gk<ld>(f, {0.0L, kPiL / 4, kPiL / 2}, kLdAbs, kLdRel, 6000));
}

// K'(m) = integral_0^{pi/2} deta / sqrt(m^2 + (1 - m^2) sin^2 eta) after
// eta = pi/2 - theta, which parks the height-1/m peak at eta = 0 where the
// geometric knot ladder below can resolve any representable m.
LdEstimate horizontal_factor(ld m) {
  const ld c2 = (1.0L - m) * (1.0L + m);
  auto f = [m, c2](ld eta) {
    const ld s = std::sin(eta);
    return 1.0L / std::sqrt(m * m + c2 * s * s);
  };
  std::vector<ld> knots{0.0L};
  for (ld w = m; w < kPiL / 4; w *= 2) knots.push_back(w);
  knots.push_back(kPiL / 2);
  const int budget = std::max<int>(6000, static_cast<int>(knots.size()) * 3);
  return from_outcome(detail::adaptive_gk<ld>(f, knots, kLdAbs, kLdRel, budget));
}

struct RectangleCore {
  ld m = 0;
  ld A = 0;          // 1 / halfwidth_core: normalizes the horizontal half-side to 1
  ld vertical = 0;   // (A/2) K(m): the vertical half-side
  std::int64_t evaluations = 0;
};

RectangleCore rectangle_core(ld m) {
  RectangleCore core;
  core.m = m;
  const LdEstimate width = halfwidth_core(m);
  const LdEstimate vert = vertical_factor(m);
  core.A = 1.0L / width.value;
  core.vertical = core.A / 2 * vert.value;
  core.evaluations = width.evaluations + vert.evaluations;
  return core;
}

}  // namespace

complexd RectangleMap::derivative(complexd z) const {
  const complexd rot = std::polar(1.0, 2.0 * alpha);
  const complexd z2 = z * z;
  // Principal logs of the separate factors keep one branch across the disk.
  const complexd s = std::log(1.0 - z2 * std::conj(rot)) + std::log(1.0 - z2 * rot);
  return A * std::exp(-0.5 * s);
}

complexd RectangleMap::sqrt_derivative(complexd z) const {
  const complexd rot = std::polar(1.0, 2.0 * alpha);
  const complexd z2 = z * z;
  const complexd s = std::log(1.0 - z2 * std::conj(rot)) + std::log(1.0 - z2 * rot);
  return std::sqrt(A) * std::exp(-0.25 * s);
}

double RectangleMap::f(complexd z) const { return sqrt_derivative(z).real(); }

RectangleMap rectmap_solve(double eps, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(eps > 0.0) || !(eps <= 1.0))
    throw NoBracketError("rectmap_solve: aspect ratio must lie in (0, 1]");

  // Asymptotically sin(alpha) ~ 4 exp(-pi/(2 eps)); pad the bracket well
  // below that and refuse ratios whose bracket would leave long double range.
  const ld tau_floor = 0.9L * std::log(std::numeric_limits<ld>::min());
  ld tau_lo = std::min<ld>(std::log(4.0L) - kPiL / (2.0L * static_cast<ld>(eps)) - 25.0L, -5.0L);
  if (tau_lo < tau_floor)
    throw NoBracketError("rectmap_solve: aspect ratio below the representable prevertex range");
  ld tau_hi = std::log1p(-1e-10L);

  const auto vertical_at = [](ld tau) { return rectangle_core(std::exp(tau)); };
  RectangleCore lo = vertical_at(tau_lo);
  RectangleCore hi = vertical_at(tau_hi);
  const ld target = static_cast<ld>(eps);
  if (!(lo.vertical < target) || !(hi.vertical > target))
    throw NoBracketError("rectmap_solve: failed to bracket the prevertex equation");

  RectangleCore mid_core = hi;
  for (int iter = 0; iter < 200 && tau_hi - tau_lo > 1e-16L * std::fabs(tau_lo); ++iter) {
    const ld tau_mid = (tau_lo + tau_hi) / 2;
    mid_core = vertical_at(tau_mid);
    if (std::fabs(mid_core.vertical - target) <= 1e-14L * target) break;
    if (mid_core.vertical < target)
      tau_lo = tau_mid;
    else
      tau_hi = tau_mid;
  }

  RectangleMap map;
  map.eps = eps;
  map.sin_alpha = mid_core.m;
  map.alpha = static_cast<double>(std::asin(mid_core.m));
  map.A = static_cast<double>(mid_core.A);
  return map;
}

DiskFunction disk_function(const RectangleMap& map) {
  return DiskFunction{
      [map](complexd z) { return complexd(map.f(z), 0.0); },
      [map](double theta) { return std::fabs(map.f(std::polar(1.0, theta))); },
      0.0,
  };
}

namespace {

// Independent check of the horizontal half-side: x-space tanh-sinh on [0,1]
// using the supplied distance to the singular endpoint, so (1 - x^2) never
// cancels. Cross-validates the s-space value that defined A.
LdEstimate halfwidth_tanh_sinh(ld m) {
  auto f = [m](ld x, ld dist) {
    const ld one_minus = x > 0.5L ? dist : 1.0L - x;
    const ld a = one_minus * (1.0L + x);
    const ld b = 2.0L * x * m;
    return 1.0L / std::sqrt(a * a + b * b);
  };
  return from_outcome(detail::tanh_sinh<ld>(f, 0.0L, 1.0L, kLdAbs, kLdRel));
}

struct RectangleIntegrals {
  ld A = 0;
  ld diameter = 0;
  ld diameter_err = 0;
  ld perimeter = 0;      // contour integral of |phi'| = 2A (K + K')
  ld perimeter_err = 0;
  ld boundary = 0;       // int_0^{2pi} f(e^{i th})^2 dth = perimeter/2 + pi A
  ld boundary_err = 0;
  std::int64_t evaluations = 0;
};

RectangleIntegrals rectangle_integrals(ld m) {
  RectangleIntegrals out;
  const LdEstimate width = halfwidth_core(m);
  const LdEstimate vert = vertical_factor(m);
  const LdEstimate horiz = horizontal_factor(m);
  const LdEstimate width2 = halfwidth_tanh_sinh(m);
  out.A = 1.0L / width.value;
  out.diameter = 2.0L * out.A * width2.value;
  out.diameter_err = 2.0L * out.A * (width2.err + width.err * out.A * width2.value);
  out.perimeter = 2.0L * out.A * (vert.value + horiz.value);
  out.perimeter_err = 2.0L * out.A * (vert.err + horiz.err);
  out.boundary = out.perimeter / 2 + kPiL * out.A;
  out.boundary_err = out.perimeter_err / 2;
  out.evaluations = width.evaluations + vert.evaluations + horiz.evaluations + width2.evaluations;
  return out;
}

}  // namespace

RectangleSharpness theorem4_sharpness(const RectangleMap& map, const QuadratureConfig& cfg) {
  cfg.validate();
  const RectangleIntegrals ri = rectangle_integrals(map.sin_alpha);
  RectangleSharpness s;
  s.eps = map.eps;
  s.diameter = static_cast<double>(ri.diameter);
  s.boundary = static_cast<double>(ri.boundary);
  s.hg_norm = static_cast<double>(ri.perimeter / 4);
  s.middle = static_cast<double>(ri.boundary / 2 + ri.perimeter / 4);
  return s;
}

RectangleSharpness theorem4_sharpness(double eps, const QuadratureConfig& cfg) {
  return theorem4_sharpness(rectmap_solve(eps, cfg), cfg);
}

Theorem4Input theorem4_input(const RectangleMap& map) {
  Theorem4Input in;
  in.label = "rectangle";
  // f = (sqrt(phi') + conj(sqrt(phi')))/2 decomposes with h = g = sqrt(phi')/2.
  const double half_sqrt_A = 0.5 * std::sqrt(map.A);
  in.h0 = complexd(half_sqrt_A, 0.0);
  in.g0 = complexd(half_sqrt_A, 0.0);

  in.diameter_sq = [map](double t, const QuadratureConfig& cfg) {
    const double s = std::fabs(std::sin(t));
    if (s < 1e-9) {
      // On the real diameter f(x)^2 = phi'(x) > 0; use the shifted long
      // double path, which survives any solvable aspect ratio.
      const LdEstimate width = halfwidth_core(map.sin_alpha);
      const LdEstimate width2 = halfwidth_tanh_sinh(map.sin_alpha);
      const ld a = 1.0L / width.value;
      IntegralEstimate est;
      est.value = static_cast<double>(2.0L * a * width2.value);
      est.err = static_cast<double>(2.0L * a * width2.err) + 1e-15 * est.value;
      est.evaluations = width.evaluations + width2.evaluations;
      est.converged = width.converged && width2.converged;
      return est;
    }
    // Away from t = 0 mod pi the factors 1 - x^2 e^{2it} stay off zero and
    // the integrand is smooth.
    auto g = [&map, t](double x) {
      const double v = map.f(x * std::polar(1.0, t));
      return v * v;
    };
    return integrate_segment(g, -1.0, 1.0, cfg);
  };
  in.boundary_sq = [map](const QuadratureConfig& cfg) {
    (void)cfg;
    const RectangleIntegrals ri = rectangle_integrals(map.sin_alpha);
    IntegralEstimate est;
    est.value = static_cast<double>(ri.boundary);
    est.err = static_cast<double>(ri.boundary_err) + 1e-15 * est.value;
    est.evaluations = ri.evaluations;
    est.converged = true;
    return est;
  };
  in.hg_norm = [map](const QuadratureConfig& cfg) {
    (void)cfg;
    // |h g| = |phi'| / 4 on the circle, so the norm is perimeter / 4.
    const RectangleIntegrals ri = rectangle_integrals(map.sin_alpha);
    IntegralEstimate est;
    est.value = static_cast<double>(ri.perimeter / 4);
    est.err = static_cast<double>(ri.perimeter_err / 4) + 1e-15 * est.value;
    est.evaluations = ri.evaluations;
    est.converged = true;
    return est;
  };
  return in;
}

HarmonicSeries extremal_truncation(double p, double r, int degree) {
  require_family(p, r);
  if (degree < 0) throw std::invalid_argument("extremal_truncation: requires degree >= 0");
  // Taylor recurrence for G = ((1+rz)/(1-rz))^{1/p}, from
  // (1 - r^2 z^2) G' = (2r/p) G:
  //   (k+1) c_{k+1} = (2r/p) c_k + r^2 (k-1) c_{k-1}.
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k + 1 <= degree; ++k) {
    const double prev = k >= 1 ? c[static_cast<std::size_t>(k - 1)] : 0.0;
    c[static_cast<std::size_t>(k + 1)] =
        (2.0 * r / p * c[static_cast<std::size_t>(k)] + r * r * (k - 1) * prev) / (k + 1);
  }
  // Re G = h + conj(g) with h = G/2 + 1/2 and g = G/2 - 1/2 (so g(0) = 0).
  std::vector<complexd> a(static_cast<std::size_t>(degree) + 1);
  std::vector<complexd> b(static_cast<std::size_t>(degree));
  a[0] = complexd(1.0, 0.0);
  for (int k = 1; k <= degree; ++k) {
    a[static_cast<std::size_t>(k)] = complexd(c[static_cast<std::size_t>(k)] / 2.0, 0.0);
    b[static_cast<std::size_t>(k - 1)] = complexd(c[static_cast<std::size_t>(k)] / 2.0, 0.0);
  }
  return HarmonicSeries(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Conjecture explorer: Nelder-Mead over the 50 real coordinates of a
// degree-12 harmonic series.

namespace {

constexpr int kExploreDegree = 12;
constexpr int kExploreDim = 2 * (kExploreDegree + 1) + 2 * kExploreDegree;  // 50

HarmonicSeries unpack_series(const std::vector<double>& x) {
  std::vector<complexd> a(kExploreDegree + 1), b(kExploreDegree);
  for (int k = 0; k <= kExploreDegree; ++k)
    a[static_cast<std::size_t>(k)] = complexd(x[2 * static_cast<std::size_t>(k)],
                                              x[2 * static_cast<std::size_t>(k) + 1]);
  const std::size_t off = 2 * (kExploreDegree + 1);
  for (int k = 0; k < kExploreDegree; ++k)
    b[static_cast<std::size_t>(k)] = complexd(x[off + 2 * static_cast<std::size_t>(k)],
                                              x[off + 2 * static_cast<std::size_t>(k) + 1]);
  return HarmonicSeries(std::move(a), std::move(b));
}

std::vector<double> pack_series(const HarmonicSeries& f) {
  std::vector<double> x(kExploreDim, 0.0);
  const auto& a = f.analytic_coefficients();
  const auto& b = f.coanalytic_coefficients();
  for (std::size_t k = 0; k < a.size() && k <= static_cast<std::size_t>(kExploreDegree); ++k) {
    x[2 * k] = a[k].real();
    x[2 * k + 1] = a[k].imag();
  }
  const std::size_t off = 2 * (kExploreDegree + 1);
  for (std::size_t k = 0; k < b.size() && k < static_cast<std::size_t>(kExploreDegree); ++k) {
    x[off + 2 * k] = b[k].real();
    x[off + 2 * k + 1] = b[k].imag();
  }
  return x;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

struct Objective {
  double p;
  const QuadratureConfig& cfg;
  std::int64_t evaluations = 0;
  double best_value = -1e308;
  std::vector<double> best_x;
  double best_err = 0.0;

  // Maximized quantity: diameter p-mean over circle p-mean at t = 0.
  double operator()(const std::vector<double>& x) {
    ++evaluations;
    const HarmonicSeries f = unpack_series(x);
    const DiskFunction df = disk_function(f);
    const IntegralEstimate num = diameter_integral(df, 0.0, p, cfg);
    const IntegralEstimate den = circle_integral(df, p, cfg);
    if (!(den.value > 1e-300)) return -1e300;
    const double ratio = num.value / den.value;
    if (ratio > best_value) {
      best_value = ratio;
      best_x = x;
      best_err = num.err / den.value + num.value * den.err / (den.value * den.value);
    }
    return ratio;
  }
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink
// 1/2), maximizing via negated comparisons. Deterministic tie handling.
void nelder_mead(Objective& obj, const std::vector<double>& x0, double step,
                 std::int64_t eval_cap) {
  const int n = static_cast<int>(x0.size());
  struct Vertex {
    std::vector<double> x;
    double value;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(static_cast<std::size_t>(n) + 1);
  const std::int64_t start = obj.evaluations;
  auto spent = [&] { return obj.evaluations - start; };

  simplex.push_back({x0, obj(x0)});
  for (int i = 0; i < n && spent() < eval_cap; ++i) {
    std::vector<double> xi = x0;
    xi[static_cast<std::size_t>(i)] += std::max(step, 0.1 * std::fabs(xi[static_cast<std::size_t>(i)]));
    simplex.push_back({xi, obj(xi)});
  }
  if (static_cast<int>(simplex.size()) < n + 1) return;

  auto by_value_desc = [](const Vertex& a, const Vertex& b) { return a.value > b.value; };
  while (spent() < eval_cap) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value_desc);
    const Vertex& best = simplex.front();
    Vertex& worst = simplex.back();
    if (std::fabs(best.value - worst.value) <= 1e-12 * (1.0 + std::fabs(best.value))) break;

    std::vector<double> centroid(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        centroid[static_cast<std::size_t>(j)] += simplex[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(j)] / n;

    auto blend = [&](double coef) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        x[static_cast<std::size_t>(j)] = centroid[static_cast<std::size_t>(j)] +
                                         coef * (centroid[static_cast<std::size_t>(j)] -
                                                 worst.x[static_cast<std::size_t>(j)]);
      return x;
    };

    const std::vector<double> xr = blend(1.0);
    const double fr = obj(xr);
    if (fr > best.value) {
      if (spent() >= eval_cap) {
        worst = {xr, fr};
        continue;
      }
      const std::vector<double> xe = blend(2.0);
      const double fe = obj(xe);
      worst = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr > simplex[static_cast<std::size_t>(n) - 1].value) {
      worst = {xr, fr};
      continue;
    }
    if (spent() >= eval_cap) break;
    const std::vector<double> xc = fr > worst.value ? blend(0.5) : blend(-0.5);
    const double fc = obj(xc);
    if (fc > std::max(fr, worst.value)) {
      worst = {xc, fc};
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 1; i <= n && spent() < eval_cap; ++i) {
      Vertex& v = simplex[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        v.x[static_cast<std::size_t>(j)] =
            best.x[static_cast<std::size_t>(j)] +
            0.5 * (v.x[static_cast<std::size_t>(j)] - best.x[static_cast<std::size_t>(j)]);
      v.value = obj(v.x);
    }
  }
}

}  // namespace

double explorer_ratio(const HarmonicSeries& f, double p, const QuadratureConfig& cfg) {
  const DiskFunction df = disk_function(f);
  const IntegralEstimate num = diameter_integral(df, 0.0, p, cfg);
  const IntegralEstimate den = circle_integral(df, p, cfg);
  if (!(den.value > 1e-300))
    throw std::invalid_argument("explorer_ratio: circle mean vanishes");
  return num.value / den.value;
}

ExplorerResult conjecture_explore(double p, int budget, std::uint64_t seed,
                                  const QuadratureConfig& cfg) {
  if (!(p > 2.0))
    throw std::invalid_argument("conjecture_explore: probes the open range p > 2");
  if (budget < 100) throw std::invalid_argument("conjecture_explore: budget must be >= 100");
  cfg.validate();

  std::mt19937_64 rng(seed);
  Objective obj{p, cfg, 0, -1e308, {}, 0.0};

  const double warm_radii[] = {0.9999, 0.99, 0.95, 0.9, 0.8, 0.5};
  const std::int64_t per_restart = std::max<std::int64_t>(400, budget / 6);
  int restarts = 0;

  while (obj.evaluations < budget) {
    const std::int64_t cap = std::min<std::int64_t>(per_restart, budget - obj.evaluations);
    if (cap < kExploreDim + 2) break;  // not enough left to build a simplex
    std::vector<double> x0;
    const int idx = restarts;
    if (idx < 6) {
      x0 = pack_series(extremal_truncation(p, warm_radii[idx], kExploreDegree));
    } else if (idx % 2 == 0) {
      x0 = pack_series(extremal_truncation(p, warm_radii[(idx / 2) % 6], kExploreDegree));
      for (double& v : x0) v += 0.02 * gaussian(rng);
    } else {
      x0.assign(kExploreDim, 0.0);
      for (int k = 0; k <= kExploreDegree; ++k) {
        const double scale = 0.5 * std::pow(k + 1.0, -1.5);
        x0[2 * static_cast<std::size_t>(k)] = scale * gaussian(rng);
        x0[2 * static_cast<std::size_t>(k) + 1] = scale * gaussian(rng);
      }
      const std::size_t off = 2 * (kExploreDegree + 1);
      for (int k = 0; k < kExploreDegree; ++k) {
        const double scale = 0.5 * std::pow(k + 2.0, -1.5);
        x0[off + 2 * static_cast<std::size_t>(k)] = scale * gaussian(rng);
        x0[off + 2 * static_cast<std::size_t>(k) + 1] = scale * gaussian(rng);
      }
    }
    nelder_mead(obj, x0, 0.05, cap);
    ++restarts;
  }

  ExplorerResult out;
  out.p = p;
  out.budget = budget;
  out.seed = seed;
  out.restarts = restarts;
  out.evaluations = obj.evaluations;
  out.best_ratio = obj.best_value;
  out.ratio_err = obj.best_err;
  out.best = unpack_series(obj.best_x.empty() ? std::vector<double>(kExploreDim, 0.0) : obj.best_x);
  return out;
}

}  // namespace fejer
