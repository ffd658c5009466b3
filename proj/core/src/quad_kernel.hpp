#pragma once

// Templated quadrature kernels shared by the public double-precision module
// and the long double internals of the rectangle geometry. Real is double or
// long double; integrands are arbitrary callables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace fejer::detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Even indices including the endpoint-most node are Kronrod-only points;
// odd indices and the center are the embedded Gauss-7 nodes.
inline constexpr long double kGk15Nodes[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};

inline constexpr long double kGk15Weights[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};

inline constexpr long double kGauss7Weights[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class Real>
struct PanelEstimate {
  Real value = 0;
  Real err = 0;
  Real resabs = 0;
};

// One Gauss-Kronrod 7-15 panel over [a, b] with the QUADPACK error model:
// the raw Kronrod-Gauss difference is damped through the scaled total
// variation resasc, so smooth panels report near-machine error.
template <class Real, class F>
PanelEstimate<Real> gk15_panel(const F& f, Real a, Real b) {
  const Real center = (a + b) / 2;
  const Real half = (b - a) / 2;

  Real fv1[7], fv2[7];
  const Real fc = f(center);
  Real resk = static_cast<Real>(kGk15Weights[7]) * fc;
  Real resg = static_cast<Real>(kGauss7Weights[3]) * fc;
  Real resabs = std::fabs(resk);
  for (int i = 0; i < 7; ++i) {
    const Real dx = half * static_cast<Real>(kGk15Nodes[i]);
    fv1[i] = f(center - dx);
    fv2[i] = f(center + dx);
    const Real w = static_cast<Real>(kGk15Weights[i]);
    resk += w * (fv1[i] + fv2[i]);
    resabs += w * (std::fabs(fv1[i]) + std::fabs(fv2[i]));
    if (i % 2 == 1) resg += static_cast<Real>(kGauss7Weights[i / 2]) * (fv1[i] + fv2[i]);
  }

  const Real mean = resk / 2;
  Real resasc = static_cast<Real>(kGk15Weights[7]) * std::fabs(fc - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += static_cast<Real>(kGk15Weights[i]) *
              (std::fabs(fv1[i] - mean) + std::fabs(fv2[i] - mean));
  }

  PanelEstimate<Real> out;
  out.value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  out.resabs = resabs;
  Real err = std::fabs((resk - resg) * half);
  if (resasc != Real(0) && err != Real(0))
    err = resasc * std::min(Real(1), std::pow(200 * err / resasc, Real(1.5)));
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tiny = std::numeric_limits<Real>::min();
  if (resabs > tiny / (50 * eps)) err = std::max(err, 50 * eps * resabs);
  if (!std::isfinite(out.value)) {
    out.value = 0;  // excluded pending subdivision; err keeps the panel hot
    err = std::numeric_limits<Real>::infinity();
  }
  out.err = err;
  return out;
}

template <class Real>
struct KernelOutcome {
  Real value = 0;
  Real err = 0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

// Worst-panel-first adaptive bisection over an initial partition. Fully
// deterministic: ties pick the lowest index, the final sum runs over panels
// sorted by left endpoint.
template <class Real, class F>
KernelOutcome<Real> adaptive_gk(const F& f, const std::vector<Real>& knots, Real abs_tol,
                                Real rel_tol, int max_panels) {
  struct Panel {
    Real a, b, value, err;
    bool splittable;
  };
  std::vector<Panel> panels;
  panels.reserve(knots.size() + 64);
  KernelOutcome<Real> out;

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const PanelEstimate<Real> e = gk15_panel(f, knots[i], knots[i + 1]);
    panels.push_back({knots[i], knots[i + 1], e.value, e.err, true});
    out.evaluations += 15;
  }

  for (;;) {
    Real total = 0, toterr = 0;
    std::size_t worst = panels.size();
    Real worst_err = -1;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      toterr += panels[i].err;
      if (panels[i].splittable && panels[i].err > worst_err) {
        worst_err = panels[i].err;
        worst = i;
      }
    }
    const Real target = std::max(abs_tol, rel_tol * std::fabs(total));
    if (toterr <= target) {
      out.converged = true;
      break;
    }
    if (worst == panels.size() || static_cast<int>(panels.size()) >= max_panels) break;

    Panel& p = panels[worst];
    const Real mid = (p.a + p.b) / 2;
    if (!(mid > p.a) || !(mid < p.b)) {
      p.splittable = false;  // interval width at the resolution floor
      continue;
    }
    const PanelEstimate<Real> left = gk15_panel(f, p.a, mid);
    const PanelEstimate<Real> right = gk15_panel(f, mid, p.b);
    out.evaluations += 30;
    const Real b = p.b;
    p.b = mid;
    p.value = left.value;
    p.err = left.err;
    panels.push_back({mid, b, right.value, right.err, true});
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  Real total = 0, comp = 0, toterr = 0;
  for (const auto& p : panels) {
    // Kahan compensation keeps the deterministic left-to-right sum tight.
    const Real y = p.value - comp;
    const Real t = total + y;
    comp = (t - total) - y;
    total = t;
    toterr += p.err;
  }
  out.value = total;
  out.err = toterr;
  if (out.converged && !(toterr <= std::max(abs_tol, rel_tol * std::fabs(total))))
    out.converged = toterr <= 2 * std::max(abs_tol, rel_tol * std::fabs(total));
  return out;
}

// Largest t such that every tanh-sinh node weight and endpoint distance
// stays representable: 2u must not exceed ~0.95 |log(min)| for u = pi/2 sinh t.
template <class Real>
Real tanh_sinh_tmax() {
  const Real limit = Real(0.95) * (-std::log(std::numeric_limits<Real>::min()));
  return std::asinh(limit / std::numbers::pi_v<Real>);
}

// Level-doubling tanh-sinh rule on [a, b] for integrands with integrable
// endpoint singularities. The integrand receives (x, d) where d is the exact
// distance to the nearer endpoint, computed from the complement identity
// 1 - tanh u = 2 e^{-2u} / (1 + e^{-2u}) so it never cancels to zero.
template <class Real, class F>
KernelOutcome<Real> tanh_sinh(const F& f, Real a, Real b, Real abs_tol, Real rel_tol,
                              int max_levels = 12) {
  const Real pi = std::numbers::pi_v<Real>;
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  const Real tmax = tanh_sinh_tmax<Real>();
  const Real trunc = std::numeric_limits<Real>::epsilon() / 16;

  KernelOutcome<Real> out;
  // weight w and node pair (mid +- half tanh(u)) for parameter t
  const auto add_node = [&](Real t, Real& sum) {
    const Real u = pi / 2 * std::sinh(t);
    const Real e2 = std::exp(-2 * std::fabs(u));
    const Real dist = half * 2 * e2 / (1 + e2);           // half (1 - |tanh u|)
    const Real sech = 2 * std::exp(-std::fabs(u)) / (1 + e2);  // 1 / cosh u
    const Real w = half * pi / 2 * std::cosh(t) * sech * sech;
    const Real tu = std::tanh(u);
    Real term;
    if (t == Real(0)) {
      term = w * f(mid, half);
      out.evaluations += 1;
    } else {
      term = w * (f(mid + half * tu, dist) + f(mid - half * tu, dist));
      out.evaluations += 2;
    }
    sum += term;
    return std::fabs(term);
  };

  Real h = 1;
  Real sum = 0;
  add_node(Real(0), sum);
  for (int j = 1; j * h <= tmax; ++j) {
    const Real mag = add_node(j * h, sum);
    if (mag <= trunc * std::fabs(sum) && j * h > Real(3)) break;
  }
  Real estimate = h * sum;
  Real err = std::numeric_limits<Real>::infinity();

  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    int quiet = 0;
    for (int j = 1; j * h <= tmax; j += 2) {
      const Real mag = add_node(j * h, sum);
      if (mag <= trunc * std::fabs(sum) && j * h > Real(3)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    const Real next = h * sum;
    err = std::fabs(next - estimate);
    estimate = next;
    if (!std::isfinite(estimate)) break;
    if (level >= 2 && err <= std::max(abs_tol, rel_tol * std::fabs(estimate))) {
      out.converged = true;
      break;
    }
  }

  out.value = estimate;
  const Real floor = 10 * std::numeric_limits<Real>::epsilon() * std::fabs(estimate);
  out.err = std::isfinite(estimate) ? std::max(err, floor)
                                    : std::numeric_limits<Real>::infinity();
  if (!std::isfinite(estimate)) {
    out.value = 0;
    out.converged = false;
  }
  return out;
}

}  // namespace fejer::detail
