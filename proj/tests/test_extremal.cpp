#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fejer/constants.hpp"
#include "fejer/extremal.hpp"
#include "fejer/quadrature.hpp"

using namespace fejer;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureConfig kCfg{};

long double elliptic_K_ld(long double m) {
  return elliptic_K_from_complement(std::sqrt((1.0L - m) * (1.0L + m)));
}
}  // namespace

TEST_CASE("boundary density endpoints") {
  for (double p : {1.5, 2.0, 4.0})
    for (double r : {0.2, 0.6, 0.9}) {
      const ExtremalFamily f{p, r};
      CHECK(extremal_boundary_density(f, 0.0) ==
            doctest::Approx((1.0 + r) / (1.0 - r)).epsilon(1e-13));
      CHECK(extremal_boundary_density(f, kPi) ==
            doctest::Approx((1.0 - r) / (1.0 + r)).epsilon(1e-13));
      // Even in theta.
      CHECK(extremal_boundary_density(f, 0.8) ==
            doctest::Approx(extremal_boundary_density(f, -0.8)).epsilon(1e-14));
    }
  CHECK_THROWS_AS(disk_function(ExtremalFamily{0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(disk_function(ExtremalFamily{2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("diameter closed form vs quadrature, independent of p") {
  CHECK(extremal_diameter_closed(0.5) ==
        doctest::Approx(2.39444915467243876558).epsilon(1e-15));
  for (double r : {0.3, 0.7, 0.95})
    for (double p : {1.2, 2.0, 4.0}) {
      const ExtremalFamily fam{p, r};
      const auto est = diameter_integral(disk_function(fam), 0.0, p, kCfg);
      const double exact = extremal_diameter_closed(r);
      CHECK(est.converged);
      CHECK(std::fabs(est.value - exact) <= 1e-9 * exact);
    }
}

TEST_CASE("boundary density integrates to the elliptic kernel value at p = 2") {
  // |f_r|^2 integrates like the Poisson-type kernel |1+re|/|1-re|; its
  // elliptic closed form anchors the circle quadrature at high peaking.
  for (double r : {0.5, 0.9, 0.999}) {
    const auto est = kernel_integral_quadrature(r, kCfg);
    CHECK(est.converged);
    CHECK(std::fabs(est.value - kernel_integral_elliptic(r)) <=
          1e-8 * kernel_integral_elliptic(r));
  }
  CHECK(kernel_integral_elliptic(0.5) == doctest::Approx(6.74300141925038417).epsilon(1e-14));
  CHECK(kernel_integral_elliptic(0.9) == doctest::Approx(9.12219655369108082).epsilon(1e-14));
}

TEST_CASE("sharpness sweep reproduces the slow climb toward the constant") {
  const std::vector<double> rs{0.9, 0.99, 0.999, 0.9999};
  const struct {
    double p;
    double ratios[4];
  } expected[] = {
      {1.5, {0.495949081, 0.697415470, 0.840294835, 0.938057791}},
      {2.0, {0.435300207, 0.575167761, 0.669888208, 0.731827822}},
      {3.0, {0.387466414, 0.488288083, 0.555346457, 0.597988861}},
  };
  for (const auto& row : expected) {
    const auto points = sharpness_sweep(row.p, rs, kCfg);
    REQUIRE(points.size() == 4);
    const double limit = conjectured_sharp_constant(row.p);
    for (int i = 0; i < 4; ++i) {
      CHECK(points[static_cast<std::size_t>(i)].converged);
      CHECK(points[static_cast<std::size_t>(i)].ratio ==
            doctest::Approx(row.ratios[i]).epsilon(1e-6));
      CHECK(points[static_cast<std::size_t>(i)].ratio < limit);
      if (i > 0)
        CHECK(points[static_cast<std::size_t>(i)].ratio >
              points[static_cast<std::size_t>(i - 1)].ratio);
      CHECK(points[static_cast<std::size_t>(i)].diameter ==
            doctest::Approx(extremal_diameter_closed(rs[static_cast<std::size_t>(i)]))
                .epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(sharpness_sweep(1.0, rs, kCfg), std::invalid_argument);
}

TEST_CASE("rectangle map solve hits the known geometries") {
  // Square: the prevertices sit at the eighth roots of unity.
  const RectangleMap sq = rectmap_solve(1.0, kCfg);
  CHECK(sq.alpha == doctest::Approx(kPi / 4.0).epsilon(1e-10));
  CHECK(sq.A == doctest::Approx(1.07870520237676).epsilon(1e-10));

  // Aspect 1/2 pins the modulus at the first Landen value 3 - 2 sqrt(2).
  const RectangleMap half = rectmap_solve(0.5, kCfg);
  CHECK(half.alpha == doctest::Approx(0.172425997713).epsilon(1e-9));
  CHECK(std::sin(half.alpha) == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(half.A == doctest::Approx(0.631890877749891).epsilon(1e-10));

  CHECK(rectmap_solve(0.3, kCfg).A == doctest::Approx(0.381928598761059).epsilon(1e-10));

  // Thin limit: A -> 4 eps / pi, sin(alpha) ~ 4 exp(-pi/(2 eps)).
  const RectangleMap thin = rectmap_solve(0.01, kCfg);
  CHECK(thin.A == doctest::Approx(0.04 / kPi).epsilon(1e-8));
  const RectangleMap thinner = rectmap_solve(0.001, kCfg);
  CHECK(thinner.A == doctest::Approx(0.004 / kPi).epsilon(1e-8));
  const double log10_m = static_cast<double>(std::log10(thinner.sin_alpha));
  CHECK(log10_m == doctest::Approx(std::log10(4.0) - kPi / 0.002 / std::log(10.0)).epsilon(1e-4));
}

TEST_CASE("rectangle map satisfies its defining equations") {
  for (double eps : {1.0, 0.5, 0.1, 0.01, 0.001}) {
    const RectangleMap map = rectmap_solve(eps, kCfg);
    // Vertical half-side residual: (A/2) K(sin alpha) = eps.
    const long double vertical = 0.5L * static_cast<long double>(map.A) *
                                 elliptic_K_ld(map.sin_alpha);
    CHECK(static_cast<double>(std::fabs(vertical - eps)) <= 1e-12 * eps);

    // phi'(0) = A and f(0) = sqrt(A).
    CHECK(std::abs(map.derivative({0.0, 0.0}) - complexd{map.A, 0.0}) <= 1e-13 * map.A);
    CHECK(map.f({0.0, 0.0}) == doctest::Approx(std::sqrt(map.A)).epsilon(1e-13));

    // Symmetries of the square-root derivative: even in z, real on the reals.
    const complexd z{0.3, 0.4};
    CHECK(std::abs(map.derivative(z) - map.derivative(-z)) <= 1e-12 * std::abs(map.derivative(z)));
    CHECK(std::abs(map.derivative(std::conj(z)) - std::conj(map.derivative(z))) <=
          1e-12 * std::abs(map.derivative(z)));
    CHECK(std::fabs(map.sqrt_derivative({0.5, 0.0}).imag()) <= 1e-13);
  }
}

TEST_CASE("rectangle sharpness quantities") {
  // Exact reductions: hg = 1 + eps, boundary = 2 + 2 eps + pi A,
  // middle = boundary/2 + hg, diameter -> 2.
  for (double eps : {1.0, 0.1, 0.001}) {
    const RectangleMap map = rectmap_solve(eps, kCfg);
    const RectangleSharpness s = theorem4_sharpness(map, kCfg);
    CHECK(s.eps == eps);
    CHECK(s.hg_norm == doctest::Approx(1.0 + eps).epsilon(1e-10));
    CHECK(s.boundary == doctest::Approx(2.0 + 2.0 * eps + kPi * map.A).epsilon(1e-10));
    CHECK(s.middle == doctest::Approx(0.5 * s.boundary + s.hg_norm).epsilon(1e-12));
  }
  const RectangleSharpness unit = theorem4_sharpness(1.0, kCfg);
  CHECK(unit.middle == doctest::Approx(5.69442616958796).epsilon(1e-10));
  CHECK(unit.boundary == doctest::Approx(7.38885233917591).epsilon(1e-10));
  CHECK(unit.hg_norm == doctest::Approx(2.0).epsilon(1e-10));

  CHECK(theorem4_sharpness(0.001, kCfg).diameter == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(theorem4_sharpness(0.01, kCfg).diameter == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("rectangle boundary integral against blind segment quadrature") {
  // Independent of the elliptic reduction: integrate |f|^2 over the circle
  // split at the four prevertices, inverse-square-root endpoints flagged.
  const RectangleMap map = rectmap_solve(0.5, kCfg);
  const double a = map.alpha;
  QuadratureConfig cfg;
  cfg.singular_left = true;
  cfg.singular_right = true;
  auto density = [&map](double th) {
    const double v = map.f(std::polar(1.0, th));
    return v * v;
  };
  double total = 0.0;
  for (const auto& [lo, hi] : {std::pair{-a, a},
                               std::pair{a, kPi - a},
                               std::pair{kPi - a, kPi + a},
                               std::pair{kPi + a, 2.0 * kPi - a}}) {
    const auto est = integrate_segment(density, lo, hi, cfg);
    CHECK(est.converged);
    total += est.value;
  }
  const RectangleSharpness s = theorem4_sharpness(map, kCfg);
  CHECK(total == doctest::Approx(s.boundary).epsilon(1e-7));
}

TEST_CASE("rectangle feeds the decomposed chain") {
  const RectangleMap map = rectmap_solve(0.5, kCfg);
  const Theorem4Input in = theorem4_input(map);
  CHECK(std::abs(in.h0 - complexd{0.5 * std::sqrt(map.A), 0.0}) <= 1e-13);
  CHECK(std::abs(in.g0 - in.h0) <= 1e-15);
  for (double t : {0.0, 0.7}) {
    const auto [left, right] = check_l2_decomposed(in, t, kCfg);
    CHECK(left.verdict != Verdict::violation);
    CHECK(right.verdict != Verdict::violation);
    CHECK(left.verdict != Verdict::nonconverged);
    CHECK(right.verdict != Verdict::nonconverged);
  }
}

TEST_CASE("no-bracket failures") {
  CHECK_THROWS_AS(rectmap_solve(0.0, kCfg), NoBracketError);
  CHECK_THROWS_AS(rectmap_solve(-0.5, kCfg), NoBracketError);
  CHECK_THROWS_AS(rectmap_solve(1.5, kCfg), NoBracketError);
  CHECK_THROWS_AS(rectmap_solve(5e-5, kCfg), NoBracketError);
}

TEST_CASE("series truncation of the extremal family") {
  // The even analytic/co-analytic split reconstructs Re of the branch power.
  const double p = 3.0, r = 0.6;
  const HarmonicSeries trunc = extremal_truncation(p, r, 30);
  for (const complexd z : {complexd{0.3, 0.2}, complexd{-0.25, 0.1}, complexd{0.0, 0.35}}) {
    const complexd w = (1.0 + r * z) / (1.0 - r * z);
    const double direct = std::pow(w, 1.0 / p).real();
    CHECK(std::abs(trunc.eval(z) - complexd{direct, 0.0}) <= 1e-12);
  }
  CHECK(trunc.analytic_coefficients()[0] == complexd{1.0, 0.0});
  // a_k = b_k = c_k / 2 for k >= 1.
  CHECK(trunc.analytic_coefficients()[1] == trunc.coanalytic_coefficients()[0]);
  CHECK(trunc.analytic_coefficients()[1].real() == doctest::Approx(r / p).epsilon(1e-15));

  CHECK_THROWS_AS(extremal_truncation(3.0, 0.6, -1), std::invalid_argument);
  CHECK_THROWS_AS(extremal_truncation(3.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("degree-12 warm start ratio") {
  const HarmonicSeries warm = extremal_truncation(3.0, 0.9999, 12);
  const double ratio = explorer_ratio(warm, 3.0, kCfg);
  CHECK(ratio == doctest::Approx(0.402595952).epsilon(1e-6));
}

TEST_CASE("explorer is seeded, budgeted and deterministic") {
  const ExplorerResult a = conjecture_explore(3.0, 150, 7, kCfg);
  const ExplorerResult b = conjecture_explore(3.0, 150, 7, kCfg);
  CHECK(a.best_ratio == b.best_ratio);  // bitwise
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.evaluations <= 150);
  CHECK(a.restarts >= 1);
  // The first warm start alone guarantees this much.
  CHECK(a.best_ratio >= 0.40);
  CHECK(a.best_ratio < 1.0);
  CHECK(a.best.degree() <= 12);

  const double replay = explorer_ratio(a.best, 3.0, kCfg);
  CHECK(std::fabs(replay - a.best_ratio) <= std::max(1e-9, 10.0 * a.ratio_err));

  CHECK_THROWS_AS(conjecture_explore(2.0, 1000, 1, kCfg), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_explore(3.0, 99, 1, kCfg), std::invalid_argument);
}
