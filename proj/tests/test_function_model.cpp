#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fejer/function_model.hpp"
#include "fejer/quadrature.hpp"

using namespace fejer;

namespace {
constexpr double kPi = std::numbers::pi;

HarmonicSeries random_series(std::mt19937_64& gen, int degree) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<complexd> a, b;
  for (int k = 0; k <= degree; ++k) {
    const double s = std::pow(k + 1.0, -1.5);
    a.emplace_back(s * g(gen), s * g(gen));
    if (k >= 1) b.emplace_back(s * g(gen), s * g(gen));
  }
  return HarmonicSeries(std::move(a), std::move(b));
}
}  // namespace

TEST_CASE("evaluation of small series") {
  // f = z + conj(z) = 2 Re z.
  const HarmonicSeries f({{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}});
  CHECK(f.degree() == 1);
  CHECK(std::abs(f.eval({0.5, 0.0}) - complexd{1.0, 0.0}) <= 1e-15);
  CHECK(std::abs(f.eval({0.0, 0.7})) <= 1e-15);
  CHECK(std::abs(f.eval({0.3, 0.4}) - complexd{0.6, 0.0}) <= 1e-15);
  CHECK(std::abs(f.boundary_eval(kPi / 3.0) - complexd{1.0, 0.0}) <= 1e-15);

  // h and g pieces are separately addressable.
  CHECK(std::abs(f.eval_h({0.3, 0.4}) - complexd{0.3, 0.4}) <= 1e-15);
  CHECK(std::abs(f.eval_g({0.3, 0.4}) - complexd{0.3, 0.4}) <= 1e-15);

  CHECK_THROWS_AS(f.eval({1.5, 0.0}), std::domain_error);
  CHECK_NOTHROW(f.eval({1.0, 0.0}));
}

TEST_CASE("evaluation matches a naive power sum") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const HarmonicSeries f = random_series(gen, 9);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    const complexd z{u(gen), u(gen)};
    complexd naive{0.0, 0.0};
    const auto& a = f.analytic_coefficients();
    const auto& b = f.coanalytic_coefficients();
    for (std::size_t k = 0; k < a.size(); ++k)
      naive += a[k] * std::pow(z, static_cast<double>(k));
    complexd gz{0.0, 0.0};
    for (std::size_t k = 0; k < b.size(); ++k)
      gz += b[k] * std::pow(z, static_cast<double>(k + 1));
    naive += std::conj(gz);
    CHECK(std::abs(f.eval(z) - naive) <= 1e-12);
  }
}

TEST_CASE("boundary evaluation agrees with eval on the circle") {
  std::mt19937_64 gen(12);
  const HarmonicSeries f = random_series(gen, 12);
  for (double th : {0.0, 0.4, 2.0, -1.3, 6.0})
    CHECK(std::abs(f.boundary_eval(th) - f.eval(std::polar(1.0, th))) <= 1e-13);
}

TEST_CASE("derivatives against central finite differences") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> ur(0.1, 0.8);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 25; ++trial) {
    const HarmonicSeries f = random_series(gen, 10);
    const double r = ur(gen);
    const double th = ut(gen);
    const double h = 1e-6;
    const auto at = [&](double rr, double tt) { return f.eval(std::polar(rr, tt)); };
    const complexd dr_fd = (at(r + h, th) - at(r - h, th)) / (2.0 * h);
    const complexd dt_fd = (at(r, th + h) - at(r, th - h)) / (2.0 * h);
    CHECK(std::abs(f.radial_derivative(r, th) - dr_fd) <= 1e-7);
    CHECK(std::abs(f.angular_derivative(r, th) - dt_fd) <= 1e-7);
  }
}

TEST_CASE("conjugate flip preserves modulus on the real diameter") {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> ux(-0.999, 0.999);
  for (int trial = 0; trial < 100; ++trial) {
    const HarmonicSeries f = random_series(gen, 12);
    const AnalyticSeries phi = f.conjugate_flip();
    const double x = ux(gen);
    const double lhs = std::abs(phi.eval({x, 0.0}));
    const double rhs = std::abs(f.eval({x, 0.0}));
    CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::max(1.0, rhs));
  }
}

TEST_CASE("parseval identity against circle quadrature") {
  std::mt19937_64 gen(15);
  const QuadratureConfig cfg;
  for (int trial = 0; trial < 8; ++trial) {
    const HarmonicSeries f = random_series(gen, 12);
    const double exact = f.parseval_boundary_l2();
    const auto est = circle_integral(disk_function(f), 2.0, cfg);
    CHECK(est.converged);
    CHECK(std::fabs(est.value - exact) <= 1e-10 * exact);
  }
}

TEST_CASE("cross term of z + conj(z)") {
  const HarmonicSeries f({{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}});
  // 2 pi Re(a_1 b_1 e^{2it}) = 2 pi cos(2t).
  for (double t : {0.0, 0.3, 1.1, kPi / 2.0})
    CHECK(f.cross_term(t) == doctest::Approx(2.0 * kPi * std::cos(2.0 * t)).epsilon(1e-13));
}

TEST_CASE("rotation matches argument rotation") {
  std::mt19937_64 gen(16);
  const HarmonicSeries f = random_series(gen, 8);
  const double t = 0.77;
  const HarmonicSeries ft = f.rotated(t);
  for (double th : {0.0, 1.0, 3.0}) {
    const complexd z = std::polar(0.9, th);
    CHECK(std::abs(ft.eval(z) - f.eval(z * std::polar(1.0, t))) <= 1e-13);
  }
  // Rotation is an isometry of the boundary L^2 norm.
  CHECK(ft.parseval_boundary_l2() == doctest::Approx(f.parseval_boundary_l2()).epsilon(1e-14));
}

TEST_CASE("scaling acts on values") {
  std::mt19937_64 gen(17);
  const HarmonicSeries f = random_series(gen, 6);
  const complexd c{0.3, -1.2};
  const HarmonicSeries cf = f.scaled(c);
  for (double th : {0.2, 2.8}) {
    const complexd z = std::polar(0.8, th);
    CHECK(std::abs(cf.eval(z) - c * f.eval(z)) <= 1e-13);
  }
}

TEST_CASE("analytic series round trip") {
  const AnalyticSeries f({{1.0, 0.0}, {0.0, 2.0}, {-0.5, 0.0}});
  CHECK(f.degree() == 2);
  const complexd z{0.2, 0.1};
  CHECK(std::abs(f.eval(z) - (complexd{1.0, 0.0} + complexd{0.0, 2.0} * z +
                              complexd{-0.5, 0.0} * z * z)) <= 1e-15);
  CHECK(std::abs(f.as_harmonic().eval(z) - f.eval(z)) <= 1e-15);
}

TEST_CASE("blaschke products are unimodular on the circle") {
  const FiniteBlaschke b({{0.3, 0.2}, {-0.5, 0.4}, {0.0, 0.0}}, {0.6, 0.8});
  for (double th : {0.0, 0.5, 1.7, 3.9, 5.5})
    CHECK(std::fabs(std::abs(b.boundary_eval(th)) - 1.0) <= 1e-12);
  // |B| < 1 strictly inside.
  CHECK(std::abs(b.eval({0.2, 0.1})) < 1.0);
  CHECK_THROWS_AS(FiniteBlaschke({{1.0, 0.0}}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteBlaschke({{0.3, 0.0}}, {0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("blaschke multiplication leaves the boundary modulus of the cofactor") {
  const FiniteBlaschke b({{0.4, -0.1}}, {1.0, 0.0});
  const AnalyticSeries f({{0.5, 0.0}, {1.0, -0.3}});
  const DiskFunction prod = multiply_blaschke(b, f);
  for (double th : {0.1, 2.2, 4.4}) {
    CHECK(std::fabs(prod.boundary_abs(th) - std::abs(f.boundary_eval(th))) <= 1e-13);
    CHECK(std::abs(prod.value(std::polar(1.0, th)) -
                   b.boundary_eval(th) * f.boundary_eval(th)) <= 1e-13);
  }
}

TEST_CASE("corpus generation is deterministic and validated") {
  CorpusSpec spec;
  spec.count = 5;
  spec.degree = 7;
  spec.seed = 123;
  spec.kind = CorpusKind::harmonic;
  const auto c1 = generate_corpus(spec);
  const auto c2 = generate_corpus(spec);
  REQUIRE(c1.size() == 5);
  for (int i = 0; i < 5; ++i) {
    const auto& a1 = c1[i].primary.analytic_coefficients();
    const auto& a2 = c2[i].primary.analytic_coefficients();
    REQUIRE(a1.size() == a2.size());
    REQUIRE(a1.size() == 8);
    for (std::size_t k = 0; k < a1.size(); ++k) CHECK(a1[k] == a2[k]);  // bit-identical
    CHECK(c1[i].primary.coanalytic_coefficients().size() == 7);
    CHECK_FALSE(c1[i].second.has_value());
    CHECK_FALSE(c1[i].blaschke.has_value());
  }

  spec.seed = 124;
  const auto c3 = generate_corpus(spec);
  CHECK(c3[0].primary.analytic_coefficients()[1] != c1[0].primary.analytic_coefficients()[1]);

  spec.kind = CorpusKind::analytic;
  for (const auto& item : generate_corpus(spec))
    CHECK(item.primary.coanalytic_coefficients().empty());

  spec.kind = CorpusKind::analytic_pair;
  for (const auto& item : generate_corpus(spec)) REQUIRE(item.second.has_value());

  spec.kind = CorpusKind::blaschke_times_analytic;
  for (const auto& item : generate_corpus(spec)) {
    REQUIRE(item.blaschke.has_value());
    CHECK(item.blaschke->zeros().size() >= 1);
    CHECK(item.blaschke->zeros().size() <= 4);
    for (const auto& z : item.blaschke->zeros()) CHECK(std::abs(z) < 0.9);
  }

  CorpusSpec bad = spec;
  bad.count = 0;
  CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
  bad = spec;
  bad.degree = 65;
  CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
  bad = spec;
  bad.decay = -0.1;
  CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
}

TEST_CASE("corpus coefficient scale follows the decay profile") {
  CorpusSpec spec;
  spec.count = 400;
  spec.degree = 10;
  spec.decay = 1.5;
  spec.seed = 9;
  double m0 = 0.0, m8 = 0.0;
  for (const auto& item : generate_corpus(spec)) {
    m0 += std::norm(item.primary.analytic_coefficients()[0]);
    m8 += std::norm(item.primary.analytic_coefficients()[8]);
  }
  // E|a_k|^2 = 2 (k+1)^{-2 decay}: the ratio 9^3 = 729 shows through noise.
  CHECK(m0 / m8 > 200.0);
  CHECK(m0 / m8 < 2500.0);
}

TEST_CASE("corpus kind tokens round trip") {
  for (CorpusKind kind : {CorpusKind::harmonic, CorpusKind::analytic, CorpusKind::analytic_pair,
                          CorpusKind::blaschke_times_analytic})
    CHECK(corpus_kind_from_token(to_token(kind)) == kind);
  CHECK_THROWS_AS(corpus_kind_from_token("bogus"), std::invalid_argument);
}
