#pragma once

// Finite harmonic and analytic series on the unit disk, finite Blaschke
// products, and seeded random corpora of them. A harmonic function is
// represented as f = h + conj(g) with h(z) = sum a_k z^k and
// g(z) = sum_{k>=1} b_k z^k; the normalization g(0) = 0 is structural
// (there is no slot for b_0).

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fejer {

using complexd = std::complex<double>;

class AnalyticSeries;

class HarmonicSeries {
 public:
  HarmonicSeries() = default;
  // a holds a_0..a_N; b holds b_1..b_M (index 0 of the vector is b_1).
  HarmonicSeries(std::vector<complexd> a, std::vector<complexd> b);

  const std::vector<complexd>& analytic_coefficients() const { return a_; }
  const std::vector<complexd>& coanalytic_coefficients() const { return b_; }
  // Highest power carried by either part (0 for the zero function).
  int degree() const;

  // f(z) = h(z) + conj(g(z)). Rejects points outside the closed disk
  // (|z| > 1 + 1e-12) with std::domain_error.
  complexd eval(complexd z) const;
  complexd eval_h(complexd z) const;
  complexd eval_g(complexd z) const;
  // f(e^{i theta}); agrees with eval on the boundary but takes the angle.
  complexd boundary_eval(double theta) const;

  // d/dr f(r e^{i theta}) and d/dtheta f(r e^{i theta}).
  complexd radial_derivative(double r, double theta) const;
  complexd angular_derivative(double r, double theta) const;

  // The analytic series Phi with coefficients a_k + conj(b_k). On the real
  // diameter |Phi(x)| = |f(x)| because conj(g(x)) = conj(g)(x) there.
  AnalyticSeries conjugate_flip() const;

  // integral_0^{2pi} |f(e^{i theta})|^2 dtheta = 2pi (sum |a_k|^2 + sum |b_k|^2).
  double parseval_boundary_l2() const;

  // 2pi Re( sum_{k>=1} a_k b_k e^{2ikt} ): the rotation-dependent term in the
  // exact L^2 identity for the diameter at angle t.
  double cross_term(double t) const;

  // The series of z -> f(z e^{it}); satisfies rotated(t).eval(z) = eval(z e^{it}).
  HarmonicSeries rotated(double t) const;
  HarmonicSeries scaled(complexd c) const;

 private:
  std::vector<complexd> a_;
  std::vector<complexd> b_;
};

class AnalyticSeries {
 public:
  AnalyticSeries() = default;
  explicit AnalyticSeries(std::vector<complexd> c) : c_(std::move(c)) {}

  const std::vector<complexd>& coefficients() const { return c_; }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

  complexd eval(complexd z) const;
  complexd boundary_eval(double theta) const;

  // The same function viewed as a harmonic series with empty co-analytic part.
  HarmonicSeries as_harmonic() const { return HarmonicSeries(c_, {}); }

 private:
  std::vector<complexd> c_;
};

// rotation * prod_j (z - zeros[j]) / (1 - conj(zeros[j]) z). Unimodular on
// the circle; zeros must lie strictly inside the disk.
class FiniteBlaschke {
 public:
  FiniteBlaschke() : rotation_(1.0, 0.0) {}
  // Rejects |zero| >= 1 - 1e-12 and rotation further than 1e-12 from the
  // circle; the rotation is renormalized to exact modulus 1.
  FiniteBlaschke(std::vector<complexd> zeros, complexd rotation);

  const std::vector<complexd>& zeros() const { return zeros_; }
  complexd rotation() const { return rotation_; }

  complexd eval(complexd z) const;
  complexd boundary_eval(double theta) const;

 private:
  std::vector<complexd> zeros_;
  complexd rotation_;
};

// Uniform closure interface the quadrature layer consumes: pointwise values
// on the closed disk plus a boundary modulus path. boundary_peak_scale > 0
// hints that |f(e^{i theta})| concentrates in a window of that angular width
// around theta = 0, so circle quadrature can seed its partition there.
struct DiskFunction {
  std::function<complexd(complexd)> value;
  std::function<double(double)> boundary_abs;
  double boundary_peak_scale = 0.0;
};

DiskFunction disk_function(const HarmonicSeries& f);
DiskFunction disk_function(const AnalyticSeries& f);
DiskFunction disk_function(const FiniteBlaschke& b);
// Pointwise product B * f; on the circle its modulus equals |f| exactly.
DiskFunction multiply_blaschke(const FiniteBlaschke& b, const AnalyticSeries& f);

enum class CorpusKind { harmonic, analytic, analytic_pair, blaschke_times_analytic };

struct CorpusSpec {
  int count = 100;
  int degree = 12;
  double decay = 1.5;  // coefficient k is complex Gaussian scaled by (k+1)^{-decay}
  std::uint64_t seed = 7;
  CorpusKind kind = CorpusKind::harmonic;
};

struct CorpusItem {
  HarmonicSeries primary;               // analytic kinds carry an empty co-analytic part
  std::optional<AnalyticSeries> second; // present for analytic_pair
  std::optional<FiniteBlaschke> blaschke;  // present for blaschke_times_analytic
};

// Deterministic: the same spec yields bit-identical coefficients on every
// platform (Box-Muller over mt19937_64 draws, not std::normal_distribution,
// whose output is implementation-defined).
std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

const char* to_token(CorpusKind kind);
CorpusKind corpus_kind_from_token(const std::string& token);

}  // namespace fejer
