#include "fejer/function_model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fejer {

namespace {

// Horner evaluation of sum_k c[k] z^k.
complexd horner(const std::vector<complexd>& c, complexd z) {
  complexd acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void require_in_disk(complexd z) {
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("series evaluation: point lies outside the closed unit disk");
}

}  // namespace

HarmonicSeries::HarmonicSeries(std::vector<complexd> a, std::vector<complexd> b)
    : a_(std::move(a)), b_(std::move(b)) {}

int HarmonicSeries::degree() const {
  const int da = a_.empty() ? 0 : static_cast<int>(a_.size()) - 1;
  const int db = static_cast<int>(b_.size());
  return da > db ? da : db;
}

complexd HarmonicSeries::eval_h(complexd z) const { return horner(a_, z); }

complexd HarmonicSeries::eval_g(complexd z) const {
  // g(z) = z * (b_1 + b_2 z + ...): the missing constant slot is what keeps
  // the decomposition f = h + conj(g) unique.
  return z * horner(b_, z);
}

complexd HarmonicSeries::eval(complexd z) const {
  require_in_disk(z);
  return eval_h(z) + std::conj(eval_g(z));
}

complexd HarmonicSeries::boundary_eval(double theta) const {
  return eval(std::polar(1.0, theta));
}

complexd HarmonicSeries::radial_derivative(double r, double theta) const {
  // d/dr f(r e^{i th}) = sum k a_k r^{k-1} e^{ik th} + conj(sum k b_k r^{k-1} e^{ik th}).
  const complexd w = std::polar(1.0, theta);
  complexd dh(0.0, 0.0), dg(0.0, 0.0);
  complexd rw = w;  // r^{k-1} e^{ik th}, advanced by one factor of z per term
  for (std::size_t k = 1; k < a_.size(); ++k) {
    dh += static_cast<double>(k) * a_[k] * rw;
    rw *= r * w;
  }
  rw = w;
  for (std::size_t j = 0; j < b_.size(); ++j) {
    dg += static_cast<double>(j + 1) * b_[j] * rw;
    rw *= r * w;
  }
  return dh + std::conj(dg);
}

complexd HarmonicSeries::angular_derivative(double r, double theta) const {
  // d/dtheta f(r e^{i th}) = i z h'(z) + conj(i z g'(z)) at z = r e^{i th}.
  const complexd z = std::polar(r, theta);
  complexd zhp(0.0, 0.0), zgp(0.0, 0.0);
  complexd zk = z;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    zhp += static_cast<double>(k) * a_[k] * zk;
    zk *= z;
  }
  zk = z;
  for (std::size_t j = 0; j < b_.size(); ++j) {
    zgp += static_cast<double>(j + 1) * b_[j] * zk;
    zk *= z;
  }
  const complexd i(0.0, 1.0);
  return i * zhp + std::conj(i * zgp);
}

AnalyticSeries HarmonicSeries::conjugate_flip() const {
  // Phi = h + g~ with g~(z) = conj over coefficients: c_k = a_k + conj(b_k).
  std::vector<complexd> c(a_);
  if (c.size() < b_.size() + 1) c.resize(b_.size() + 1, complexd(0.0, 0.0));
  for (std::size_t j = 0; j < b_.size(); ++j) c[j + 1] += std::conj(b_[j]);
  return AnalyticSeries(std::move(c));
}

double HarmonicSeries::parseval_boundary_l2() const {
  double s = 0.0;
  for (const complexd& a : a_) s += std::norm(a);
  for (const complexd& b : b_) s += std::norm(b);
  return 2.0 * std::numbers::pi * s;
}

double HarmonicSeries::cross_term(double t) const {
  complexd s(0.0, 0.0);
  const std::size_t n = std::min(a_.size() > 0 ? a_.size() - 1 : 0, b_.size());
  for (std::size_t j = 0; j < n; ++j) {
    const double k = static_cast<double>(j + 1);
    s += a_[j + 1] * b_[j] * std::polar(1.0, 2.0 * k * t);
  }
  return 2.0 * std::numbers::pi * s.real();
}

HarmonicSeries HarmonicSeries::rotated(double t) const {
  // f(z e^{it}): a_k picks up e^{ikt}, b_k likewise (the conjugation in
  // conj(g) sees the already-rotated coefficient).
  std::vector<complexd> a(a_), b(b_);
  for (std::size_t k = 1; k < a.size(); ++k) a[k] *= std::polar(1.0, static_cast<double>(k) * t);
  for (std::size_t j = 0; j < b.size(); ++j) b[j] *= std::polar(1.0, static_cast<double>(j + 1) * t);
  return HarmonicSeries(std::move(a), std::move(b));
}

HarmonicSeries HarmonicSeries::scaled(complexd c) const {
  // c f = c h + conj(conj(c) g).
  std::vector<complexd> a(a_), b(b_);
  for (auto& ak : a) ak *= c;
  for (auto& bj : b) bj *= std::conj(c);
  return HarmonicSeries(std::move(a), std::move(b));
}

complexd AnalyticSeries::eval(complexd z) const {
  require_in_disk(z);
  return horner(c_, z);
}

complexd AnalyticSeries::boundary_eval(double theta) const {
  return eval(std::polar(1.0, theta));
}

FiniteBlaschke::FiniteBlaschke(std::vector<complexd> zeros, complexd rotation)
    : zeros_(std::move(zeros)), rotation_(rotation) {
  for (const complexd& a : zeros_) {
    if (std::abs(a) >= 1.0 - 1e-12)
      throw std::invalid_argument("FiniteBlaschke: zeros must lie strictly inside the disk");
  }
  const double r = std::abs(rotation_);
  if (std::fabs(r - 1.0) > 1e-12)
    throw std::invalid_argument("FiniteBlaschke: rotation must be unimodular");
  rotation_ /= r;
}

complexd FiniteBlaschke::eval(complexd z) const {
  require_in_disk(z);
  complexd w = rotation_;
  for (const complexd& a : zeros_) w *= (z - a) / (1.0 - std::conj(a) * z);
  return w;
}

complexd FiniteBlaschke::boundary_eval(double theta) const {
  return eval(std::polar(1.0, theta));
}

DiskFunction disk_function(const HarmonicSeries& f) {
  return DiskFunction{
      [f](complexd z) { return f.eval(z); },
      [f](double theta) { return std::abs(f.boundary_eval(theta)); },
      0.0,
  };
}

DiskFunction disk_function(const AnalyticSeries& f) {
  return DiskFunction{
      [f](complexd z) { return f.eval(z); },
      [f](double theta) { return std::abs(f.boundary_eval(theta)); },
      0.0,
  };
}

DiskFunction disk_function(const FiniteBlaschke& b) {
  return DiskFunction{
      [b](complexd z) { return b.eval(z); },
      [b](double theta) { return std::abs(b.boundary_eval(theta)); },
      0.0,
  };
}

DiskFunction multiply_blaschke(const FiniteBlaschke& b, const AnalyticSeries& f) {
  return DiskFunction{
      [b, f](complexd z) { return b.eval(z) * f.eval(z); },
      // |B| = 1 on the circle, so the boundary modulus is |f| alone.
      [f](double theta) { return std::abs(f.boundary_eval(theta)); },
      0.0,
  };
}

namespace {

// Uniform in [0, 1) with exactly 53 random bits; the low 11 bits of the
// engine word are discarded.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller standard normal pairs. Drawing order is part of the corpus
// format: changing it changes every seeded corpus.
struct GaussianSource {
  std::mt19937_64& rng;
  bool have_spare = false;
  double spare = 0.0;

  double next() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = uniform01(rng);
    while (u1 == 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare = mag * std::sin(2.0 * std::numbers::pi * u2);
    have_spare = true;
    return mag * std::cos(2.0 * std::numbers::pi * u2);
  }

  complexd next_complex(double scale) {
    const double re = next();
    const double im = next();
    return complexd(scale * re, scale * im);
  }
};

std::vector<complexd> coefficient_vector(GaussianSource& g, int count, double decay,
                                         int first_index) {
  std::vector<complexd> c;
  c.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double k = static_cast<double>(first_index + j);
    c.push_back(g.next_complex(std::pow(k + 1.0, -decay)));
  }
  return c;
}

FiniteBlaschke random_blaschke(std::mt19937_64& rng) {
  const int count = 1 + static_cast<int>(rng() % 4);
  std::vector<complexd> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double radius = 0.9 * std::sqrt(uniform01(rng));
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    zeros.push_back(std::polar(radius, angle));
  }
  const complexd rotation = std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
  return FiniteBlaschke(std::move(zeros), rotation);
}

}  // namespace

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("generate_corpus: count must be >= 1");
  if (spec.degree < 0 || spec.degree > 64)
    throw std::invalid_argument("generate_corpus: degree must lie in [0, 64]");
  if (!(spec.decay >= 0.0)) throw std::invalid_argument("generate_corpus: decay must be >= 0");

  std::mt19937_64 rng(spec.seed);
  GaussianSource gauss{rng};
  std::vector<CorpusItem> items;
  items.reserve(static_cast<std::size_t>(spec.count));

  for (int i = 0; i < spec.count; ++i) {
    CorpusItem item;
    switch (spec.kind) {
      case CorpusKind::harmonic: {
        auto a = coefficient_vector(gauss, spec.degree + 1, spec.decay, 0);
        auto b = coefficient_vector(gauss, spec.degree, spec.decay, 1);
        item.primary = HarmonicSeries(std::move(a), std::move(b));
        break;
      }
      case CorpusKind::analytic: {
        auto a = coefficient_vector(gauss, spec.degree + 1, spec.decay, 0);
        item.primary = HarmonicSeries(std::move(a), {});
        break;
      }
      case CorpusKind::analytic_pair: {
        auto a = coefficient_vector(gauss, spec.degree + 1, spec.decay, 0);
        auto c = coefficient_vector(gauss, spec.degree + 1, spec.decay, 0);
        item.primary = HarmonicSeries(std::move(a), {});
        item.second = AnalyticSeries(std::move(c));
        break;
      }
      case CorpusKind::blaschke_times_analytic: {
        auto a = coefficient_vector(gauss, spec.degree + 1, spec.decay, 0);
        item.primary = HarmonicSeries(std::move(a), {});
        item.blaschke = random_blaschke(rng);
        // The blaschke draw consumes raw engine words; drop any cached
        // normal so every item starts aligned with the engine state.
        gauss.have_spare = false;
        break;
      }
    }
    items.push_back(std::move(item));
  }
  return items;
}

const char* to_token(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::harmonic: return "harmonic";
    case CorpusKind::analytic: return "analytic";
    case CorpusKind::analytic_pair: return "analytic-pair";
    case CorpusKind::blaschke_times_analytic: return "blaschke-times-analytic";
  }
  return "harmonic";
}

CorpusKind corpus_kind_from_token(const std::string& token) {
  if (token == "harmonic") return CorpusKind::harmonic;
  if (token == "analytic") return CorpusKind::analytic;
  if (token == "analytic-pair") return CorpusKind::analytic_pair;
  if (token == "blaschke-times-analytic") return CorpusKind::blaschke_times_analytic;
  throw std::invalid_argument("unknown corpus kind: " + token);
}

}  // namespace fejer
