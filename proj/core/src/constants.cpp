#include "fejer/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fejer {

namespace {

// AGM(a, b) for a >= b > 0. Quadratic convergence: 64 iterations is far
// beyond what any representable input needs.
template <class Real>
Real agm(Real a, Real b) {
  for (int i = 0; i < 64; ++i) {
    const Real an = (a + b) / 2;
    const Real bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::fabs(a - b) <= 4 * std::numeric_limits<Real>::epsilon() * a) break;
  }
  return (a + b) / 2;
}

template <class Real>
Real elliptic_from_complement(Real kc) {
  if (!(kc > Real(0)) || kc > Real(1))
    throw std::domain_error("elliptic_K_from_complement: complementary modulus must lie in (0, 1]");
  return std::numbers::pi_v<Real> / (2 * agm(Real(1), kc));
}

}  // namespace

double harmonic_sharp_constant(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("harmonic_sharp_constant: requires p > 1");
  if (p >= 2.0) return 1.0;
  return conjectured_sharp_constant(p);
}

double kalaj_constant(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("kalaj_constant: requires p > 1");
  return std::pow(1.0 - std::fabs(std::cos(std::numbers::pi / p)), -p / 2.0);
}

double conjectured_sharp_constant(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("conjectured_sharp_constant: requires p > 1");
  return 0.5 * std::pow(1.0 / std::cos(std::numbers::pi / (2.0 * p)), p);
}

double frazer_constant(int n, double p) {
  if (n < 1) throw std::invalid_argument("frazer_constant: requires n >= 1");
  if (!(p >= 2.0))
    throw UnspecifiedConstant("frazer_constant: no constant is established for p < 2");
  return 1.0 / std::sin(std::numbers::pi / (2.0 * n));
}

double elliptic_K(double k) {
  if (!(k >= 0.0) || k >= 1.0)
    throw std::domain_error("elliptic_K: modulus must lie in [0, 1)");
  return elliptic_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

double elliptic_K_from_complement(double kc) { return elliptic_from_complement(kc); }

long double elliptic_K_from_complement(long double kc) { return elliptic_from_complement(kc); }

double arctanh(double x) {
  if (!(std::fabs(x) < 1.0)) throw std::domain_error("arctanh: requires |x| < 1");
  return std::atanh(x);
}

std::vector<SharpConstantRow> sharp_constant_table(const std::vector<double>& ps,
                                                   const std::vector<int>& ns) {
  std::vector<SharpConstantRow> rows;
  rows.reserve(ps.size());
  for (double p : ps) {
    SharpConstantRow row;
    row.p = p;
    row.harmonic = harmonic_sharp_constant(p);
    row.kalaj = kalaj_constant(p);
    row.conjectured = conjectured_sharp_constant(p);
    if (p >= 2.0) {
      for (int n : ns) row.frazer[n] = frazer_constant(n, p);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fejer
