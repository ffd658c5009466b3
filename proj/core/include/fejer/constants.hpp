#pragma once

// Sharp constants appearing in the diameter-vs-circle inequalities for
// analytic and harmonic functions on the unit disk, together with the
// special functions (complete elliptic integral K, inverse hyperbolic
// tangent) that the extremal-family identities are phrased in.

#include <map>
#include <stdexcept>
#include <vector>

namespace fejer {

// Thrown when a published inequality has no established constant for the
// requested parameter range.
struct UnspecifiedConstant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sharp constant A_p for the harmonic diameter bound:
//   A_p = 1/2 * sec^p(pi/(2p)) for 1 < p <= 2, A_p = 1 for p >= 2.
// Grows without bound as p -> 1+. Requires p > 1.
double harmonic_sharp_constant(double p);

// (1 - |cos(pi/p)|)^{-p/2}: constant in the bound on the boundary p-mean of
// (|h|^2 + |g|^2)^{1/2} by the p-mean of f = h + conj(g). Requires p > 1.
double kalaj_constant(double p);

// 1/2 * sec^p(pi/(2p)) for all p > 1: equals A_p on (1,2] and is the
// conjectured sharp constant for p > 2 (where only A_p = 1 is proven).
double conjectured_sharp_constant(double p);

// csc(pi/(2n)): constant B_p for the n-diameter sum bound, established for
// p >= 2 only. Requires n >= 1; throws UnspecifiedConstant for p < 2.
double frazer_constant(int n, double p);

// Complete elliptic integral of the first kind, standard normalization
//   K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
// computed by the arithmetic-geometric mean: K = pi / (2 AGM(1, k')).
// Requires 0 <= k < 1.
double elliptic_K(double k);

// K for modulus k = sqrt(1 - kc^2), taking the complementary modulus kc
// directly so callers that know kc exactly avoid the 1-k^2 cancellation.
// Requires 0 < kc <= 1. The long double overload serves geometry whose
// complementary modulus underflows double (prevertex crowding).
double elliptic_K_from_complement(double kc);
long double elliptic_K_from_complement(long double kc);

// atanh with domain validation; equals (1/2) log((1+x)/(1-x)) on (-1, 1).
double arctanh(double x);

struct SharpConstantRow {
  double p = 0;
  double harmonic = 0;     // A_p
  double kalaj = 0;        // (1-|cos(pi/p)|)^{-p/2}
  double conjectured = 0;  // 1/2 sec^p(pi/2p)
  // n -> csc(pi/(2n)); populated only when p >= 2 (unspecified below).
  std::map<int, double> frazer;
};

// One row per requested p (each must be > 1), frazer columns for the
// requested n (each must be >= 1) on rows with p >= 2.
std::vector<SharpConstantRow> sharp_constant_table(const std::vector<double>& ps,
                                                   const std::vector<int>& ns);

}  // namespace fejer
