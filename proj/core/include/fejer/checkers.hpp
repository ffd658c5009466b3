#pragma once

// Numerical verdicts for the diameter-vs-circle inequalities. Every checker
// computes both sides by quadrature, propagates the error bounds into a
// budget, and classifies the comparison rather than asserting it.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fejer/function_model.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

enum class Verdict { holds, holds_within_budget, violation, nonconverged };

const char* to_token(Verdict v);

// lhs <= rhs up to budget: `holds` when lhs <= rhs outright,
// `holds_within_budget` when the excess sits inside the numerical budget,
// `violation` when it exceeds the budget, `nonconverged` when either side's
// quadrature failed to converge (which voids the comparison).
Verdict classify_verdict(double lhs, double rhs, double err_budget, bool converged);

struct InequalityReport {
  std::string name;            // checker token, e.g. "t1", "t4-left"
  std::string function_label;  // free-form description of the test function
  double p = 0.0;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;  // multiplicative constant folded into rhs
  double margin = 0.0;    // rhs - lhs
  double err_budget = 0.0;  // 10 * (lhs error + rhs error)
  double lhs_err = 0.0;
  double rhs_err = 0.0;
  std::int64_t evaluations = 0;
  Verdict verdict = Verdict::nonconverged;
};

// Analytic baseline: int_{-1}^{1} |f(x e^{it})|^p dx <= 1/2 int |f|^p dtheta.
// Holds for every p > 0 when f is analytic (or an analytic-times-Blaschke
// product); fails for general harmonic f.
InequalityReport check_riesz_fejer_analytic(const DiskFunction& f, double p, double t,
                                            const QuadratureConfig& cfg);

// Harmonic version with the sharp constant: diameter p-mean <= A_p times the
// circle p-mean, A_p = 1/2 sec^p(pi/2p) on (1,2], 1 on [2,inf). Requires p > 1.
InequalityReport check_harmonic(const DiskFunction& f, double p, double t,
                                const QuadratureConfig& cfg);

// Exact L^2 comparison: the diameter mean at angle t against
// 1/2 int |f|^2 dtheta + 2pi Re sum a_k b_k e^{2ikt} (the rotation-dependent
// cross term; no inequality constant is involved).
InequalityReport check_l2_cross(const HarmonicSeries& f, double t, const QuadratureConfig& cfg);

// The L^2 chain through the decomposition f = h + conj(g). Closed-form
// families provide their own integrators, so both ends of the chain accept a
// bundle of closures rather than a series.
struct Theorem4Input {
  std::string label;
  // int_{-1}^{1} |f(x e^{it})|^2 dx
  std::function<IntegralEstimate(double t, const QuadratureConfig&)> diameter_sq;
  // int_0^{2pi} |f(e^{i theta})|^2 dtheta
  std::function<IntegralEstimate(const QuadratureConfig&)> boundary_sq;
  // int_0^{2pi} |h(e^{i theta}) g(e^{i theta})| dtheta
  std::function<IntegralEstimate(const QuadratureConfig&)> hg_norm;
  complexd h0{0.0, 0.0};
  complexd g0{0.0, 0.0};
};

Theorem4Input theorem4_input(const HarmonicSeries& f);

// Both links of the chain
//   diameter mean <= 1/2 boundary + |hg|-norm <= boundary,
// reported as "t4-left" and "t4-right". The middle expression dominates the
// diameter only when Re(h(0) g(0)) >= 0 (the exact identity carries
// -2pi Re(h0 g0), and int |f|^2 = int (|h|^2+|g|^2) + 4pi Re(h0 g0));
// inputs violating that are rejected.
std::pair<InequalityReport, InequalityReport> check_l2_decomposed(const Theorem4Input& in,
                                                                  double t,
                                                                  const QuadratureConfig& cfg);

// Pair form: int_{-1}^{1} (|phi| + |psi|)^p along the rotated diameter
// against 1/2 the same expression on the circle. Requires p > 0.
InequalityReport check_modulus_pair(const DiskFunction& phi, const DiskFunction& psi, double p,
                                    double t, const QuadratureConfig& cfg);

// int (|h|^2 + |g|^2)^{p/2} dtheta <= (1 - |cos(pi/p)|)^{-p/2} int |f|^p dtheta.
// Requires p > 1; the normalization g(0) = 0 built into HarmonicSeries is
// exactly the orthogonality hypothesis Re(h(0) conj(g(0))) = 0.
InequalityReport check_kalaj(const HarmonicSeries& f, double p, const QuadratureConfig& cfg);

// Sum of p-means over n diameters at angles t + k pi/n against
// csc(pi/2n) times the circle p-mean. Requires n >= 1 and p >= 2 (the
// constant is unspecified below 2, and frazer_constant throws there).
InequalityReport check_frazer(const DiskFunction& f, int n, double p, double t,
                              const QuadratureConfig& cfg);

// Derivative means: total variation along the diameter at angle t against
// 1/2 the largest angular variation over r_grid plus the boundary.
InequalityReport check_riesz_zygmund(const HarmonicSeries& f, double t,
                                     const std::vector<double>& r_grid,
                                     const QuadratureConfig& cfg);

enum class CheckerId { rf_analytic, t1, t3, t4, lemma1, kalaj, frazer, rz };

const char* to_token(CheckerId id);
CheckerId checker_from_token(const std::string& token);
// The corpus kind a checker consumes when none is requested explicitly.
CorpusKind default_corpus_kind(CheckerId id);

struct CorpusRunParams {
  std::vector<double> p_list{2.0};
  std::vector<double> t_list{0.0};
  std::vector<int> n_list{1};
  std::vector<double> rz_grid{0.5, 0.9, 0.99};
};

struct CorpusSummary {
  CorpusSpec spec;
  std::int64_t total = 0;
  std::int64_t violations = 0;
  std::int64_t nonconverged = 0;
  double min_margin = 0.0;
  int worst_index = -1;  // corpus index of the report with the least margin
  InequalityReport worst_report;
  CorpusItem worst_item;
};

struct CorpusRun {
  CorpusSummary summary;
  std::vector<InequalityReport> reports;
};

// Runs one checker across a generated corpus, sequentially and in a fixed
// order, so summaries are bit-reproducible. Rejects corpus kinds the checker
// cannot consume (e.g. a pair checker fed single functions).
CorpusRun run_corpus(CheckerId id, const CorpusSpec& spec, const CorpusRunParams& params,
                     const QuadratureConfig& cfg, bool keep_reports = true);

}  // namespace fejer
