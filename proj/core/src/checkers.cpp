#include "fejer/checkers.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fejer/constants.hpp"

namespace fejer {

namespace {

// Assembles a report from two finished sides. Additive or multiplicative
// structure on the rhs is folded by the caller; here only the classification
// policy lives: budget = 10x the summed quadrature errors.
InequalityReport make_report(std::string name, std::string label, double p, double t, double lhs,
                             double lhs_err, double rhs, double rhs_err, double constant,
                             std::int64_t evaluations, bool converged) {
  InequalityReport r;
  r.name = std::move(name);
  r.function_label = std::move(label);
  r.p = p;
  r.t = t;
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.margin = rhs - lhs;
  r.lhs_err = lhs_err;
  r.rhs_err = rhs_err;
  r.err_budget = 10.0 * (lhs_err + rhs_err);
  r.evaluations = evaluations;
  r.verdict = classify_verdict(lhs, rhs, r.err_budget, converged);
  return r;
}

}  // namespace

const char* to_token(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_within_budget: return "holds-within-budget";
    case Verdict::violation: return "violation";
    case Verdict::nonconverged: return "nonconverged";
  }
  return "nonconverged";
}

Verdict classify_verdict(double lhs, double rhs, double err_budget, bool converged) {
  if (!converged) return Verdict::nonconverged;
  if (lhs - rhs > err_budget) return Verdict::violation;
  if (lhs <= rhs) return Verdict::holds;
  return Verdict::holds_within_budget;
}

InequalityReport check_riesz_fejer_analytic(const DiskFunction& f, double p, double t,
                                            const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw std::invalid_argument("check_riesz_fejer_analytic: requires p > 0");
  const IntegralEstimate lhs = diameter_integral(f, t, p, cfg);
  const IntegralEstimate circ = circle_integral(f, p, cfg);
  return make_report("rf-analytic", "", p, t, lhs.value, lhs.err, 0.5 * circ.value,
                     0.5 * circ.err, 0.5, lhs.evaluations + circ.evaluations,
                     lhs.converged && circ.converged);
}

InequalityReport check_harmonic(const DiskFunction& f, double p, double t,
                                const QuadratureConfig& cfg) {
  const double c = harmonic_sharp_constant(p);  // validates p > 1
  const IntegralEstimate lhs = diameter_integral(f, t, p, cfg);
  const IntegralEstimate circ = circle_integral(f, p, cfg);
  return make_report("t1", "", p, t, lhs.value, lhs.err, c * circ.value, c * circ.err, c,
                     lhs.evaluations + circ.evaluations, lhs.converged && circ.converged);
}

InequalityReport check_l2_cross(const HarmonicSeries& f, double t, const QuadratureConfig& cfg) {
  const DiskFunction df = disk_function(f);
  const IntegralEstimate lhs = diameter_integral(df, t, 2.0, cfg);
  const IntegralEstimate circ = circle_integral(df, 2.0, cfg);
  const double cross = f.cross_term(t);
  const double rhs = 0.5 * circ.value + cross;
  // The cross term is a finite coefficient sum, exact to roundoff, but the
  // addition can cancel (equality witnesses), so floor the error at the
  // roundoff of the summands rather than of the tiny result.
  const double eps = std::numeric_limits<double>::epsilon();
  const double rhs_err = 0.5 * circ.err + 4.0 * eps * (0.5 * circ.value + std::fabs(cross));
  return make_report("t3", "", 2.0, t, lhs.value, lhs.err, rhs, rhs_err, 1.0,
                     lhs.evaluations + circ.evaluations, lhs.converged && circ.converged);
}

Theorem4Input theorem4_input(const HarmonicSeries& f) {
  Theorem4Input in;
  in.label = "";
  const DiskFunction df = disk_function(f);
  in.diameter_sq = [df](double t, const QuadratureConfig& cfg) {
    return diameter_integral(df, t, 2.0, cfg);
  };
  in.boundary_sq = [df](const QuadratureConfig& cfg) { return circle_integral(df, 2.0, cfg); };
  in.hg_norm = [f](const QuadratureConfig& cfg) {
    auto g = [&f](double theta) {
      const complexd w = std::polar(1.0, theta);
      return std::abs(f.eval_h(w) * f.eval_g(w));
    };
    return integrate_circle(g, cfg);
  };
  in.h0 = f.analytic_coefficients().empty() ? complexd(0.0, 0.0) : f.analytic_coefficients()[0];
  in.g0 = complexd(0.0, 0.0);  // structural: the series carries no b_0 slot
  return in;
}

std::pair<InequalityReport, InequalityReport> check_l2_decomposed(const Theorem4Input& in,
                                                                  double t,
                                                                  const QuadratureConfig& cfg) {
  const double cross0 = (in.h0 * in.g0).real();
  if (cross0 < -1e-12 * (1.0 + std::abs(in.h0) * std::abs(in.g0)))
    throw std::invalid_argument(
        "check_l2_decomposed: requires Re(h(0) g(0)) >= 0 for the middle bound to dominate");

  const IntegralEstimate diam = in.diameter_sq(t, cfg);
  const IntegralEstimate boundary = in.boundary_sq(cfg);
  const IntegralEstimate hg = in.hg_norm(cfg);

  const double middle = 0.5 * boundary.value + hg.value;
  const double middle_err = 0.5 * boundary.err + hg.err +
                            4.0 * std::numeric_limits<double>::epsilon() * std::fabs(middle);
  const std::int64_t evals = diam.evaluations + boundary.evaluations + hg.evaluations;

  InequalityReport left =
      make_report("t4-left", in.label, 2.0, t, diam.value, diam.err, middle, middle_err, 1.0,
                  evals, diam.converged && boundary.converged && hg.converged);
  InequalityReport right =
      make_report("t4-right", in.label, 2.0, t, middle, middle_err, boundary.value, boundary.err,
                  1.0, evals, boundary.converged && hg.converged);
  return {std::move(left), std::move(right)};
}

InequalityReport check_modulus_pair(const DiskFunction& phi, const DiskFunction& psi, double p,
                                    double t, const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw std::invalid_argument("check_modulus_pair: requires p > 0");
  const complexd dir = std::polar(1.0, t);
  auto along = [&](double x) {
    return std::pow(std::abs(phi.value(x * dir)) + std::abs(psi.value(x * dir)), p);
  };
  auto around = [&](double theta) {
    return std::pow(phi.boundary_abs(theta) + psi.boundary_abs(theta), p);
  };
  const IntegralEstimate lhs = integrate_segment(along, -1.0, 1.0, cfg);
  const IntegralEstimate circ = integrate_circle(around, cfg);
  return make_report("lemma1", "", p, t, lhs.value, lhs.err, 0.5 * circ.value, 0.5 * circ.err,
                     0.5, lhs.evaluations + circ.evaluations, lhs.converged && circ.converged);
}

InequalityReport check_kalaj(const HarmonicSeries& f, double p, const QuadratureConfig& cfg) {
  const double c = kalaj_constant(p);  // validates p > 1
  auto component = [&](double theta) {
    const complexd w = std::polar(1.0, theta);
    return std::pow(std::norm(f.eval_h(w)) + std::norm(f.eval_g(w)), p / 2.0);
  };
  const IntegralEstimate lhs = integrate_circle(component, cfg);
  const IntegralEstimate circ = circle_integral(disk_function(f), p, cfg);
  return make_report("kalaj", "", p, 0.0, lhs.value, lhs.err, c * circ.value, c * circ.err, c,
                     lhs.evaluations + circ.evaluations, lhs.converged && circ.converged);
}

InequalityReport check_frazer(const DiskFunction& f, int n, double p, double t,
                              const QuadratureConfig& cfg) {
  const double c = frazer_constant(n, p);  // validates n >= 1, p >= 2
  double lhs = 0.0, lhs_err = 0.0;
  std::int64_t evals = 0;
  bool converged = true;
  for (int k = 0; k < n; ++k) {
    const IntegralEstimate part =
        diameter_integral(f, t + k * std::numbers::pi / n, p, cfg);
    lhs += part.value;
    lhs_err += part.err;
    evals += part.evaluations;
    converged = converged && part.converged;
  }
  const IntegralEstimate circ = circle_integral(f, p, cfg);
  InequalityReport r =
      make_report("frazer", "", p, t, lhs, lhs_err, c * circ.value, c * circ.err, c,
                  evals + circ.evaluations, converged && circ.converged);
  return r;
}

InequalityReport check_riesz_zygmund(const HarmonicSeries& f, double t,
                                     const std::vector<double>& r_grid,
                                     const QuadratureConfig& cfg) {
  const RadialAngularSides sides = riesz_zygmund_sides(f, t, r_grid, cfg);
  return make_report("rz", "", 1.0, t, sides.radial.value, sides.radial.err,
                     0.5 * sides.angular.value, 0.5 * sides.angular.err, 0.5,
                     sides.radial.evaluations + sides.angular.evaluations,
                     sides.radial.converged && sides.angular.converged);
}

const char* to_token(CheckerId id) {
  switch (id) {
    case CheckerId::rf_analytic: return "rf-analytic";
    case CheckerId::t1: return "t1";
    case CheckerId::t3: return "t3";
    case CheckerId::t4: return "t4";
    case CheckerId::lemma1: return "lemma1";
    case CheckerId::kalaj: return "kalaj";
    case CheckerId::frazer: return "frazer";
    case CheckerId::rz: return "rz";
  }
  return "t1";
}

CheckerId checker_from_token(const std::string& token) {
  if (token == "rf-analytic") return CheckerId::rf_analytic;
  if (token == "t1") return CheckerId::t1;
  if (token == "t3") return CheckerId::t3;
  if (token == "t4") return CheckerId::t4;
  if (token == "lemma1") return CheckerId::lemma1;
  if (token == "kalaj") return CheckerId::kalaj;
  if (token == "frazer") return CheckerId::frazer;
  if (token == "rz") return CheckerId::rz;
  throw std::invalid_argument("unknown checker: " + token);
}

CorpusKind default_corpus_kind(CheckerId id) {
  switch (id) {
    case CheckerId::rf_analytic:
    case CheckerId::frazer:
      return CorpusKind::analytic;
    case CheckerId::lemma1:
      return CorpusKind::analytic_pair;
    default:
      return CorpusKind::harmonic;
  }
}

namespace {

bool kind_allowed(CheckerId id, CorpusKind kind) {
  switch (id) {
    case CheckerId::rf_analytic:
    case CheckerId::frazer:
      return kind == CorpusKind::analytic || kind == CorpusKind::blaschke_times_analytic;
    case CheckerId::lemma1:
      return kind == CorpusKind::analytic_pair;
    case CheckerId::t1:
    case CheckerId::t3:
    case CheckerId::t4:
    case CheckerId::kalaj:
    case CheckerId::rz:
      return kind == CorpusKind::harmonic || kind == CorpusKind::analytic;
  }
  return false;
}

DiskFunction item_disk_function(const CorpusItem& item) {
  if (item.blaschke)
    return multiply_blaschke(*item.blaschke,
                             AnalyticSeries(item.primary.analytic_coefficients()));
  return disk_function(item.primary);
}

}  // namespace

CorpusRun run_corpus(CheckerId id, const CorpusSpec& spec, const CorpusRunParams& params,
                     const QuadratureConfig& cfg, bool keep_reports) {
  if (!kind_allowed(id, spec.kind))
    throw std::invalid_argument(std::string("run_corpus: checker ") + to_token(id) +
                                " cannot consume corpus kind " + to_token(spec.kind));

  const std::vector<CorpusItem> items = generate_corpus(spec);
  CorpusRun run;
  run.summary.spec = spec;

  const auto absorb = [&](const InequalityReport& r, int index, const CorpusItem& item) {
    ++run.summary.total;
    if (r.verdict == Verdict::violation) ++run.summary.violations;
    if (r.verdict == Verdict::nonconverged) ++run.summary.nonconverged;
    if (run.summary.worst_index < 0 || r.margin < run.summary.min_margin) {
      run.summary.min_margin = r.margin;
      run.summary.worst_index = index;
      run.summary.worst_report = r;
      run.summary.worst_item = item;
    }
    if (keep_reports) run.reports.push_back(r);
  };

  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    const CorpusItem& item = items[static_cast<std::size_t>(i)];
    const std::string label = std::string(to_token(spec.kind)) + "[" + std::to_string(i) + "]";
    switch (id) {
      case CheckerId::rf_analytic: {
        const DiskFunction df = item_disk_function(item);
        for (double p : params.p_list)
          for (double t : params.t_list) {
            InequalityReport r = check_riesz_fejer_analytic(df, p, t, cfg);
            r.function_label = label;
            absorb(r, i, item);
          }
        break;
      }
      case CheckerId::t1: {
        const DiskFunction df = disk_function(item.primary);
        for (double p : params.p_list)
          for (double t : params.t_list) {
            InequalityReport r = check_harmonic(df, p, t, cfg);
            r.function_label = label;
            absorb(r, i, item);
          }
        break;
      }
      case CheckerId::t3: {
        for (double t : params.t_list) {
          InequalityReport r = check_l2_cross(item.primary, t, cfg);
          r.function_label = label;
          absorb(r, i, item);
        }
        break;
      }
      case CheckerId::t4: {
        Theorem4Input in = theorem4_input(item.primary);
        in.label = label;
        for (double t : params.t_list) {
          auto [left, right] = check_l2_decomposed(in, t, cfg);
          absorb(left, i, item);
          absorb(right, i, item);
        }
        break;
      }
      case CheckerId::lemma1: {
        const DiskFunction phi = disk_function(item.primary);
        const DiskFunction psi = disk_function(*item.second);
        for (double p : params.p_list)
          for (double t : params.t_list) {
            InequalityReport r = check_modulus_pair(phi, psi, p, t, cfg);
            r.function_label = label;
            absorb(r, i, item);
          }
        break;
      }
      case CheckerId::kalaj: {
        for (double p : params.p_list) {
          InequalityReport r = check_kalaj(item.primary, p, cfg);
          r.function_label = label;
          absorb(r, i, item);
        }
        break;
      }
      case CheckerId::frazer: {
        const DiskFunction df = item_disk_function(item);
        for (int n : params.n_list)
          for (double p : params.p_list)
            for (double t : params.t_list) {
              InequalityReport r = check_frazer(df, n, p, t, cfg);
              r.function_label = label;
              absorb(r, i, item);
            }
        break;
      }
      case CheckerId::rz: {
        for (double t : params.t_list) {
          InequalityReport r = check_riesz_zygmund(item.primary, t, params.rz_grid, cfg);
          r.function_label = label;
          absorb(r, i, item);
        }
        break;
      }
    }
  }
  return run;
}

}  // namespace fejer
