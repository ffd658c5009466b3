#include "fejer/report.hpp"

#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace fejer {

namespace {

nlohmann::json complex_array(const std::vector<complexd>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const complexd& c : v) arr.push_back(nlohmann::json::array({c.real(), c.imag()}));
  return arr;
}

std::vector<complexd> complex_vector(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<complexd> v;
  v.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("coefficient must be a [re, im] pair");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

nlohmann::json to_json(const HarmonicSeries& f) {
  return nlohmann::json{{"a", complex_array(f.analytic_coefficients())},
                        {"b", complex_array(f.coanalytic_coefficients())}};
}

HarmonicSeries harmonic_from_json(const nlohmann::json& j) {
  return HarmonicSeries(complex_vector(j.at("a")), complex_vector(j.at("b")));
}

nlohmann::json to_json(const AnalyticSeries& f) {
  return nlohmann::json{{"c", complex_array(f.coefficients())}};
}

AnalyticSeries analytic_from_json(const nlohmann::json& j) {
  return AnalyticSeries(complex_vector(j.at("c")));
}

nlohmann::json to_json(const FiniteBlaschke& b) {
  return nlohmann::json{{"zeros", complex_array(b.zeros())},
                        {"rotation", {b.rotation().real(), b.rotation().imag()}}};
}

FiniteBlaschke blaschke_from_json(const nlohmann::json& j) {
  const auto& rot = j.at("rotation");
  return FiniteBlaschke(complex_vector(j.at("zeros")),
                        complexd(rot.at(0).get<double>(), rot.at(1).get<double>()));
}

nlohmann::json to_json(const CorpusItem& item) {
  nlohmann::json j{{"primary", to_json(item.primary)}};
  if (item.second) j["second"] = to_json(*item.second);
  if (item.blaschke) j["blaschke"] = to_json(*item.blaschke);
  return j;
}

nlohmann::json to_json(const CorpusSpec& spec) {
  return nlohmann::json{{"count", spec.count},
                        {"degree", spec.degree},
                        {"decay", spec.decay},
                        {"seed", spec.seed},
                        {"kind", to_token(spec.kind)}};
}

CorpusSpec corpus_spec_from_json(const nlohmann::json& j) {
  CorpusSpec spec;
  spec.count = j.at("count").get<int>();
  spec.degree = j.at("degree").get<int>();
  spec.decay = j.at("decay").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.kind = corpus_kind_from_token(j.at("kind").get<std::string>());
  return spec;
}

nlohmann::json to_json(const IntegralEstimate& est) {
  return nlohmann::json{{"value", est.value},
                        {"err", est.err},
                        {"evaluations", est.evaluations},
                        {"converged", est.converged}};
}

nlohmann::json to_json(const InequalityReport& r) {
  return nlohmann::json{{"name", r.name},
                        {"function", r.function_label},
                        {"p", r.p},
                        {"t", r.t},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"constant", r.constant},
                        {"margin", r.margin},
                        {"err_budget", r.err_budget},
                        {"lhs_err", r.lhs_err},
                        {"rhs_err", r.rhs_err},
                        {"evaluations", r.evaluations},
                        {"verdict", to_token(r.verdict)}};
}

nlohmann::json to_json(const CorpusSummary& s) {
  return nlohmann::json{{"spec", to_json(s.spec)},
                        {"total", s.total},
                        {"violations", s.violations},
                        {"nonconverged", s.nonconverged},
                        {"min_margin", s.min_margin},
                        {"worst_index", s.worst_index},
                        {"worst_report", to_json(s.worst_report)},
                        {"worst_case", to_json(s.worst_item)}};
}

nlohmann::json to_json(const SharpnessPoint& pt) {
  return nlohmann::json{{"r", pt.r},
                        {"diameter", pt.diameter},
                        {"circle", pt.circle},
                        {"circle_err", pt.circle_err},
                        {"ratio", pt.ratio},
                        {"evaluations", pt.evaluations},
                        {"converged", pt.converged}};
}

nlohmann::json to_json(const RectangleSharpness& s) {
  return nlohmann::json{{"eps", s.eps},
                        {"diameter", s.diameter},
                        {"middle", s.middle},
                        {"boundary", s.boundary},
                        {"hg_norm", s.hg_norm}};
}

nlohmann::json to_json(const ExplorerResult& r) {
  return nlohmann::json{{"p", r.p},
                        {"budget", r.budget},
                        {"seed", r.seed},
                        {"restarts", r.restarts},
                        {"evaluations", r.evaluations},
                        {"best_ratio", r.best_ratio},
                        {"ratio_err", r.ratio_err},
                        {"witness", to_json(r.best)}};
}

std::string csv_header() { return "name,p,t,lhs,rhs,constant,margin,err_budget,verdict"; }

std::string csv_row(const InequalityReport& r) {
  std::string row = r.name;
  for (double v : {r.p, r.t, r.lhs, r.rhs, r.constant, r.margin, r.err_budget}) {
    row += ',';
    row += fmt17(v);
  }
  row += ',';
  row += to_token(r.verdict);
  return row;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::string out = csv_header();
  out += '\n';
  for (const auto& r : reports) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

double parse_double_17(const std::string& field) {
  std::size_t pos = 0;
  const double v = std::stod(field, &pos);
  if (pos != field.size()) throw std::invalid_argument("trailing characters in numeric field");
  return v;
}

nlohmann::json to_json(const RunManifest& m) {
  return nlohmann::json{{"command", m.command},
                        {"config", m.config},
                        {"toolkit_version", m.toolkit_version},
                        {"started", m.started},
                        {"finished", m.finished}};
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace fejer
