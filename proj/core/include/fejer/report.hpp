#pragma once

// Serialization of functions, reports and run manifests. JSON objects use
// nlohmann::json, whose alphabetically ordered keys and shortest-round-trip
// number formatting make parse-then-dump byte-identical; CSV rows carry 17
// significant digits so every double survives a reparse.

#include <string>
#include <vector>

#include <json.hpp>

#include "fejer/checkers.hpp"
#include "fejer/extremal.hpp"
#include "fejer/function_model.hpp"

namespace fejer {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Complex coefficient arrays serialize as [[re, im], ...]; a harmonic series
// is {"a": [...], "b": [...]} with b starting at index 1.
nlohmann::json to_json(const HarmonicSeries& f);
HarmonicSeries harmonic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalyticSeries& f);
AnalyticSeries analytic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiniteBlaschke& b);
FiniteBlaschke blaschke_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CorpusItem& item);
nlohmann::json to_json(const CorpusSpec& spec);
CorpusSpec corpus_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntegralEstimate& est);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const CorpusSummary& s);
nlohmann::json to_json(const SharpnessPoint& pt);
nlohmann::json to_json(const RectangleSharpness& s);
nlohmann::json to_json(const ExplorerResult& r);

// Header "name,p,t,lhs,rhs,constant,margin,err_budget,verdict" and one row
// per report, numbers at 17 significant digits.
std::string csv_header();
std::string csv_row(const InequalityReport& r);
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

double parse_double_17(const std::string& field);  // strict reparse helper

struct RunManifest {
  std::string command;         // reconstructed invocation
  nlohmann::json config;       // every resolved option, including tolerances
  std::string toolkit_version = kToolkitVersion;
  std::string started;         // ISO 8601 UTC
  std::string finished;
};

nlohmann::json to_json(const RunManifest& m);
std::string iso8601_utc_now();

}  // namespace fejer
