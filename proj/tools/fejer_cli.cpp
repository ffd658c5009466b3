// Command-line front end: verify inequalities on named functions or seeded
// corpora, sweep the sharpness family, tabulate constants, solve the
// rectangle geometry, and search for conjecture counterexamples.
//
// Exit codes: 0 success, 1 usage or invalid arguments, 2 at least one
// violation verdict, 3 at least one nonconverged verdict (violations take
// precedence), 4 rectangle bracket failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fejer/checkers.hpp"
#include "fejer/constants.hpp"
#include "fejer/extremal.hpp"
#include "fejer/function_model.hpp"
#include "fejer/quadrature.hpp"
#include "fejer/report.hpp"

namespace {

using nlohmann::json;
using namespace fejer;

constexpr double kPi = std::numbers::pi;

QuadratureConfig config_from_env() {
  QuadratureConfig cfg;
  if (const char* tol = std::getenv("FEJER_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || !(v > 0.0))
      throw std::invalid_argument("FEJER_QUAD_TOL must be a positive number");
    cfg.abs_tol = v;
    cfg.rel_tol = 10.0 * v;
  }
  return cfg;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

// --corpus random:count=100,seed=7[,degree=12][,decay=1.5][,kind=harmonic]
CorpusSpec parse_corpus(const std::string& text, CorpusKind default_kind) {
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) != 0)
    throw std::invalid_argument("corpus spec must start with 'random:'");
  CorpusSpec spec;
  spec.kind = default_kind;
  std::stringstream ss(text.substr(prefix.size()));
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("corpus spec entries must look like key=value");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "count")
      spec.count = std::stoi(value);
    else if (key == "seed")
      spec.seed = std::stoull(value);
    else if (key == "degree")
      spec.degree = std::stoi(value);
    else if (key == "decay")
      spec.decay = std::stod(value);
    else if (key == "kind")
      spec.kind = corpus_kind_from_token(value);
    else
      throw std::invalid_argument("unknown corpus spec key: " + key);
  }
  return spec;
}

struct NamedFunction {
  std::string name;
  // Series-backed when present; the rectangle carries its own closures.
  std::optional<HarmonicSeries> series;
  std::optional<RectangleMap> rectangle;
  // Per-p evaluator (the extremal family shape depends on p).
  std::function<DiskFunction(double p)> make_disk;
};

NamedFunction make_named(const std::string& name, double r, double eps,
                         const QuadratureConfig& cfg) {
  NamedFunction nf;
  nf.name = name;
  if (name == "z") {
    HarmonicSeries f({{0.0, 0.0}, {1.0, 0.0}}, {});
    nf.series = f;
    nf.make_disk = [f](double) { return disk_function(f); };
  } else if (name == "z-plus-zbar") {
    HarmonicSeries f({{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}});
    nf.series = f;
    nf.make_disk = [f](double) { return disk_function(f); };
  } else if (name == "constant") {
    HarmonicSeries f({{1.0, 0.0}}, {});
    nf.series = f;
    nf.make_disk = [f](double) { return disk_function(f); };
  } else if (name == "extremal") {
    nf.make_disk = [r](double p) { return disk_function(ExtremalFamily{p, r}); };
  } else if (name == "rectangle") {
    const RectangleMap map = rectmap_solve(eps, cfg);
    nf.rectangle = map;
    nf.make_disk = [map](double) { return disk_function(map); };
  } else {
    throw std::invalid_argument("unknown named function: " + name +
                                " (expected z, z-plus-zbar, constant, extremal, rectangle)");
  }
  return nf;
}

int exit_code_for(const std::vector<InequalityReport>& reports) {
  bool nonconverged = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::violation) return 2;
    if (r.verdict == Verdict::nonconverged) nonconverged = true;
  }
  return nonconverged ? 3 : 0;
}

json tolerances_json(const QuadratureConfig& cfg) {
  return json{{"abs_tol", cfg.abs_tol},
              {"rel_tol", cfg.rel_tol},
              {"max_subdivisions", cfg.max_subdivisions}};
}

struct VerifyOptions {
  std::string theorem;
  std::vector<double> p_list{2.0};
  std::vector<double> t_list{0.0, kPi / 6.0, kPi / 4.0, kPi / 2.0};
  std::vector<int> n_list{1, 2, 3};
  std::vector<double> rz_grid{0.5, 0.9, 0.99};
  std::string corpus;
  std::string named;
  double r = 0.99;
  double eps = 0.1;
  std::string format = "json";
  std::string out;
};

int cmd_verify(const VerifyOptions& opt, const std::string& command) {
  const QuadratureConfig cfg = config_from_env();
  const CheckerId id = checker_from_token(opt.theorem);
  if (opt.corpus.empty() == opt.named.empty())
    throw std::invalid_argument("verify needs exactly one of --corpus or --named");

  RunManifest manifest;
  manifest.command = command;
  manifest.started = iso8601_utc_now();

  std::vector<InequalityReport> reports;
  std::optional<CorpusSummary> summary;

  CorpusRunParams params;
  params.p_list = opt.p_list;
  params.t_list = opt.t_list;
  params.n_list = opt.n_list;
  params.rz_grid = opt.rz_grid;

  json config{{"theorem", opt.theorem},
              {"p", opt.p_list},
              {"t", opt.t_list},
              {"tolerances", tolerances_json(cfg)},
              {"format", opt.format}};

  if (!opt.corpus.empty()) {
    const CorpusSpec spec = parse_corpus(opt.corpus, default_corpus_kind(id));
    config["corpus"] = to_json(spec);
    if (id == CheckerId::frazer) config["n"] = opt.n_list;
    if (id == CheckerId::rz) config["rz_grid"] = opt.rz_grid;
    CorpusRun run = run_corpus(id, spec, params, cfg);
    reports = std::move(run.reports);
    summary = std::move(run.summary);
  } else {
    const NamedFunction nf = make_named(opt.named, opt.r, opt.eps, cfg);
    config["named"] = opt.named;
    if (opt.named == "extremal") config["r"] = opt.r;
    if (opt.named == "rectangle") config["eps"] = opt.eps;

    const auto need_series = [&]() -> const HarmonicSeries& {
      if (!nf.series)
        throw std::invalid_argument("checker " + opt.theorem +
                                    " needs a series-backed named function");
      return *nf.series;
    };

    switch (id) {
      case CheckerId::rf_analytic:
        for (double p : opt.p_list)
          for (double t : opt.t_list) {
            InequalityReport r = check_riesz_fejer_analytic(nf.make_disk(p), p, t, cfg);
            r.function_label = nf.name;
            reports.push_back(std::move(r));
          }
        break;
      case CheckerId::t1:
        for (double p : opt.p_list)
          for (double t : opt.t_list) {
            InequalityReport r = check_harmonic(nf.make_disk(p), p, t, cfg);
            r.function_label = nf.name;
            reports.push_back(std::move(r));
          }
        break;
      case CheckerId::t3:
        for (double t : opt.t_list) {
          InequalityReport r = check_l2_cross(need_series(), t, cfg);
          r.function_label = nf.name;
          reports.push_back(std::move(r));
        }
        break;
      case CheckerId::t4: {
        Theorem4Input in =
            nf.rectangle ? theorem4_input(*nf.rectangle) : theorem4_input(need_series());
        in.label = nf.name;
        for (double t : opt.t_list) {
          auto [left, right] = check_l2_decomposed(in, t, cfg);
          reports.push_back(std::move(left));
          reports.push_back(std::move(right));
        }
        break;
      }
      case CheckerId::lemma1:
        for (double p : opt.p_list)
          for (double t : opt.t_list) {
            const DiskFunction df = nf.make_disk(p);
            InequalityReport r = check_modulus_pair(df, df, p, t, cfg);
            r.function_label = nf.name;
            reports.push_back(std::move(r));
          }
        break;
      case CheckerId::kalaj:
        for (double p : opt.p_list) {
          InequalityReport r = check_kalaj(need_series(), p, cfg);
          r.function_label = nf.name;
          reports.push_back(std::move(r));
        }
        break;
      case CheckerId::frazer:
        for (int n : opt.n_list)
          for (double p : opt.p_list)
            for (double t : opt.t_list) {
              InequalityReport r = check_frazer(nf.make_disk(p), n, p, t, cfg);
              r.function_label = nf.name;
              reports.push_back(std::move(r));
            }
        break;
      case CheckerId::rz:
        for (double t : opt.t_list) {
          InequalityReport r = check_riesz_zygmund(need_series(), t, opt.rz_grid, cfg);
          r.function_label = nf.name;
          reports.push_back(std::move(r));
        }
        break;
    }
  }

  manifest.config = config;
  manifest.finished = iso8601_utc_now();

  if (opt.format == "csv") {
    write_text(opt.out, reports_to_csv(reports));
    if (!opt.out.empty() && opt.out != "-")
      write_json(opt.out + ".manifest.json", to_json(manifest));
  } else if (opt.format == "json") {
    json doc{{"manifest", to_json(manifest)}};
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["reports"] = arr;
    if (summary) doc["summary"] = to_json(*summary);
    write_json(opt.out, doc);
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  return exit_code_for(reports);
}

struct SharpnessOptions {
  double p = 0.0;
  std::vector<double> r_list{0.9, 0.99, 0.999, 0.9999};
  std::string format = "csv";
  std::string out;
};

int cmd_sharpness(const SharpnessOptions& opt, const std::string& command) {
  const QuadratureConfig cfg = config_from_env();
  RunManifest manifest;
  manifest.command = command;
  manifest.started = iso8601_utc_now();

  const double limit = conjectured_sharp_constant(opt.p);
  const std::vector<SharpnessPoint> points = sharpness_sweep(opt.p, opt.r_list, cfg);

  manifest.config = json{{"p", opt.p},
                         {"r", opt.r_list},
                         {"limit", limit},
                         {"tolerances", tolerances_json(cfg)},
                         {"format", opt.format}};
  manifest.finished = iso8601_utc_now();

  bool nonconverged = false;
  for (const auto& pt : points) nonconverged = nonconverged || !pt.converged;

  if (opt.format == "csv") {
    std::string text = "r,ratio,limit,gap\n";
    char buf[160];
    for (const auto& pt : points) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", pt.r, pt.ratio, limit,
                    limit - pt.ratio);
      text += buf;
    }
    write_text(opt.out, text);
    if (!opt.out.empty() && opt.out != "-")
      write_json(opt.out + ".manifest.json", to_json(manifest));
  } else if (opt.format == "json") {
    json arr = json::array();
    for (const auto& pt : points) {
      json j = to_json(pt);
      j["limit"] = limit;
      j["gap"] = limit - pt.ratio;
      arr.push_back(j);
    }
    write_json(opt.out, json{{"manifest", to_json(manifest)}, {"points", arr}});
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  return nonconverged ? 3 : 0;
}

struct ConstantsOptions {
  std::vector<double> p_list;
  std::vector<int> n_list{1, 2, 3};
  std::string format = "csv";
  std::string out;
};

int cmd_constants(const ConstantsOptions& opt, const std::string& command) {
  config_from_env();  // no quadrature runs here; still reject a malformed override
  RunManifest manifest;
  manifest.command = command;
  manifest.started = iso8601_utc_now();
  const auto rows = sharp_constant_table(opt.p_list, opt.n_list);
  manifest.config = json{{"p", opt.p_list}, {"n", opt.n_list}, {"format", opt.format}};
  manifest.finished = iso8601_utc_now();

  if (opt.format == "csv") {
    std::string text = "p,harmonic,kalaj,conjectured";
    for (int n : opt.n_list) text += ",frazer_" + std::to_string(n);
    text += '\n';
    char buf[64];
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%.17g", row.p);
      text += buf;
      for (double v : {row.harmonic, row.kalaj, row.conjectured}) {
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        text += buf;
      }
      for (int n : opt.n_list) {
        const auto it = row.frazer.find(n);
        if (it == row.frazer.end()) {
          text += ',';
        } else {
          std::snprintf(buf, sizeof buf, ",%.17g", it->second);
          text += buf;
        }
      }
      text += '\n';
    }
    write_text(opt.out, text);
    if (!opt.out.empty() && opt.out != "-")
      write_json(opt.out + ".manifest.json", to_json(manifest));
  } else if (opt.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j{{"p", row.p},
             {"harmonic", row.harmonic},
             {"kalaj", row.kalaj},
             {"conjectured", row.conjectured}};
      json fr = json::object();
      for (const auto& [n, v] : row.frazer) fr[std::to_string(n)] = v;
      j["frazer"] = fr;
      arr.push_back(j);
    }
    write_json(opt.out, json{{"manifest", to_json(manifest)}, {"rows", arr}});
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  return 0;
}

struct RectmapOptions {
  double eps = 0.0;
  std::string out;
};

int cmd_rectmap(const RectmapOptions& opt, const std::string& command) {
  const QuadratureConfig cfg = config_from_env();
  RunManifest manifest;
  manifest.command = command;
  manifest.started = iso8601_utc_now();

  const RectangleMap map = rectmap_solve(opt.eps, cfg);
  const RectangleSharpness sharp = theorem4_sharpness(map, cfg);

  manifest.config = json{{"eps", opt.eps}, {"tolerances", tolerances_json(cfg)}};
  manifest.finished = iso8601_utc_now();

  json doc{{"manifest", to_json(manifest)},
           {"eps", map.eps},
           {"alpha", map.alpha},
           {"A", map.A},
           // alpha underflows double below eps ~ 2e-3; the logarithm stays
           // informative down to the solver's long double floor.
           {"log10_sin_alpha", static_cast<double>(std::log10(map.sin_alpha))},
           {"sharpness", to_json(sharp)}};
  write_json(opt.out, doc);
  return 0;
}

struct ExploreOptions {
  double p = 3.0;
  int budget = 10000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_explore(const ExploreOptions& opt, const std::string& command) {
  const QuadratureConfig cfg = config_from_env();
  RunManifest manifest;
  manifest.command = command;
  manifest.started = iso8601_utc_now();

  const ExplorerResult result = conjecture_explore(opt.p, opt.budget, opt.seed, cfg);
  const double recomputed = explorer_ratio(result.best, opt.p, cfg);

  manifest.config = json{{"p", opt.p},
                         {"budget", opt.budget},
                         {"seed", opt.seed},
                         {"tolerances", tolerances_json(cfg)}};
  manifest.finished = iso8601_utc_now();

  json doc = to_json(result);
  doc["manifest"] = to_json(manifest);
  doc["recomputed_ratio"] = recomputed;
  write_json(opt.out, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification toolkit for diameter-vs-circle inequalities"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "Check an inequality on a corpus or named function");
  verify->add_option("--theorem", vopt.theorem,
                     "one of rf-analytic, t1, t3, t4, lemma1, kalaj, frazer, rz")
      ->required();
  verify->add_option("--p", vopt.p_list, "exponent list")->delimiter(',');
  verify->add_option("--t", vopt.t_list, "diameter angle list")->delimiter(',');
  verify->add_option("--n", vopt.n_list, "diameter count list (frazer)")->delimiter(',');
  verify->add_option("--rz-grid", vopt.rz_grid, "interior radii for rz (1 is always added)")
      ->delimiter(',');
  verify->add_option("--corpus", vopt.corpus, "random:count=N,seed=S[,degree=D][,decay=X][,kind=K]");
  verify->add_option("--named", vopt.named, "z, z-plus-zbar, constant, extremal, rectangle");
  verify->add_option("--r", vopt.r, "radius for --named extremal");
  verify->add_option("--eps", vopt.eps, "aspect ratio for --named rectangle");
  verify->add_option("--format", vopt.format, "json or csv");
  verify->add_option("--out", vopt.out, "output path (default stdout)");

  SharpnessOptions sopt;
  CLI::App* sharpness = app.add_subcommand("sharpness", "Sweep the extremal family ratio");
  sharpness->add_option("--p", sopt.p, "exponent (> 1)")->required();
  sharpness->add_option("--r", sopt.r_list, "radius list")->delimiter(',');
  sharpness->add_option("--format", sopt.format, "csv or json");
  sharpness->add_option("--out", sopt.out, "output path (default stdout)");

  ConstantsOptions copt;
  CLI::App* constants = app.add_subcommand("constants", "Tabulate the sharp constants");
  constants->add_option("--p", copt.p_list, "exponent list")->required()->delimiter(',');
  constants->add_option("--n", copt.n_list, "diameter counts for the frazer columns")
      ->delimiter(',');
  constants->add_option("--format", copt.format, "csv or json");
  constants->add_option("--out", copt.out, "output path (default stdout)");

  RectmapOptions ropt;
  CLI::App* rectmap = app.add_subcommand("rectmap", "Solve the thin-rectangle geometry");
  rectmap->add_option("--eps", ropt.eps, "aspect ratio in (0, 1]")->required();
  rectmap->add_option("--out", ropt.out, "output path (default stdout)");

  ExploreOptions eopt;
  CLI::App* explore = app.add_subcommand("explore", "Search for large diameter-to-circle ratios");
  explore->add_option("--p", eopt.p, "exponent (> 2)");
  explore->add_option("--budget", eopt.budget, "objective evaluation budget (>= 100)");
  explore->add_option("--seed", eopt.seed, "random seed");
  explore->add_option("--out", eopt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (verify->parsed()) return cmd_verify(vopt, command);
    if (sharpness->parsed()) return cmd_sharpness(sopt, command);
    if (constants->parsed()) return cmd_constants(copt, command);
    if (rectmap->parsed()) return cmd_rectmap(ropt, command);
    if (explore->parsed()) return cmd_explore(eopt, command);
  } catch (const NoBracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
