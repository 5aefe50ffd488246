#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convexlab/body_json.hpp"
#include "convexlab/ellipsoids.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/functionals.hpp"
#include "convexlab/harness.hpp"
#include "convexlab/positions.hpp"

using namespace convexlab;

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

nlohmann::json records_json(const std::vector<InequalityRecord>& recs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : recs) out.push_back(to_json(r));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convexlab: convex-geometry functionals and inequality checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::string csv_path, json_path;
  int threads = -1, pairs = -1, resolution = 0;
  auto* suite = app.add_subcommand("suite", "run the inequality suite and write reports");
  suite->add_option("--config", config_path, "JSON config file");
  suite->add_option("--dims", dims, "dimensions (2..6)");
  suite->add_option("--seed", seed, "base seed");
  suite->add_option("--pairs", pairs, "pairs per dimension");
  suite->add_option("--resolution", resolution, "quadrature nodes for every dimension");
  suite->add_option("--csv", csv_path, "CSV report path");
  suite->add_option("--json", json_path, "JSON report path");
  suite->add_option("--threads", threads, "worker threads (0: all cores)");

  std::string ineq, body_spec, body2_spec;
  auto* check = app.add_subcommand("check", "run one named inequality check");
  check->add_option("--ineq", ineq, "check name")->required();
  check->add_option("--body", body_spec, "body spec (JSON or @file)")->required();
  check->add_option("--body2", body2_spec, "second body for pair checks");

  auto* mahler = app.add_subcommand("mahler", "volume, polar volume and volume product");
  mahler->add_option("--body", body_spec, "body spec (JSON or @file)")->required();

  auto* evr = app.add_subcommand("evr", "Löwner ellipsoid and exterior volume ratio");
  evr->add_option("--body", body_spec, "body spec (JSON or @file)")->required();

  int restarts = 8;
  auto* position = app.add_subcommand("optimize-position", "maximize M over SL(n)");
  position->add_option("--body", body_spec, "body spec (JSON or @file)")->required();
  position->add_option("--restarts", restarts, "optimizer restarts");
  position->add_option("--seed", seed, "optimizer seed");

  int dim = 0;
  auto* constants = app.add_subcommand("constants", "sharp volume-product constants");
  constants->add_option("--dim", dim, "dimension")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*suite) {
      SuiteConfig config = config_path.empty() ? SuiteConfig{} : suite_config_from_json(read_json_file(config_path));
      if (suite->count("--dims")) config.dims = dims;
      if (suite->count("--seed")) config.seed = seed;
      if (suite->count("--pairs")) config.pairs = pairs;
      if (suite->count("--csv")) config.csv_path = csv_path;
      if (suite->count("--json")) config.json_path = json_path;
      if (suite->count("--threads")) config.threads = threads;
      if (suite->count("--resolution")) {
        for (int n : config.dims) config.resolutions[n] = resolution;
      }
      // Revalidate after the flags are merged.
      nlohmann::json merged = to_json(config);
      merged.update({{"csv", config.csv_path}, {"json", config.json_path}, {"threads", config.threads}});
      config = suite_config_from_json(merged);
      const Report report = run_suite(config);
      if (!config.csv_path.empty()) emit_report(report, ReportFormat::csv, config.csv_path);
      if (!config.json_path.empty()) emit_report(report, ReportFormat::json, config.json_path);
      if (config.csv_path.empty() && config.json_path.empty()) std::cout << report_csv(report);
      std::fprintf(stderr, "%zu rows, %zu passed, %zu failed\n", report.rows.size(), report.passed(), report.failed());
      return report.pass() ? 0 : 1;
    }
    if (*check) {
      const ConvexBody K = parse_body_spec(body_spec);
      std::optional<ConvexBody> L;
      if (!body2_spec.empty()) L = parse_body_spec(body2_spec);
      const auto recs = run_check(ineq, K, L, default_quadrature(K.dim()));
      print(records_json(recs));
      for (const auto& r : recs) {
        if (!r.pass) return 1;
      }
      return 0;
    }
    if (*mahler) {
      const ConvexBody K = parse_body_spec(body_spec);
      const double vol = volume(K);
      const double pvol = polar_volume(K);
      print({{"body", K.name()}, {"dim", K.dim()}, {"volume", vol}, {"polar_volume", pvol}, {"volume_product", vol * pvol}});
      return 0;
    }
    if (*evr) {
      print(to_json(exterior_volume_ratio(parse_body_spec(body_spec))));
      return 0;
    }
    if (*position) {
      const ConvexBody K = parse_body_spec(body_spec);
      if (K.dim() > 4) fail(ErrorKind::invalid_argument, "position optimization supports n <= 4");
      PositionConfig pc;
      pc.restarts = restarts;
      if (position->count("--seed")) pc.seed = seed;
      const PositionResult r = optimize_M(K, pc);
      print({{"body", K.name()},
             {"M_star", r.M_star},
             {"T_star", matrix_json(r.T_star)},
             {"omega_M", r.omega_M},
             {"volume_product", r.volume_product},
             {"low_confidence", r.low_confidence}});
      return 0;
    }
    if (*constants) {
      const BartheConstants c = barthe_constants(dim);
      print({{"dim", c.dim},
             {"symmetric", c.symmetric},
             {"general", c.general},
             {"symmetric_evr_power", c.symmetric_evr_power},
             {"general_evr_power", c.general_evr_power}});
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
