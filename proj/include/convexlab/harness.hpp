#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "convexlab/bodies.hpp"
#include "convexlab/records.hpp"

namespace convexlab {

struct SuiteConfig {
  std::vector<int> dims{2, 3};
  std::map<int, int> resolutions;  // per-dimension override of the default
  std::uint64_t seed = kDefaultSeed;

  // Corpus selectors.
  std::vector<std::string> families{"cube", "cross", "simplex", "ball", "pball", "ellipsoid", "rsym", "rpoly"};
  std::vector<double> pball_exponents{1.5, 3.0, 4.0};
  std::vector<double> ellipsoid_aspects{2.0, 4.0};
  int random_symmetric = 50;
  int random_general = 20;

  int pairs = 200;
  int homothetic_every = 5;
  std::vector<double> holder_p{1e3, 1e4};

  std::vector<int> position_dims{2};
  int position_restarts = 8;
  std::vector<double> degeneracy_aspects{1, 2, 4, 8, 16, 32, 64};

  // Replaces the tolerance of every row with this inequality name.
  std::map<std::string, double> tolerance_overrides;

  std::string csv_path;
  std::string json_path;
  int threads = 0;  // 0: hardware concurrency, capped by CONVEXLAB_THREADS
};

// Config keys mirror the field names ("dims", "resolutions" as {"2": 512},
// "seed", "families", …). Unknown keys raise parse.
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteConfig& c);

struct ReportRow {
  std::string suite;
  InequalityRecord record;
  std::uint64_t seed = 0;
  int resolution = 0;
};

struct Report {
  std::vector<ReportRow> rows;
  nlohmann::json metadata = nlohmann::json::object();
  nlohmann::json exploratory = nlohmann::json::object();

  std::size_t passed() const;
  std::size_t failed() const;
  bool pass() const { return failed() == 0; }
};

struct CorpusBody {
  ConvexBody body;
  std::uint64_t seed = 0;
};

std::vector<CorpusBody> default_corpus(int n, const SuiteConfig& config);

Report run_suite(const SuiteConfig& config);

enum class ReportFormat { csv, json };

std::string report_csv(const Report& report);
nlohmann::json report_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
// Raises io when the path cannot be written.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

// Named checks for the CLI. Pair checks read `body` as K and `body2` as L.
// Names: theorem11, john, evr-barthe, prop11, chain, gardner, gardner-volume,
// minkowski, holder, prop21, reverse-holder, cor22, cor23.
std::vector<std::string> check_names();
std::vector<InequalityRecord> run_check(const std::string& name, const ConvexBody& body,
                                        const std::optional<ConvexBody>& body2, const SphereQuadrature& q);

// Parses each spec and runs a volume-product and theorem11 check on it; every
// failure becomes an error row, never an exception.
Report run_spec_checks(const std::vector<std::string>& specs);

// Malformed or degenerate body specs for totality testing.
std::vector<std::string> fuzz_body_specs(int count, std::uint64_t seed);

// Operations the default suite is expected to touch.
std::vector<std::string> expected_coverage();

int worker_count(int requested);

}  // namespace convexlab
