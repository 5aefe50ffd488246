#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "convexlab/coverage.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/harness.hpp"

using namespace convexlab;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.dims = {2};
  c.pairs = 10;
  c.random_symmetric = 3;
  c.random_general = 2;
  c.position_dims = {};
  c.degeneracy_aspects = {1, 2, 4};
  return c;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Config, ParsesAndRejectsUnknownKeys) {
  const auto c = suite_config_from_json(nlohmann::json::parse(
      R"({"dims":[2,3],"resolutions":{"2":512},"seed":5,"pairs":3,"tolerance_overrides":{"prop11-first":0.1}})"));
  EXPECT_EQ(c.dims, (std::vector<int>{2, 3}));
  EXPECT_EQ(c.resolutions.at(2), 512);
  EXPECT_EQ(c.seed, 5u);
  EXPECT_EQ(c.tolerance_overrides.at("prop11-first"), 0.1);
  try {
    suite_config_from_json(nlohmann::json::parse(R"({"dimz":[2]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
  EXPECT_THROW(suite_config_from_json(nlohmann::json::parse(R"({"dims":[7]})")), Error);
  EXPECT_THROW(suite_config_from_json(nlohmann::json::parse(R"({"position_dims":[5]})")), Error);
  EXPECT_THROW(suite_config_from_json(nlohmann::json::parse(R"({"pairs":"many"})")), Error);
  // Round trip through JSON.
  const auto d = suite_config_from_json(to_json(c));
  EXPECT_EQ(to_json(d), to_json(c));
}

TEST(Corpus, DefaultComposition) {
  const auto corpus = default_corpus(3, SuiteConfig{});
  EXPECT_EQ(corpus.size(), 4u + 3u + 2u + 50u + 20u);
  SuiteConfig c;
  c.families = {"cube", "ball"};
  EXPECT_EQ(default_corpus(2, c).size(), 2u);
}

TEST(Suite, SmallRunPassesAndCountsMatch) {
  const Report r = run_suite(small_config());
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.passed() + r.failed(), r.rows.size());
  const auto j = report_json(r);
  EXPECT_EQ(j["summary"]["rows"].get<std::size_t>(), r.rows.size());
  for (const auto& row : r.rows) {
    EXPECT_FALSE(row.record.body.empty());
    EXPECT_EQ(row.record.dim, 2);
    EXPECT_GT(row.resolution, 0);
  }
}

TEST(Suite, DefaultTwoDimensionalRunHasEnoughRows) {
  SuiteConfig c;
  c.dims = {2};
  const Report r = run_suite(c);
  EXPECT_TRUE(r.pass()) << r.failed() << " failed";
  EXPECT_GE(r.rows.size(), 300u);
}

TEST(Suite, EmptyCorpusGivesEmptyPassingReport) {
  SuiteConfig c;
  c.families = {};
  c.position_dims = {};
  c.degeneracy_aspects = {};
  const Report r = run_suite(c);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_TRUE(r.pass());
}

TEST(Suite, CoarseResolutionFailsWithoutCrashing) {
  SuiteConfig c = small_config();
  c.resolutions[2] = 8;
  Report r;
  ASSERT_NO_THROW(r = run_suite(c));
  EXPECT_FALSE(r.pass());
  EXPECT_GT(r.failed(), 0u);
}

TEST(Suite, ToleranceOverridesApply) {
  SuiteConfig c = small_config();
  c.tolerance_overrides["prop11-first"] = 0.5;
  for (const auto& row : run_suite(c).rows) {
    if (row.record.name == "prop11-first") EXPECT_EQ(row.record.tolerance, 0.5);
  }
}

TEST(Suite, ThreadCountDoesNotChangeReport) {
  SuiteConfig a = small_config();
  a.threads = 1;
  SuiteConfig b = small_config();
  b.threads = 4;
  const Report ra = run_suite(a);
  const Report rb = run_suite(b);
  EXPECT_EQ(report_csv(ra), report_csv(rb));
  EXPECT_EQ(report_json(ra).dump(), report_json(rb).dump());
}

TEST(Suite, DefaultSuiteCoversEveryOperation) {
  coverage::reset();
  SuiteConfig c;
  c.dims = {2};
  run_suite(c);
  const auto seen = coverage::touched();
  for (const auto& op : expected_coverage()) EXPECT_TRUE(seen.count(op)) << op;
}

TEST(Report, CsvShapeAndQuoting) {
  Report r;
  for (int i = 0; i < 3; ++i) {
    r.rows.push_back({"s", make_record("x", 1.0 + i, 1.0, 1e-9, "ellipsoid(2,0.5)", "", "atoms", 2),
                      static_cast<std::uint64_t>(i), 64});
  }
  const std::string csv = report_csv(r);
  EXPECT_EQ(count_lines(csv), 4);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,inequality,dim,body,body2,lhs,rhs,gap,tol,pass,seed,resolution");
  EXPECT_NE(csv.find("\"ellipsoid(2,0.5)\""), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  const Report r = run_suite(small_config());
  const auto j = report_json(r);
  const Report back = report_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(report_json(back), j);
  EXPECT_EQ(report_csv(back), report_csv(r));
}

TEST(Report, EmitWritesAndRejectsBadPaths) {
  Report r;
  r.rows.push_back({"s", make_record("x", 1.0, 1.0, 0.0, "b", "", "atoms", 2), 0, 0});
  const std::string path = ::testing::TempDir() + "report.csv";
  emit_report(r, ReportFormat::csv, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), report_csv(r));
  try {
    emit_report(r, ReportFormat::json, "/nonexistent-dir/report.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
  }
}

TEST(Checks, NamedChecksRun) {
  const auto K = cube(2);
  const std::optional<ConvexBody> L = ball(2);
  for (const auto& name : check_names()) {
    const bool smooth_only = name == "cor22";
    const auto recs = run_check(name, smooth_only ? *L : K, L, default_quadrature(2));
    ASSERT_FALSE(recs.empty()) << name;
    for (const auto& r : recs) EXPECT_TRUE(r.pass) << name << " " << r.name;
  }
  EXPECT_THROW(run_check("prop11", K, std::nullopt, default_quadrature(2)), Error);
  EXPECT_THROW(run_check("nope", K, L, default_quadrature(2)), Error);
}

TEST(Totality, FuzzedSpecsBecomeTypedRows) {
  const auto specs = fuzz_body_specs(100, 3);
  const Report r = run_spec_checks(specs);
  ASSERT_EQ(r.rows.size(), specs.size());
  for (const auto& row : r.rows) {
    EXPECT_FALSE(row.record.pass);
    EXPECT_FALSE(row.record.error.empty());
    EXPECT_NE(row.record.error, "internal") << specs[row.seed];
  }
  const Report ok = run_spec_checks({R"({"type":"named","name":"cube","dim":2})"});
  ASSERT_EQ(ok.rows.size(), 2u);
  EXPECT_TRUE(ok.rows[1].record.pass);
}

TEST(Threads, EnvironmentCapsWorkers) {
  setenv("CONVEXLAB_THREADS", "2", 1);
  EXPECT_EQ(worker_count(8), 2);
  EXPECT_EQ(worker_count(1), 1);
  unsetenv("CONVEXLAB_THREADS");
  EXPECT_EQ(worker_count(5), 5);
}
