#include "convexlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "convexlab/body_json.hpp"
#include "convexlab/coverage.hpp"
#include "convexlab/ellipsoids.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/functionals.hpp"
#include "convexlab/measures.hpp"
#include "convexlab/positions.hpp"

namespace convexlab {
namespace {

constexpr const char* kVersion = "1.0.0";

using Records = std::vector<InequalityRecord>;

struct TaskOutput {
  std::vector<ReportRow> rows;
  nlohmann::json exploratory;
};

struct Context {
  int dim;
  const SphereQuadrature* q;
};

void drop_non_finite(InequalityRecord& r) {
  for (auto it = r.extras.begin(); it != r.extras.end();) {
    it = std::isfinite(it->second) ? std::next(it) : r.extras.erase(it);
  }
}

// Runs `check`; a raised error becomes a single failed row named `name`.
void guarded(TaskOutput& out, const std::string& suite, const std::string& name, const std::string& body,
             const std::string& body2, const Context& ctx, std::uint64_t seed, const std::function<Records()>& check) {
  Records recs;
  try {
    recs = check();
  } catch (const Error& e) {
    recs = {error_record(name, std::string(e.name()), e.what(), body, body2, ctx.dim)};
  } catch (const std::exception& e) {
    recs = {error_record(name, "internal", e.what(), body, body2, ctx.dim)};
  }
  for (auto& r : recs) {
    drop_non_finite(r);
    out.rows.push_back({suite, std::move(r), seed, ctx.q->resolution});
  }
}

bool is_smooth(const ConvexBody& b) { return b.polytope() == nullptr; }

bool selected(const SuiteConfig& c, const std::string& family) {
  return std::find(c.families.begin(), c.families.end(), family) != c.families.end();
}

std::string number_label(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// ---------------------------------------------------------------- body checks

TaskOutput body_task(const CorpusBody& cb, const Context& ctx) {
  TaskOutput out;
  const ConvexBody& K = cb.body;
  const auto& q = *ctx.q;
  const int n = ctx.dim;
  const std::string name = K.name();

  guarded(out, "theorem11", "theorem11", name, "", ctx, cb.seed, [&] { return Records{theorem11_check(K, q)}; });
  guarded(out, "john", "john", name, "", ctx, cb.seed, [&] {
    auto [a, b] = john_containment_check(K, q);
    return Records{a, b};
  });
  guarded(out, "evr", "evr-barthe", name, "", ctx, cb.seed, [&] {
    const EvrResult e = exterior_volume_ratio(K, q);
    const BartheConstants c = barthe_constants(n);
    Records recs;
    auto gen = make_record("evr-simplex", e.evr, std::pow(c.general_evr_power, 1.0 / n), 1e-3, name, "simplex",
                           q.descriptor(), n);
    gen.extras["mvee_residual"] = e.residual;
    recs.push_back(gen);
    if (e.symmetric) {
      recs.push_back(make_record("evr-cross", e.evr, std::pow(c.symmetric_evr_power, 1.0 / n), 1e-3, name, "cross",
                                 q.descriptor(), n));
    }
    return recs;
  });
  guarded(out, "cor23", "cor23-identity", name, "", ctx, cb.seed, [&] {
    const double vp = volume_product(K, q);
    const double M = M_functional(K, Mat::Identity(n, n), q);
    auto r = make_record("cor23-identity", vp, unit_ball_volume(n) * M, quadrature_tolerance(vp), name, "",
                         q.descriptor(), n);
    r.extras["M_identity"] = M;
    r.extras["mean_width"] = mean_width_w(K, q);
    r.extras["second_moment"] = second_moment(K, q);
    r.extras["cone_volume_total"] = cone_volume_measure(K, q).total();
    return Records{r};
  });
  if (is_smooth(K)) {
    guarded(out, "cor22", "cor22", name, "", ctx, cb.seed, [&] {
      auto [a, b] = corollary22_bound(K, q);
      a.extras["affine_surface_area_direct"] = affine_surface_area(K, q);
      return Records{a, b};
    });
  }
  return out;
}

// ---------------------------------------------------------------- pair checks

struct PairSpec {
  ConvexBody K;
  ConvexBody L;
  bool homothetic = false;
  std::uint64_t seed = 0;
};

TaskOutput pair_task(const PairSpec& p, const Context& ctx, const SuiteConfig& config) {
  TaskOutput out;
  const auto& q = *ctx.q;
  const ConvexBody& K = p.K;
  const ConvexBody& L = p.L;
  const std::string k = K.name();
  const std::string l = L.name();
  const int n = ctx.dim;

  guarded(out, "prop11", "prop11", k, l, ctx, p.seed, [&] {
    const Prop11Result r = check_prop11(K, L, q);
    Records recs{r.first, r.second};
    if (p.homothetic) {
      const double spread = std::max({std::abs(r.chain.upper - r.chain.lower),
                                      std::abs(r.chain.middle - r.chain.lower),
                                      std::abs(r.second.rhs - r.chain.lower)});
      const double tol = r.chain.quadrature == "atoms" ? kExactTolerance : 1e-3;
      recs.push_back(make_record("chain-equality", 0.0, spread, tol, k, l, r.chain.quadrature, n));
    }
    return recs;
  });
  guarded(out, "chain", "chain", k, l, ctx, p.seed, [&] {
    const ChainRecord c = entropy_chain(K, L, q);
    Records recs = c.records();
    recs[0].extras["log_minkowski_L"] = log_minkowski_L(K, L, q);
    recs[1].extras["log_minkowski_1"] = log_minkowski_1(K, L, q);
    return recs;
  });
  guarded(out, "gardner", "gardner-mixed", k, l, ctx, p.seed,
          [&] { return Records{gardner_functional(K, L, GardnerVariant::mixed_volume, q)}; });
  guarded(out, "gardner", "gardner-volume", k, l, ctx, p.seed, [&] {
    if (!support_contained(L, K, q)) return Records{};
    return Records{gardner_functional(K, L, GardnerVariant::volume_ratio, q)};
  });
  guarded(out, "minkowski", "minkowski-first", k, l, ctx, p.seed, [&] {
    auto r = minkowski_first_check(L, K, q);
    r.extras["V1"] = mixed_volume_V1(L, K, q);
    r.extras["V1_measure_total"] = mixed_volume_measure(L, K, q).total();
    return Records{r};
  });
  if (config.holder_p.size() >= 2) {
    guarded(out, "holder", "holder-limit", k, l, ctx, p.seed, [&] {
      const HolderLimit a = holder_limit(K, L, config.holder_p.front(), q);
      const HolderLimit b = holder_limit(K, L, config.holder_p.back(), q);
      auto r = make_record("holder-limit", a.error(), b.error(), 1e-12 * std::max(1.0, a.target), k, l,
                           q.descriptor(), n);
      r.extras["target"] = a.target;
      r.extras["approx_low_p"] = a.approx;
      r.extras["approx_high_p"] = b.approx;
      if (b.error() > 0.0) r.extras["error_ratio"] = a.error() / b.error();
      return Records{r};
    });
  }
  if (is_smooth(L)) {
    guarded(out, "prop21", "prop21", k, l, ctx, p.seed, [&] { return Records{prop21_bound(K, L, q)}; });
    guarded(out, "reverse-holder", "reverse-holder", k, l, ctx, p.seed,
            [&] { return Records{reverse_holder_check(K, L, q)}; });
  }
  return out;
}

// ---------------------------------------------------------------- positions

TaskOutput position_task(const ConvexBody& K, const Context& ctx, const SuiteConfig& config) {
  TaskOutput out;
  const auto& q = *ctx.q;
  const int n = ctx.dim;
  const std::string name = K.name();
  guarded(out, "position", "optimize-M", name, "", ctx, config.seed, [&] {
    PositionConfig pc;
    pc.restarts = config.position_restarts;
    pc.seed = config.seed;
    const PositionResult r = optimize_M(K, pc, q);
    const double tol = quadrature_tolerance(r.volume_product);
    auto bound = make_record("cor23", r.volume_product, r.omega_M, tol, name, "", q.descriptor(), n);
    auto ascent = make_record("M-ascent", r.M_star, r.M_identity, 1e-12 * r.M_identity, name, "", q.descriptor(), n);
    double worst_step = 0.0;
    for (std::size_t i = 1; i < r.trace.size(); ++i) worst_step = std::min(worst_step, r.trace[i] - r.trace[i - 1]);
    auto trace = make_record("M-trace-monotone", worst_step, 0.0, 0.0, name, "", q.descriptor(), n);
    if (r.low_confidence) {
      for (auto* rec : {&bound, &ascent, &trace}) rec->flags.push_back("low-confidence");
    }
    bound.extras["M_star"] = r.M_star;
    out.exploratory["positions"][name + "/" + std::to_string(n)] = to_json(r);
    const IsotropicReport iso = isotropic_probe(K, r.T_star, q);
    out.exploratory["isotropic"][name + "/" + std::to_string(n)] = to_json(iso);
    return Records{bound, ascent, trace};
  });
  return out;
}

TaskOutput degeneracy_task(const Context& ctx, const SuiteConfig& config) {
  TaskOutput out;
  const int n = ctx.dim;
  guarded(out, "degeneracy", "degeneracy", "ellipsoid(a,1/a)", "", ctx, config.seed, [&] {
    const auto rows = degeneracy_experiment(n, config.degeneracy_aspects, config.seed);
    Records recs;
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      table.push_back({{"aspect", rows[i].aspect}, {"M", rows[i].M}});
      if (i == 0) continue;
      const std::string label = "ellipsoid(" + number_label(rows[i - 1].aspect) + ")";
      recs.push_back(make_record("degeneracy-decreasing", rows[i - 1].M, rows[i].M, 0.0, label,
                                 "ellipsoid(" + number_label(rows[i].aspect) + ")", ctx.q->descriptor(), n));
    }
    const auto at64 = std::find_if(rows.begin(), rows.end(), [](const DegeneracyRow& r) { return r.aspect == 64.0; });
    if (!rows.empty() && rows.front().aspect == 1.0 && at64 != rows.end()) {
      recs.push_back(make_record("degeneracy-limit", 0.05 * rows.front().M, at64->M, 0.0, "ellipsoid(64)", "",
                                 ctx.q->descriptor(), n));
    }
    out.exploratory["degeneracy"][std::to_string(n)] = table;
    return recs;
  });
  return out;
}

// ---------------------------------------------------------------- execution

void run_parallel(std::vector<std::function<TaskOutput()>>& tasks, std::vector<TaskOutput>& results, int threads) {
  results.assign(tasks.size(), TaskOutput{});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = tasks[i]();
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (count == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void apply_overrides(Report& report, const SuiteConfig& config) {
  for (auto& row : report.rows) {
    auto& r = row.record;
    auto it = config.tolerance_overrides.find(r.name);
    if (it == config.tolerance_overrides.end() || !r.error.empty()) continue;
    r.tolerance = it->second;
    r.pass = r.gap >= -r.tolerance;
    r.flags.erase(std::remove(r.flags.begin(), r.flags.end(), "equality-boundary"), r.flags.end());
    if (std::abs(r.gap) <= r.tolerance) r.flags.push_back("equality-boundary");
  }
}

}  // namespace

// ---------------------------------------------------------------- config

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "config must be a JSON object");
  SuiteConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "dims") c.dims = value.get<std::vector<int>>();
      else if (key == "resolutions") {
        c.resolutions.clear();
        for (const auto& [dim, res] : value.items()) c.resolutions[std::stoi(dim)] = res.get<int>();
      } else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "families") c.families = value.get<std::vector<std::string>>();
      else if (key == "pball_exponents") c.pball_exponents = value.get<std::vector<double>>();
      else if (key == "ellipsoid_aspects") c.ellipsoid_aspects = value.get<std::vector<double>>();
      else if (key == "random_symmetric") c.random_symmetric = value.get<int>();
      else if (key == "random_general") c.random_general = value.get<int>();
      else if (key == "pairs") c.pairs = value.get<int>();
      else if (key == "homothetic_every") c.homothetic_every = value.get<int>();
      else if (key == "holder_p") c.holder_p = value.get<std::vector<double>>();
      else if (key == "position_dims") c.position_dims = value.get<std::vector<int>>();
      else if (key == "position_restarts") c.position_restarts = value.get<int>();
      else if (key == "degeneracy_aspects") c.degeneracy_aspects = value.get<std::vector<double>>();
      else if (key == "tolerance_overrides") c.tolerance_overrides = value.get<std::map<std::string, double>>();
      else if (key == "csv") c.csv_path = value.get<std::string>();
      else if (key == "json") c.json_path = value.get<std::string>();
      else if (key == "threads") c.threads = value.get<int>();
      else fail(ErrorKind::parse, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("bad config value: ") + e.what());
  } catch (const std::logic_error& e) {
    fail(ErrorKind::parse, std::string("bad config value: ") + e.what());
  }
  for (int n : c.dims) {
    if (n < 2 || n > 6) fail(ErrorKind::invalid_argument, "suite dimensions must lie in [2, 6]");
  }
  for (int n : c.position_dims) {
    if (n < 2 || n > 4) fail(ErrorKind::invalid_argument, "position dimensions must lie in [2, 4]");
  }
  for (const auto& [n, res] : c.resolutions) {
    if (res < 4) fail(ErrorKind::invalid_argument, "resolution must be >= 4");
  }
  if (c.pairs < 0 || c.random_symmetric < 0 || c.random_general < 0) {
    fail(ErrorKind::invalid_argument, "counts must be non-negative");
  }
  return c;
}

nlohmann::json to_json(const SuiteConfig& c) {
  nlohmann::json res = nlohmann::json::object();
  for (const auto& [n, r] : c.resolutions) res[std::to_string(n)] = r;
  return {{"dims", c.dims},
          {"resolutions", res},
          {"seed", c.seed},
          {"families", c.families},
          {"pball_exponents", c.pball_exponents},
          {"ellipsoid_aspects", c.ellipsoid_aspects},
          {"random_symmetric", c.random_symmetric},
          {"random_general", c.random_general},
          {"pairs", c.pairs},
          {"homothetic_every", c.homothetic_every},
          {"holder_p", c.holder_p},
          {"position_dims", c.position_dims},
          {"position_restarts", c.position_restarts},
          {"degeneracy_aspects", c.degeneracy_aspects},
          {"tolerance_overrides", c.tolerance_overrides}};
}

// ---------------------------------------------------------------- corpus

std::vector<CorpusBody> default_corpus(int n, const SuiteConfig& config) {
  std::vector<CorpusBody> out;
  const std::uint64_t base = config.seed;
  if (selected(config, "cube")) out.push_back({cube(n), base});
  if (selected(config, "cross")) out.push_back({cross_polytope(n), base});
  if (selected(config, "simplex")) out.push_back({regular_simplex(n), base});
  if (selected(config, "ball")) out.push_back({ball(n), base});
  if (selected(config, "pball")) {
    for (double p : config.pball_exponents) out.push_back({p_ball_smooth(n, p), base});
  }
  if (selected(config, "ellipsoid")) {
    for (double a : config.ellipsoid_aspects) {
      std::vector<double> axes(static_cast<std::size_t>(n), 1.0);
      axes[0] = a;
      axes[1] = 1.0 / a;
      out.push_back({ellipsoid(axes), base});
    }
  }
  if (selected(config, "rsym")) {
    for (int i = 0; i < config.random_symmetric; ++i) {
      const std::uint64_t s = base + 1000u * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i);
      out.push_back({random_symmetric_polytope(n, 2 * n + 2, s).renamed("rsym-" + std::to_string(s)), s});
    }
  }
  if (selected(config, "rpoly")) {
    for (int i = 0; i < config.random_general; ++i) {
      const std::uint64_t s = base + 1000u * static_cast<std::uint64_t>(n) + 500u + static_cast<std::uint64_t>(i);
      out.push_back({random_polytope(n, 3 * n + 3, s).renamed("rpoly-" + std::to_string(s)), s});
    }
  }
  return out;
}

int worker_count(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("CONVEXLAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<int>(n, static_cast<int>(cap));
  }
  return n;
}

Report run_suite(const SuiteConfig& config) {
  Report report;
  std::vector<std::shared_ptr<const SphereQuadrature>> owned;
  std::vector<std::function<TaskOutput()>> tasks;
  nlohmann::json quadratures = nlohmann::json::object();
  nlohmann::json corpus_sizes = nlohmann::json::object();

  for (int n : config.dims) {
    const SphereQuadrature* q = nullptr;
    if (auto it = config.resolutions.find(n); it != config.resolutions.end()) {
      owned.push_back(std::make_shared<const SphereQuadrature>(build_quadrature(n, it->second, config.seed)));
      q = owned.back().get();
    } else {
      q = &default_quadrature(n);
    }
    const Context ctx{n, q};
    quadratures[std::to_string(n)] = q->descriptor();

    auto corpus = std::make_shared<std::vector<CorpusBody>>(default_corpus(n, config));
    corpus_sizes[std::to_string(n)] = corpus->size();
    for (std::size_t i = 0; i < corpus->size(); ++i) {
      tasks.push_back([corpus, i, ctx] { return body_task((*corpus)[i], ctx); });
    }

    if (!corpus->empty()) {
      std::mt19937_64 rng(config.seed + 7919u * static_cast<std::uint64_t>(n));
      std::uniform_int_distribution<std::size_t> pick(0, corpus->size() - 1);
      std::uniform_real_distribution<double> stretch(0.5, 3.0);
      for (int i = 0; i < config.pairs; ++i) {
        const std::uint64_t seed = config.seed + 100000u * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i);
        const bool homothetic = config.homothetic_every > 0 && i % config.homothetic_every == 0;
        const std::size_t li = pick(rng);
        const std::size_t ki = pick(rng);
        const double lambda = stretch(rng);
        auto spec = std::make_shared<PairSpec>(PairSpec{(*corpus)[ki].body, (*corpus)[li].body, homothetic, seed});
        if (homothetic) {
          spec->K = scaled(spec->L, lambda).renamed(number_label(lambda) + "*" + spec->L.name());
        }
        tasks.push_back([spec, ctx, &config] { return pair_task(*spec, ctx, config); });
      }
    }

    const bool positions = std::find(config.position_dims.begin(), config.position_dims.end(), n) !=
                           config.position_dims.end();
    if (positions) {
      std::vector<double> axes(static_cast<std::size_t>(n), 1.0);
      axes[0] = 4.0;
      axes[1] = 0.25;
      for (const auto& K : {cube(n), regular_simplex(n), ball(n), ellipsoid(axes), p_ball_smooth(n, 4.0)}) {
        tasks.push_back([K, ctx, &config] { return position_task(K, ctx, config); });
      }
    }
    if (n == 2 && !config.degeneracy_aspects.empty()) {
      tasks.push_back([ctx, &config] { return degeneracy_task(ctx, config); });
    }
  }

  std::vector<TaskOutput> results;
  run_parallel(tasks, results, worker_count(config.threads));
  for (auto& r : results) {
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
    report.exploratory.merge_patch(r.exploratory);
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.record.body != b.record.body) return a.record.body < b.record.body;
    return a.seed < b.seed;
  });
  apply_overrides(report, config);

  report.metadata = {{"version", kVersion},
                     {"config", to_json(config)},
                     {"quadratures", quadratures},
                     {"corpus_sizes", corpus_sizes}};
  return report;
}

// ---------------------------------------------------------------- reports

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.record.pass; }));
}

std::size_t Report::failed() const { return rows.size() - passed(); }

std::string report_csv(const Report& report) {
  std::ostringstream os;
  os << "suite,inequality,dim,body,body2,lhs,rhs,gap,tol,pass,seed,resolution\n";
  for (const auto& row : report.rows) {
    const auto& r = row.record;
    os << csv_field(row.suite) << ',' << csv_field(r.name) << ',' << r.dim << ',' << csv_field(r.body) << ','
       << csv_field(r.body2) << ',' << g17(r.lhs) << ',' << g17(r.rhs) << ',' << g17(r.gap) << ','
       << g17(r.tolerance) << ',' << (r.pass ? "true" : "false") << ',' << row.seed << ',' << row.resolution << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json j = to_json(row.record);
    j["suite"] = row.suite;
    j["seed"] = row.seed;
    j["resolution"] = row.resolution;
    rows.push_back(std::move(j));
  }
  return {{"metadata", report.metadata},
          {"summary", {{"rows", report.rows.size()}, {"passed", report.passed()}, {"failed", report.failed()},
                       {"pass", report.pass()}}},
          {"rows", rows},
          {"exploratory", report.exploratory}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.metadata = j.at("metadata");
    r.exploratory = j.at("exploratory");
    for (const auto& row : j.at("rows")) {
      r.rows.push_back({row.at("suite").get<std::string>(), record_from_json(row), row.at("seed").get<std::uint64_t>(),
                        row.at("resolution").get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("bad report: ") + e.what());
  }
  return r;
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
  if (format == ReportFormat::csv) {
    out << report_csv(report);
  } else {
    out << report_json(report).dump(2) << '\n';
  }
  if (!out) fail(ErrorKind::io, "write to '" + path + "' failed");
}

// ---------------------------------------------------------------- named checks

std::vector<std::string> check_names() {
  return {"theorem11", "john",  "evr-barthe", "prop11",         "chain", "gardner", "gardner-volume",
          "minkowski", "holder", "prop21",    "reverse-holder", "cor22", "cor23"};
}

std::vector<InequalityRecord> run_check(const std::string& name, const ConvexBody& body,
                                        const std::optional<ConvexBody>& body2, const SphereQuadrature& q) {
  const int n = body.dim();
  auto need_pair = [&]() -> const ConvexBody& {
    if (!body2) fail(ErrorKind::invalid_argument, "check '" + name + "' needs --body2");
    if (body2->dim() != n) fail(ErrorKind::invalid_argument, "bodies have different dimensions");
    return *body2;
  };
  if (name == "theorem11") return {theorem11_check(body, q)};
  if (name == "john") {
    auto [a, b] = john_containment_check(body, q);
    return {a, b};
  }
  if (name == "evr-barthe") {
    const EvrResult e = exterior_volume_ratio(body, q);
    const BartheConstants c = barthe_constants(n);
    std::vector<InequalityRecord> out{make_record("evr-simplex", e.evr, std::pow(c.general_evr_power, 1.0 / n), 1e-3,
                                                  body.name(), "simplex", q.descriptor(), n)};
    if (e.symmetric) {
      out.push_back(make_record("evr-cross", e.evr, std::pow(c.symmetric_evr_power, 1.0 / n), 1e-3, body.name(),
                                "cross", q.descriptor(), n));
    }
    return out;
  }
  if (name == "prop11") {
    const Prop11Result r = check_prop11(body, need_pair(), q);
    return {r.first, r.second};
  }
  if (name == "chain") return entropy_chain(body, need_pair(), q).records();
  if (name == "gardner") return {gardner_functional(body, need_pair(), GardnerVariant::mixed_volume, q)};
  if (name == "gardner-volume") return {gardner_functional(body, need_pair(), GardnerVariant::volume_ratio, q)};
  if (name == "minkowski") return {minkowski_first_check(need_pair(), body, q)};
  if (name == "holder") {
    const ConvexBody& L = need_pair();
    const HolderLimit a = holder_limit(body, L, 1e3, q);
    const HolderLimit b = holder_limit(body, L, 1e4, q);
    auto r = make_record("holder-limit", a.error(), b.error(), 1e-12 * std::max(1.0, a.target), body.name(), L.name(),
                         q.descriptor(), n);
    r.extras["target"] = a.target;
    return {r};
  }
  if (name == "prop21") return {prop21_bound(body, need_pair(), q)};
  if (name == "reverse-holder") return {reverse_holder_check(body, need_pair(), q)};
  if (name == "cor22") {
    auto [a, b] = corollary22_bound(body, q);
    return {a, b};
  }
  if (name == "cor23") {
    const double vp = volume_product(body, q);
    const double M = M_functional(body, Mat::Identity(n, n), q);
    return {make_record("cor23-identity", vp, unit_ball_volume(n) * M, quadrature_tolerance(vp), body.name(), "",
                        q.descriptor(), n)};
  }
  fail(ErrorKind::invalid_argument, "unknown inequality '" + name + "'");
}

// ---------------------------------------------------------------- totality

Report run_spec_checks(const std::vector<std::string>& specs) {
  Report report;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string label = "spec-" + std::to_string(i);
    const auto push = [&](InequalityRecord r) {
      drop_non_finite(r);
      report.rows.push_back({"spec", std::move(r), static_cast<std::uint64_t>(i), 0});
    };
    std::optional<ConvexBody> body;
    try {
      body = parse_body_spec(specs[i]);
    } catch (const Error& e) {
      push(error_record("parse-spec", std::string(e.name()), e.what(), label, "", 0));
      continue;
    } catch (const std::exception& e) {
      push(error_record("parse-spec", "internal", e.what(), label, "", 0));
      continue;
    }
    const int n = body->dim();
    for (const std::string name : {"volume-product", "theorem11"}) {
      try {
        const auto& q = default_quadrature(n);
        if (name == "volume-product") {
          const double vp = volume_product(*body, q);
          push(make_record(name, vp, 0.0, 0.0, label, "", q.descriptor(), n));
        } else {
          push(theorem11_check(*body, q));
        }
      } catch (const Error& e) {
        push(error_record(name, std::string(e.name()), e.what(), label, "", n));
      } catch (const std::exception& e) {
        push(error_record(name, "internal", e.what(), label, "", n));
      }
    }
  }
  return report;
}

std::vector<std::string> fuzz_body_specs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto num = [&] { return number_label(uni(rng)); };
  auto point = [&](int n, double shift) {
    std::string s = "[";
    for (int k = 0; k < n; ++k) s += (k ? "," : "") + number_label(uni(rng) + (k == 0 ? shift : 0.0));
    return s + "]";
  };
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::string s;
    switch (i % 25) {
      case 0: s = "{\"type\": \"polytope-v\", \"vertices\": [[1, 0], [0, 1]"; break;  // truncated
      case 1: s = "not json at all " + num(); break;
      case 2: s = "[" + point(n, 0.0) + "]"; break;
      case 3: s = "{\"dim\": " + std::to_string(n) + "}"; break;
      case 4: s = "{\"type\": \"tetrahedron\", \"dim\": 3}"; break;
      case 5: s = "{\"type\": \"polytope-v\", \"vertices\": []}"; break;
      case 6: {  // collinear points
        const double a = 0.5 + std::abs(uni(rng));
        s = "{\"type\": \"polytope-v\", \"vertices\": [[-" + number_label(a) + ",0],[0,0],[" + number_label(a) +
            ",0],[" + number_label(2 * a) + ",0]]}";
        break;
      }
      case 7: {  // origin outside
        s = "{\"type\": \"polytope-v\", \"vertices\": [";
        for (int k = 0; k < n + 3; ++k) s += (k ? "," : "") + point(n, 5.0);
        s += "]}";
        break;
      }
      case 8: s = "{\"type\": \"polytope-v\", \"vertices\": [[1,0],[0,1],[\"x\",0]]}"; break;
      case 9: s = "{\"type\": \"polytope-v\", \"vertices\": [[1,0,0],[0,1],[-1,-1]]}"; break;
      case 10: s = "{\"type\": \"polytope-v\", \"dim\": 3, \"vertices\": [[1,0],[0,1],[-1,-1]]}"; break;
      case 11: s = "{\"type\": \"polytope-v\", \"vertices\": [[1,0],[1,0],[1,0]]}"; break;
      case 12: s = "{\"type\": \"ellipsoid\", \"shape\": [[1," + num() + "],[" + number_label(3 + uni(rng)) + ",1]]}"; break;
      case 13: s = "{\"type\": \"ellipsoid\", \"shape\": [[1,0],[0," + number_label(-1 - std::abs(uni(rng))) + "]]}"; break;
      case 14: s = "{\"type\": \"ellipsoid\", \"shape\": [[1,0],[0,1]], \"center\": [" + number_label(2 + std::abs(uni(rng))) + ",0]}"; break;
      case 15: s = "{\"type\": \"ellipsoid\", \"shape\": [[0,0],[0,0]]}"; break;
      case 16: s = "{\"type\": \"ellipsoid\", \"shape\": [[1,0,0],[0,1]]}"; break;
      case 17: s = "{\"type\": \"pball\", \"dim\": " + std::to_string(n) + ", \"p\": " + number_label(1.0 - std::abs(uni(rng))) + "}"; break;
      case 18: s = "{\"type\": \"pball\", \"dim\": " + std::to_string(n) + "}"; break;
      case 19: s = "{\"type\": \"pball\", \"dim\": 1, \"p\": 3}"; break;
      case 20: s = "{\"type\": \"named\", \"name\": \"dodecahedron\", \"dim\": 3}"; break;
      case 21: s = "{\"type\": \"named\", \"name\": \"cube\", \"dim\": " + std::to_string(11 + rng() % 50) + "}"; break;
      case 22: s = "{\"type\": \"named\", \"name\": \"ball\", \"dim\": 2, \"scale\": " + number_label(-std::abs(uni(rng))) + "}"; break;
      case 23: s = "{\"type\": \"pball\", \"dim\": 2, \"p\": 1e400}"; break;
      case 24: {  // coplanar in R^3
        s = "{\"type\": \"polytope-v\", \"vertices\": [";
        for (int k = 0; k < 6; ++k) s += std::string(k ? "," : "") + "[" + num() + "," + num() + ",0]";
        s += "]}";
        break;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> expected_coverage() {
  return {"surface_measure",    "cone_volume_measure",   "mixed_volume_measure", "mixed_volume_V1",
          "minkowski_first_check", "polar_volume",       "volume_product",       "log_minkowski_L",
          "log_minkowski_1",    "check_prop11",          "entropy_chain",        "gardner_functional",
          "holder_limit",       "affine_surface_area",   "reverse_holder_check", "prop21_bound",
          "corollary22_bound",  "mean_width_w",          "second_moment",        "M_functional",
          "mvee",               "exterior_volume_ratio", "john_containment_check", "theorem11_check",
          "barthe_constants",   "sl_exp",                "optimize_M",           "degeneracy_experiment",
          "isotropic_probe"};
}

}  // namespace convexlab
