#include "convexlab/positions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "convexlab/coverage.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/functionals.hpp"

namespace convexlab {

Mat sl_exp(const Mat& A) {
  coverage::touch("sl_exp");
  if (A.rows() != A.cols() || A.rows() < 1) fail(ErrorKind::invalid_argument, "sl_exp needs a square matrix");
  if (!A.allFinite()) fail(ErrorKind::invalid_argument, "sl_exp needs a finite matrix");
  if (!(std::abs(A.trace()) <= 1e-12)) fail(ErrorKind::invalid_argument, "sl_exp needs a traceless matrix");
  const Eigen::Index n = A.rows();
  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Mat B = A / std::ldexp(1.0, squarings);
  Mat result = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * B / k;
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Mat traceless_from_coordinates(const Vec& x, int n) {
  if (x.size() != n * n - 1) fail(ErrorKind::invalid_argument, "expected n^2-1 coordinates");
  Mat A = Mat::Zero(n, n);
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) A(i, j) = x[k++];
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    A(i, i) += x[k];
    A(i + 1, i + 1) -= x[k];
    ++k;
  }
  return A;
}

namespace {

struct NelderMeadOutcome {
  Vec x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Minimizes f from x0 with the standard reflection / expansion / contraction /
// shrink moves. `on_iteration` receives the best value after every iteration.
template <class F, class G>
NelderMeadOutcome nelder_mead(const F& f, const Vec& x0, double step, int max_evals, const G& on_iteration) {
  const Eigen::Index d = x0.size();
  std::vector<Vec> pts;
  std::vector<double> vals;
  int evals = 0;
  auto eval = [&](const Vec& x) {
    ++evals;
    return f(x);
  };
  pts.push_back(x0);
  vals.push_back(eval(x0));
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec x = x0;
    x[i] += step;
    double v = eval(x);
    if (!std::isfinite(v)) {
      x[i] = x0[i] - step;
      v = eval(x);
    }
    pts.push_back(x);
    vals.push_back(v);
  }
  std::vector<std::size_t> order(pts.size());
  bool converged = false;
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<Vec> sp;
    std::vector<double> sv;
    for (std::size_t i : order) {
      sp.push_back(pts[i]);
      sv.push_back(vals[i]);
    }
    pts.swap(sp);
    vals.swap(sv);
    on_iteration(vals.front());

    double spread = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) spread = std::max(spread, (pts[i] - pts[0]).cwiseAbs().maxCoeff());
    if (std::abs(vals.back() - vals.front()) <= 1e-13 * (std::abs(vals.front()) + 1e-13) && spread <= 1e-8) {
      converged = true;
      break;
    }

    Vec centroid = Vec::Zero(d);
    for (Eigen::Index i = 0; i < d; ++i) centroid += pts[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(d);
    const Vec& worst = pts.back();
    const Vec xr = centroid + (centroid - worst);
    const double fr = eval(xr);
    if (fr < vals.front()) {
      const Vec xe = centroid + 2.0 * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts.back() = xe;
        vals.back() = fe;
      } else {
        pts.back() = xr;
        vals.back() = fr;
      }
      continue;
    }
    if (fr < vals[vals.size() - 2]) {
      pts.back() = xr;
      vals.back() = fr;
      continue;
    }
    const bool outside = fr < vals.back();
    const Vec xc = outside ? Vec(centroid + 0.5 * (xr - centroid)) : Vec(centroid + 0.5 * (worst - centroid));
    const double fc = eval(xc);
    if (fc < std::min(fr, vals.back())) {
      pts.back() = xc;
      vals.back() = fc;
      continue;
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], evals, converged};
}

Mat moment_matrix(const ConvexBody& K, const Mat& T, const SphereQuadrature& q) {
  const int n = K.dim();
  const double omega = unit_ball_volume(n);
  const double mass = q.total_weight() / sphere_area(n);
  std::optional<Mat> B;
  if (const auto* e = K.ellipsoid(); e && e->is_centered()) B = T * e->shape_inverse() * T.transpose();
  if (const auto* s = K.smooth(); s && s->family == SmoothFamily::ball) {
    const double r = s->support(Vec::Unit(n, 0));
    B = r * r * T * T.transpose();
  }
  if (B) {
    // ∫u uᵀ (uᵀBu) dμ = ωₙ/(n+2)·(tr B·I + 2B)
    return mass * omega / (n + 2.0) * (B->trace() * Mat::Identity(n, n) + 2.0 * *B);
  }
  const Vec h = support_values(K, T.transpose() * q.nodes);
  Mat M = Mat::Zero(n, n);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vec u = q.node(i);
    const double c = q.weights[i] * h[static_cast<Eigen::Index>(i)] * h[static_cast<Eigen::Index>(i)];
    M.noalias() += c * u * u.transpose();
  }
  return 0.5 * (M + M.transpose());
}

}  // namespace

PositionResult optimize_M(const ConvexBody& K, const PositionConfig& config, const SphereQuadrature& q) {
  coverage::touch("optimize_M");
  const int n = K.dim();
  if (config.restarts < 1) fail(ErrorKind::invalid_argument, "restarts must be >= 1");
  if (!(config.box > 0.0)) fail(ErrorKind::invalid_argument, "box must be positive");
  const MomentEvaluator moments(K, q);
  const int d = n * n - 1;
  const double inf = std::numeric_limits<double>::infinity();

  auto objective = [&](const Vec& x) {
    const Mat A = traceless_from_coordinates(x, n);
    if (A.norm() > config.box) return inf;
    const auto [w, h2] = moments.moments(sl_exp(A));
    return -n * (std::log(w) - std::log(h2));
  };

  PositionResult r;
  r.body = K.name();
  r.dim = n;
  const double vol = volume(K, q);
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 0.3);

  Vec incumbent = Vec::Zero(d);
  double best = objective(incumbent);
  ++r.evaluations;
  r.M_identity = vol * std::exp(-best);
  bool any_converged = false;
  for (int restart = 0; restart < config.restarts; ++restart) {
    Vec start = incumbent;
    if (restart > 0) {
      for (int i = 0; i < d; ++i) start[i] += gauss(rng);
      const double norm = traceless_from_coordinates(start, n).norm();
      if (norm > config.box) start *= 0.999 * config.box / norm;
    }
    const auto outcome = nelder_mead(objective, start, 0.25, config.evaluations_per_coordinate * d,
                                     [&](double v) { r.trace.push_back(vol * std::exp(-std::min(v, best))); });
    r.evaluations += outcome.evaluations;
    any_converged = any_converged || outcome.converged;
    r.best_per_restart.push_back(vol * std::exp(-outcome.f));
    if (outcome.f < best) {
      best = outcome.f;
      incumbent = outcome.x;
    }
  }
  for (std::size_t i = 1; i < r.trace.size(); ++i) r.trace[i] = std::max(r.trace[i], r.trace[i - 1]);
  r.T_star = sl_exp(traceless_from_coordinates(incumbent, n));
  r.M_star = M_functional(K, r.T_star, q);
  r.omega_M = unit_ball_volume(n) * r.M_star;
  r.volume_product = volume_product(K, q);
  r.low_confidence = !any_converged;
  return r;
}

PositionResult optimize_M(const ConvexBody& K, const PositionConfig& config) {
  return optimize_M(K, config, default_quadrature(K.dim()));
}

std::vector<DegeneracyRow> degeneracy_experiment(int n, const std::vector<double>& aspects, std::uint64_t seed) {
  coverage::touch("degeneracy_experiment");
  if (n < 2) fail(ErrorKind::invalid_argument, "dimension must be >= 2");
  for (std::size_t i = 0; i < aspects.size(); ++i) {
    if (!(aspects[i] >= 1.0) || !std::isfinite(aspects[i])) fail(ErrorKind::invalid_argument, "aspects must be >= 1");
    if (i > 0 && !(aspects[i] > aspects[i - 1])) fail(ErrorKind::invalid_argument, "aspects must increase");
  }
  std::optional<SphereQuadrature> own;
  if (n >= 4 && seed != kDefaultSeed) own = build_quadrature(n, default_resolution(n), seed);
  const SphereQuadrature& q = own ? *own : default_quadrature(n);
  std::vector<DegeneracyRow> rows;
  for (double a : aspects) {
    std::vector<double> axes(static_cast<std::size_t>(n), 1.0);
    axes[0] = a;
    axes[1] = 1.0 / a;
    rows.push_back({a, M_functional(ellipsoid(axes), Mat::Identity(n, n), q)});
  }
  return rows;
}

IsotropicReport isotropic_probe(const ConvexBody& K, const Mat& T, const SphereQuadrature& q) {
  coverage::touch("isotropic_probe");
  const int n = K.dim();
  if (T.rows() != n || T.cols() != n) fail(ErrorKind::invalid_argument, "T must be n x n");
  IsotropicReport r;
  r.body = K.name();
  r.T = T;
  r.moment = moment_matrix(K, T, q);
  const Mat scalar = (r.moment.trace() / n) * Mat::Identity(n, n);
  r.deviation = (r.moment - scalar).norm();
  r.relative_deviation = r.deviation / scalar.norm();
  return r;
}

IsotropicReport isotropic_probe(const ConvexBody& K, const PositionConfig& config) {
  const PositionResult p = optimize_M(K, config);
  return isotropic_probe(K, p.T_star, default_quadrature(K.dim()));
}

nlohmann::json matrix_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index k = 0; k < m.cols(); ++k) row[static_cast<std::size_t>(k)] = m(i, k);
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const PositionResult& r) {
  return {{"body", r.body},
          {"dim", r.dim},
          {"M_star", r.M_star},
          {"T_star", matrix_json(r.T_star)},
          {"omega_M", r.omega_M},
          {"volume_product", r.volume_product},
          {"M_identity", r.M_identity},
          {"evaluations", r.evaluations},
          {"best_per_restart", r.best_per_restart},
          {"low_confidence", r.low_confidence}};
}

nlohmann::json to_json(const IsotropicReport& r) {
  return {{"body", r.body},
          {"reading", r.reading},
          {"T", matrix_json(r.T)},
          {"moment", matrix_json(r.moment)},
          {"deviation", r.deviation},
          {"relative_deviation", r.relative_deviation}};
}

}  // namespace convexlab
