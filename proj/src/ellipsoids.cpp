#include "convexlab/ellipsoids.hpp"

#include <cmath>
#include <numbers>

#include "convexlab/coverage.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/functionals.hpp"

namespace convexlab {
namespace {

constexpr int kMaxSmoothSamples = 20000;

Mat inverse_spd(const Mat& X) {
  Eigen::LDLT<Mat> ldlt(X);
  return ldlt.solve(Mat::Identity(X.rows(), X.cols()));
}

Mat sqrt_spd(const Mat& A) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(A);
  return eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
}

Mat symmetrize(const Mat& A) { return 0.5 * (A + A.transpose()); }

Mat columns(const std::vector<Vec>& pts) {
  if (pts.empty()) fail(ErrorKind::invalid_argument, "no points");
  Mat m(pts.front().size(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != m.rows()) fail(ErrorKind::invalid_argument, "points have inconsistent dimensions");
    m.col(static_cast<Eigen::Index>(i)) = pts[i];
  }
  return m;
}

}  // namespace

MveeResult mvee(const Mat& points, double eps, bool symmetric, int max_iterations) {
  coverage::touch("mvee");
  const int n = static_cast<int>(points.rows());
  const Eigen::Index m = points.cols();
  if (n < 1 || m < 1) fail(ErrorKind::invalid_argument, "no points");
  if (!points.allFinite()) fail(ErrorKind::invalid_argument, "points must be finite");
  if (!(eps > 0.0)) fail(ErrorKind::invalid_argument, "eps must be positive");

  // Rank test: linear span for the symmetric problem, affine span otherwise.
  {
    Mat centered = points;
    if (!symmetric) centered.colwise() -= points.rowwise().mean();
    Eigen::JacobiSVD<Mat> svd(centered);
    const auto& sv = svd.singularValues();
    if (sv.size() < n || !(sv[n - 1] > 1e-10 * std::max(sv[0], 1e-300))) {
      fail(ErrorKind::degeneracy, symmetric ? "points do not span R^n" : "points do not affinely span R^n");
    }
  }

  const int d = symmetric ? n : n + 1;
  Mat Q(d, m);
  Q.topRows(n) = points;
  if (!symmetric) Q.row(n).setOnes();

  Vec u = Vec::Constant(m, 1.0 / static_cast<double>(m));
  Mat Xinv;
  Vec kappa;
  auto refresh = [&]() {
    const Mat X = Q * u.asDiagonal() * Q.transpose();
    Xinv = symmetrize(inverse_spd(X));
    kappa = (Q.cwiseProduct(Xinv * Q)).colwise().sum().transpose();
  };
  refresh();

  int iter = 0;
  double residual = 0.0;
  for (;; ++iter) {
    Eigen::Index j = 0;
    kappa.maxCoeff(&j);
    Eigen::Index k = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u[i] > 0.0 && (k < 0 || kappa[i] < kappa[k])) k = i;
    }
    residual = std::max(kappa[j] / d - 1.0, 1.0 - kappa[k] / d);
    if (residual <= eps) break;
    if (iter >= max_iterations) {
      throw ConvergenceError("mvee iteration cap reached", residual);
    }

    Eigen::Index idx = j;
    double beta = 0.0;
    if (kappa[j] - d >= d - kappa[k]) {
      beta = (kappa[j] - d) / (d * (kappa[j] - 1.0));
    } else {
      idx = k;
      const double floor = -u[k] / (1.0 - u[k]);
      beta = kappa[k] > 1.0 ? std::max((kappa[k] - d) / (d * (kappa[k] - 1.0)), floor) : floor;
    }
    const double kap = kappa[idx];
    const Vec xq = Xinv * Q.col(idx);
    const Vec g = Q.transpose() * xq;
    const double a = 1.0 - beta;
    const double denom = a + beta * kap;
    u *= a;
    u[idx] += beta;
    if (idx == k && u[idx] < 1e-300) u[idx] = 0.0;
    Xinv = (Xinv - (beta / denom) * (xq * xq.transpose())) / a;
    kappa = (kappa - (beta / denom) * g.cwiseAbs2()) / a;
    if ((iter + 1) % 64 == 0) refresh();
  }

  Vec center = Vec::Zero(n);
  Mat shape;
  if (symmetric) {
    shape = symmetrize(Xinv.topLeftCorner(n, n)) / n;
  } else {
    center = points * u;
    const Mat S = points * u.asDiagonal() * points.transpose() - center * center.transpose();
    shape = symmetrize(inverse_spd(symmetrize(S))) / n;
  }
  double gmax = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec dvec = points.col(i) - center;
    gmax = std::max(gmax, dvec.dot(shape * dvec));
  }
  shape /= gmax;

  MveeResult r{Ellipsoid::make(center, shape), iter, residual, u, symmetric};
  return r;
}

MveeResult mvee(const std::vector<Vec>& points, double eps, bool symmetric, int max_iterations) {
  return mvee(columns(points), eps, symmetric, max_iterations);
}

EvrResult loewner_ellipsoid(const ConvexBody& K, const SphereQuadrature& q) {
  const int n = K.dim();
  EvrResult r{K.name(), Ellipsoid::centered(Mat::Identity(n, n)), 0.0, 0, 0.0, false, "closed-form", 0};
  if (const auto* e = K.ellipsoid()) {
    r.loewner = *e;
    r.symmetric = e->is_centered();
    return r;
  }
  if (const auto* s = K.smooth(); s && (s->family == SmoothFamily::ball || s->family == SmoothFamily::pball)) {
    const double lambda = s->radial(Vec::Unit(n, 0));
    const double far = s->family == SmoothFamily::ball ? 1.0 : std::max(1.0, std::pow(n, 0.5 - 1.0 / s->p));
    const double R = lambda * far;
    r.loewner = Ellipsoid::centered(Mat::Identity(n, n) / (R * R));
    r.symmetric = true;
    r.method = s->family == SmoothFamily::ball ? "closed-form" : "symmetry";
    return r;
  }
  Mat pts;
  if (const auto* p = K.polytope()) {
    pts = p->vertex_matrix();
  } else {
    const SphereQuadrature* grid = &q;
    SphereQuadrature capped;
    if (n >= 4 && static_cast<int>(q.size()) > kMaxSmoothSamples) {
      capped = build_quadrature(n, kMaxSmoothSamples, q.seed);
      grid = &capped;
    }
    pts.resize(n, static_cast<Eigen::Index>(grid->size()));
    for (std::size_t i = 0; i < grid->size(); ++i) {
      const Vec u = grid->node(i);
      pts.col(static_cast<Eigen::Index>(i)) = radial(K, u, q) * u;
    }
  }
  r.symmetric = is_origin_symmetric(K, q);
  const MveeResult m = mvee(pts, kMveeTolerance, r.symmetric);
  r.loewner = m.ellipsoid;
  r.iterations = m.iterations;
  r.residual = m.residual;
  r.method = "mvee";
  r.samples = static_cast<int>(pts.cols());
  return r;
}

EvrResult exterior_volume_ratio(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("exterior_volume_ratio");
  EvrResult r = loewner_ellipsoid(K, q);
  r.evr = std::pow(volume(K, q) / r.loewner.volume(), 1.0 / K.dim());
  return r;
}

EvrResult exterior_volume_ratio(const ConvexBody& K) { return exterior_volume_ratio(K, default_quadrature(K.dim())); }

std::pair<InequalityRecord, InequalityRecord> john_containment_check(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("john_containment_check");
  const int n = K.dim();
  const EvrResult L = loewner_ellipsoid(K, q);
  const Ellipsoid& E = L.loewner;

  std::vector<Vec> extra;
  if (const auto* p = K.polytope()) {
    if (p->has_facets()) {
      for (const auto& f : p->facets()) extra.push_back(f.normal);
    }
    for (const auto& v : p->vertices()) extra.push_back(v.normalized());
  }
  Mat dirs(n, q.nodes.cols() + static_cast<Eigen::Index>(extra.size()));
  dirs.leftCols(q.nodes.cols()) = q.nodes;
  for (std::size_t i = 0; i < extra.size(); ++i) dirs.col(q.nodes.cols() + static_cast<Eigen::Index>(i)) = extra[i];

  const Vec hK = support_values(K, dirs);
  const Vec quad = dirs.cwiseProduct(E.shape_inverse() * dirs).colwise().sum().cwiseSqrt().transpose();
  const Vec shift = dirs.transpose() * E.center();
  const Vec hE = shift + quad;
  const Vec hInner = shift + quad / n;

  const double outer = (hE - hK).minCoeff();
  const double inner = (hK - hInner).minCoeff();
  const double scale = hK.maxCoeff();
  const bool exact = K.is_exact_polytope() || K.ellipsoid();
  const double tol = (exact ? 1e-7 : 1e-3) * scale;
  auto a = make_record("john-outer", outer, 0.0, tol, K.name(), "loewner", q.descriptor(), n);
  auto b = make_record("john-inner", inner, 0.0, tol, K.name(), "loewner/n", q.descriptor(), n);
  a.extras["relative_margin"] = outer / scale;
  b.extras["relative_margin"] = inner / scale;
  return {a, b};
}

std::pair<InequalityRecord, InequalityRecord> john_containment_check(const ConvexBody& K) {
  return john_containment_check(K, default_quadrature(K.dim()));
}

BartheConstants barthe_constants(int n) {
  coverage::touch("barthe_constants");
  if (n < 2 || n > 20) fail(ErrorKind::invalid_argument, "dimension must be in [2, 20]");
  const double pi = std::numbers::pi;
  const double log_omega = log_unit_ball_volume(n);
  const double log_fact = std::lgamma(n + 1.0);
  const double log_sym = n * std::log(2.0) + std::lgamma(n / 2.0 + 1.0) - log_fact - (n / 2.0) * std::log(pi);
  const double log_gen = (n + 1.0) / 2.0 * std::log(n + 1.0) + std::lgamma(n / 2.0 + 1.0) - log_fact -
                         (n / 2.0) * std::log(n * pi);
  BartheConstants c;
  c.dim = n;
  c.symmetric_evr_power = std::exp(log_sym);
  c.general_evr_power = std::exp(log_gen);
  c.symmetric = std::exp(log_sym + 2.0 * log_omega);
  c.general = std::exp(log_gen + 2.0 * log_omega);
  return c;
}

InequalityRecord theorem11_check(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("theorem11_check");
  const int n = K.dim();
  const EvrResult L = loewner_ellipsoid(K, q);
  const Mat T = sqrt_spd(L.loewner.shape());
  const ConvexBody TK = linear_transform(K, T).renamed(K.name());
  const double omega = unit_ball_volume(n);

  const double vol = volume(TK, q);
  const double pvol = polar_volume(TK, q);
  const double evr_K = vol / omega;
  const ConvexBody P = polar(TK, q);
  const EvrResult LP = loewner_ellipsoid(P, q);
  const double evr_P = pvol / LP.loewner.volume();

  const double lhs = vol * pvol;
  const double rhs = std::max(evr_K, evr_P) * omega * omega;
  const bool exact = TK.is_exact_polytope() || TK.ellipsoid() != nullptr;
  auto r = make_record("theorem11", lhs, rhs, check_tolerance(exact, rhs), K.name(), "", q.descriptor(), n);
  const double offset = L.loewner.center().norm();
  if (offset > 1e-6) r.flags.push_back("loewner-center-offset");
  if (L.symmetric) r.flags.push_back("symmetric");
  const BartheConstants c = barthe_constants(std::min(std::max(n, 2), 20));
  r.extras["evr_K"] = std::pow(evr_K, 1.0 / n);
  r.extras["evr_polar"] = std::pow(evr_P, 1.0 / n);
  r.extras["rhs_sym"] = c.symmetric;
  r.extras["rhs_gen"] = c.general;
  r.extras["center_offset"] = offset;
  r.extras["mvee_residual"] = std::max(L.residual, LP.residual);
  return r;
}

InequalityRecord theorem11_check(const ConvexBody& K) { return theorem11_check(K, default_quadrature(K.dim())); }

nlohmann::json to_json(const Ellipsoid& e) {
  nlohmann::json shape = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.shape().rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(e.shape().cols()));
    for (Eigen::Index k = 0; k < e.shape().cols(); ++k) row[static_cast<std::size_t>(k)] = e.shape()(i, k);
    shape.push_back(row);
  }
  return {{"center", std::vector<double>(e.center().data(), e.center().data() + e.center().size())},
          {"shape", shape},
          {"volume", e.volume()}};
}

nlohmann::json to_json(const EvrResult& r) {
  return {{"body", r.body},         {"evr", r.evr},           {"loewner", to_json(r.loewner)},
          {"iterations", r.iterations}, {"residual", r.residual}, {"symmetric", r.symmetric},
          {"method", r.method},     {"samples", r.samples}};
}

}  // namespace convexlab
