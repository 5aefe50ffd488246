#include "convexlab/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

constexpr double kSupportFloor = 1e-12;

void require_finite_vector(const Vec& v, const char* what) {
  if (!v.allFinite()) fail(ErrorKind::invalid_argument, std::string(what) + " must be finite");
}

double q_norm(const VecRef& u, double q) {
  double acc = 0.0;
  const double scale = u.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) acc += std::pow(std::abs(u[i]) / scale, q);
  return scale * std::pow(acc, 1.0 / q);
}

// Smallest radial value over grid directions: ρ(v) = min_{u·v>0} h(u)/(u·v).
double dual_radial(const VecRef& v, const Mat& nodes, const Vec& h) {
  double best = std::numeric_limits<double>::infinity();
  const Vec dots = nodes.transpose() * v;
  for (Eigen::Index j = 0; j < dots.size(); ++j) {
    if (dots[j] > 1e-12) best = std::min(best, h[j] / dots[j]);
  }
  return best;
}

// Subsampled grid for O(N²) dual evaluations.
Mat dual_grid(const SphereQuadrature& q) {
  const Eigen::Index limit = 8000;
  if (q.nodes.cols() <= limit) return q.nodes;
  return build_quadrature(q.dim, static_cast<int>(limit), q.seed).nodes;
}

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- PolytopeV

PolytopeV PolytopeV::from_points(const std::vector<Vec>& points) {
  if (points.empty()) fail(ErrorKind::invalid_argument, "polytope needs vertices");
  const int n = static_cast<int>(points.front().size());
  if (n < 2) fail(ErrorKind::invalid_argument, "polytope dimension must be >= 2");
  for (const auto& p : points) {
    if (p.size() != n) fail(ErrorKind::invalid_argument, "vertices have inconsistent dimensions");
    require_finite_vector(p, "vertex coordinates");
  }
  if (static_cast<int>(points.size()) < n + 1) {
    fail(ErrorKind::degeneracy, "a polytope in R^n needs at least n+1 vertices");
  }

  auto data = std::make_shared<Data>();
  if (n <= kMaxHullDim) {
    ConvexHull hull = ConvexHull::compute(points);
    for (int v : hull.vertices()) data->vertices.push_back(hull.points()[static_cast<std::size_t>(v)]);
    data->hull = std::move(hull);
  } else {
    data->vertices = deduplicate_points(points);
    Vec mean = Vec::Zero(n);
    for (const auto& p : data->vertices) mean += p;
    mean /= static_cast<double>(data->vertices.size());
    Mat diffs(n, static_cast<Eigen::Index>(data->vertices.size()));
    for (std::size_t i = 0; i < data->vertices.size(); ++i) diffs.col(static_cast<Eigen::Index>(i)) = data->vertices[i] - mean;
    Eigen::JacobiSVD<Mat> svd(diffs);
    if (svd.singularValues()[n - 1] <= 1e-9 * svd.singularValues()[0]) {
      fail(ErrorKind::degeneracy, "vertices do not affinely span R^n");
    }
  }

  data->vertex_matrix.resize(n, static_cast<Eigen::Index>(data->vertices.size()));
  for (std::size_t i = 0; i < data->vertices.size(); ++i) {
    data->vertex_matrix.col(static_cast<Eigen::Index>(i)) = data->vertices[i];
    data->circumradius = std::max(data->circumradius, data->vertices[i].norm());
  }
  if (!(data->circumradius > 0.0)) fail(ErrorKind::degeneracy, "all vertices at the origin");

  const double floor = 1e-9 * data->circumradius;
  if (data->hull) {
    for (const auto& f : data->hull->facets()) {
      if (!(f.offset > floor)) fail(ErrorKind::origin_not_interior, "origin is not strictly inside the polytope");
    }
  } else {
    const auto probes = build_quadrature(n, 4096, kDefaultSeed);
    const Vec h = (data->vertex_matrix.transpose() * probes.nodes).colwise().maxCoeff().transpose();
    const Vec hneg = (-(data->vertex_matrix.transpose() * probes.nodes)).colwise().maxCoeff().transpose();
    if (!(std::min(h.minCoeff(), hneg.minCoeff()) > floor)) {
      fail(ErrorKind::origin_not_interior, "origin is not strictly inside the polytope");
    }
  }

  PolytopeV out;
  out.dim_ = n;
  out.data_ = std::move(data);
  return out;
}

const std::vector<HullFacet>& PolytopeV::facets() const {
  if (!data_->hull) fail(ErrorKind::unsupported_representation, "no facet structure above dimension 6");
  return data_->hull->facets();
}

const ConvexHull& PolytopeV::hull() const {
  if (!data_->hull) fail(ErrorKind::unsupported_representation, "no facet structure above dimension 6");
  return *data_->hull;
}

double PolytopeV::support(const VecRef& u) const {
  return (data_->vertex_matrix.transpose() * u).maxCoeff();
}

double PolytopeV::volume() const { return hull().volume(); }

// ---------------------------------------------------------------- Ellipsoid

Ellipsoid Ellipsoid::make(Vec center, Mat shape) {
  const auto n = center.size();
  if (n < 2) fail(ErrorKind::invalid_argument, "ellipsoid dimension must be >= 2");
  if (shape.rows() != n || shape.cols() != n) fail(ErrorKind::invalid_argument, "shape must be n x n");
  require_finite_vector(center, "ellipsoid centre");
  if (!shape.allFinite()) fail(ErrorKind::invalid_argument, "ellipsoid shape must be finite");
  const double scale = std::max(1.0, shape.cwiseAbs().maxCoeff());
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    fail(ErrorKind::invalid_argument, "ellipsoid shape must be symmetric");
  }
  shape = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(shape);
  const Vec& ev = eig.eigenvalues();
  if (!(ev.minCoeff() > 0.0) || ev.minCoeff() <= 1e-14 * ev.maxCoeff()) {
    fail(ErrorKind::invalid_argument, "ellipsoid shape must be positive definite");
  }
  Ellipsoid e;
  e.center_ = std::move(center);
  e.shape_ = shape;
  e.shape_inv_ = eig.eigenvectors() * ev.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  e.shape_inv_ = 0.5 * (e.shape_inv_ + e.shape_inv_.transpose()).eval();
  e.det_shape_ = ev.prod();
  return e;
}

Ellipsoid Ellipsoid::centered(Mat shape) {
  const auto n = shape.rows();
  return make(Vec::Zero(n), std::move(shape));
}

double Ellipsoid::support(const VecRef& u) const {
  return center_.dot(u) + std::sqrt(u.dot(shape_inv_ * u));
}

double Ellipsoid::volume() const { return unit_ball_volume(dim()) / std::sqrt(det_shape_); }

double Ellipsoid::curvature(const VecRef& u) const {
  const double quad = u.dot(shape_inv_ * u);
  return 1.0 / (det_shape_ * std::pow(quad, 0.5 * (dim() + 1)));
}

double Ellipsoid::radial(const VecRef& v) const { return 1.0 / std::sqrt(v.dot(shape_ * v)); }

double Ellipsoid::gauge(const VecRef& x) const {
  const Vec d = x - center_;
  return d.dot(shape_ * d);
}

// ---------------------------------------------------------------- ConvexBody

std::string family_name(SmoothFamily f) {
  switch (f) {
    case SmoothFamily::ball: return "ball";
    case SmoothFamily::pball: return "pball";
    case SmoothFamily::custom: return "custom";
    case SmoothFamily::polar: return "polar";
  }
  return "custom";
}

ConvexBody::ConvexBody(PolytopeV p, std::string name) : body_(std::move(p)), name_(std::move(name)) {}
ConvexBody::ConvexBody(SmoothBody s, std::string name) : body_(std::move(s)), name_(std::move(name)) {
  const auto& sb = std::get<SmoothBody>(body_);
  if (sb.dim < 2) fail(ErrorKind::invalid_argument, "smooth body dimension must be >= 2");
  if (!sb.support) fail(ErrorKind::invalid_argument, "smooth body needs a support evaluator");
}
ConvexBody::ConvexBody(Ellipsoid e, std::string name) : body_(std::move(e)), name_(std::move(name)) {}

int ConvexBody::dim() const {
  return std::visit([](const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(b)>, SmoothBody>) {
      return b.dim;
    } else {
      return b.dim();
    }
  }, body_);
}

ConvexBody ConvexBody::renamed(std::string name) const {
  ConvexBody out = *this;
  out.name_ = std::move(name);
  return out;
}

bool ConvexBody::is_exact_polytope() const {
  const auto* p = polytope();
  return p && p->has_facets();
}

ConvexBody ConvexBody::with_flag(std::string flag) const {
  ConvexBody out = *this;
  if (std::find(out.flags_.begin(), out.flags_.end(), flag) == out.flags_.end()) out.flags_.push_back(std::move(flag));
  return out;
}

double support_homogeneous(const ConvexBody& body, const VecRef& x) {
  if (x.size() != body.dim()) fail(ErrorKind::invalid_argument, "direction dimension mismatch");
  if (const auto* p = body.polytope()) return p->support(x);
  if (const auto* e = body.ellipsoid()) return e->support(x);
  const auto& s = *body.smooth();
  const double r = x.norm();
  if (r == 0.0) return 0.0;
  const Vec u = x / r;
  return r * s.support(u);
}

double support(const ConvexBody& body, const VecRef& u) {
  const double h = support_homogeneous(body, u);
  if (!std::isfinite(h)) fail(ErrorKind::numeric_domain, "support value is not finite");
  if (!(h > 0.0)) fail(ErrorKind::origin_not_interior, "support function is not positive; origin is not interior");
  return h;
}

Vec support_values(const ConvexBody& body, const Mat& dirs) {
  if (dirs.rows() != body.dim()) fail(ErrorKind::invalid_argument, "direction dimension mismatch");
  Vec h;
  if (const auto* p = body.polytope()) {
    h = (p->vertex_matrix().transpose() * dirs).colwise().maxCoeff().transpose();
  } else if (const auto* e = body.ellipsoid()) {
    const Mat ad = e->shape_inverse() * dirs;
    h = (dirs.transpose() * e->center()) + dirs.cwiseProduct(ad).colwise().sum().cwiseSqrt().transpose();
  } else {
    h.resize(dirs.cols());
    for (Eigen::Index j = 0; j < dirs.cols(); ++j) h[j] = support_homogeneous(body, dirs.col(j));
  }
  for (Eigen::Index j = 0; j < h.size(); ++j) {
    if (!std::isfinite(h[j])) fail(ErrorKind::numeric_domain, "support value is not finite");
    if (!(h[j] > kSupportFloor * dirs.col(j).norm())) {
      fail(ErrorKind::origin_not_interior, "support function below 1e-12; origin is not interior");
    }
  }
  return h;
}

// ---------------------------------------------------------------- polar

namespace {

SmoothBody smooth_polar(const ConvexBody& body, const SphereQuadrature& q) {
  SmoothBody out;
  out.dim = body.dim();
  out.family = SmoothFamily::polar;
  // ρ_{K°} = 1/h_K exactly.
  out.radial = [body](const VecRef& v) { return 1.0 / support(body, v); };
  const SmoothBody* s = body.smooth();
  if (s && s->radial) {
    auto rho = s->radial;
    out.support = [rho](const VecRef& u) { return 1.0 / rho(u); };
  } else {
    // h_{K°}(u) = max over boundary points ρ_{K°}(v)·v of u·x, on the grid.
    auto grid = std::make_shared<Mat>(dual_grid(q));
    auto inv_h = std::make_shared<Vec>(support_values(body, *grid).cwiseInverse());
    out.support = [grid, inv_h](const VecRef& u) {
      return (grid->transpose() * u).cwiseProduct(*inv_h).maxCoeff();
    };
  }
  return out;
}

}  // namespace

ConvexBody polar(const ConvexBody& body, const SphereQuadrature& q) {
  const std::string name = "polar(" + body.name() + ")";
  if (const auto* p = body.polytope()) {
    if (p->has_facets()) {
      std::vector<Vec> verts;
      for (const auto& f : p->facets()) verts.push_back(f.normal / f.offset);
      return ConvexBody(PolytopeV::from_points(verts), name);
    }
    return ConvexBody(smooth_polar(body, q), name);
  }
  if (const auto* e = body.ellipsoid()) {
    if (e->is_centered()) return ConvexBody(Ellipsoid::centered(e->shape_inverse()), name);
    // The polar of an off-centre ellipsoid is still an ellipsoid, but it is
    // routed through the generic dual path.
    const double c_gauge = e->center().dot(e->shape() * e->center());
    if (!(c_gauge < 1.0)) fail(ErrorKind::origin_not_interior, "origin is not inside the ellipsoid");
    return ConvexBody(smooth_polar(body, q), name).with_flag("off-center-polar");
  }
  const auto& s = *body.smooth();
  if (s.family == SmoothFamily::ball) {
    return ball(s.dim, 1.0 / s.support(Vec::Unit(s.dim, 0))).renamed(name);
  }
  if (s.family == SmoothFamily::pball && s.volume) {
    // Scaled p-ball λ·B_p has polar (1/λ)·B_q.
    const double lambda = s.radial(Vec::Unit(s.dim, 0));
    const double conj = s.p / (s.p - 1.0);
    return scaled(p_ball_smooth(s.dim, conj), 1.0 / lambda).renamed(name);
  }
  return ConvexBody(smooth_polar(body, q), name);
}

ConvexBody polar(const ConvexBody& body) { return polar(body, default_quadrature(body.dim())); }

// ---------------------------------------------------------------- volume

double radial(const ConvexBody& body, const VecRef& v, const SphereQuadrature& q) {
  if (const auto* p = body.polytope()) {
    if (p->has_facets()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& f : p->facets()) {
        const double d = f.normal.dot(v);
        if (d > 0.0) best = std::min(best, f.offset / d);
      }
      return best;
    }
  } else if (const auto* e = body.ellipsoid()) {
    const Mat& A = e->shape();
    const Vec& c = e->center();
    const double a = v.dot(A * v);
    const double b = v.dot(A * c);
    const double cc = c.dot(A * c) - 1.0;
    return (b + std::sqrt(std::max(0.0, b * b - a * cc))) / a;
  } else if (const auto* s = body.smooth(); s && s->radial) {
    return s->radial(v);
  }
  const Mat grid = dual_grid(q);
  return dual_radial(v, grid, support_values(body, grid));
}

bool has_exact_volume(const ConvexBody& body) {
  if (body.polytope()) return body.is_exact_polytope();
  if (body.ellipsoid()) return true;
  return body.smooth()->volume.has_value();
}

double volume(const ConvexBody& body, const SphereQuadrature& q) {
  const int n = body.dim();
  if (q.dim != n) fail(ErrorKind::invalid_argument, "quadrature dimension mismatch");
  if (const auto* p = body.polytope()) {
    if (p->has_facets()) return p->volume();
  } else if (const auto* e = body.ellipsoid()) {
    return e->volume();
  } else {
    const auto& s = *body.smooth();
    if (s.volume) return *s.volume;
    if (s.curvature) {
      const SphereQuadrature& grid =
          (s.axis_singular && n <= 3) ? *cached_graded_quadrature(n, q.resolution) : q;
      return integrate(grid, [&](const VecRef& u) { return s.support(u) * s.curvature(u); }) / n;
    }
    if (s.radial) {
      return integrate(q, [&](const VecRef& u) { return std::pow(s.radial(u), n); }) / n;
    }
  }
  // Dual evaluation of the radial function on the grid.
  const Mat grid = dual_grid(q);
  const Vec h = support_values(body, grid);
  const double area = sphere_area(n);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < grid.cols(); ++j) acc += std::pow(dual_radial(grid.col(j), grid, h), n);
  return acc * area / static_cast<double>(grid.cols()) / n;
}

double volume(const ConvexBody& body) { return volume(body, default_quadrature(body.dim())); }

// ---------------------------------------------------------------- transforms

ConvexBody linear_transform(const ConvexBody& body, const Mat& T) {
  const int n = body.dim();
  if (T.rows() != n || T.cols() != n) fail(ErrorKind::invalid_argument, "transform must be n x n");
  if (!T.allFinite()) fail(ErrorKind::invalid_argument, "transform must be finite");
  const double det = T.determinant();
  const double norm = T.norm();
  if (!(std::abs(det) > 1e-12 * std::pow(norm, n))) fail(ErrorKind::invalid_argument, "transform is singular");
  const std::string name = "T(" + body.name() + ")";

  if (const auto* p = body.polytope()) {
    std::vector<Vec> verts;
    for (const auto& v : p->vertices()) verts.push_back(T * v);
    return ConvexBody(PolytopeV::from_points(verts), name);
  }
  const Mat Tinv = T.inverse();
  if (const auto* e = body.ellipsoid()) {
    Mat A = Tinv.transpose() * e->shape() * Tinv;
    A = 0.5 * (A + A.transpose()).eval();
    return ConvexBody(Ellipsoid::make(T * e->center(), A), name);
  }
  const auto& s = *body.smooth();
  const double t = T(0, 0);
  if (t > 0.0 && (T - t * Mat::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-14 * t) {
    return scaled(body, t).renamed(name);
  }
  SmoothBody out;
  out.dim = n;
  out.family = SmoothFamily::custom;
  const Mat Tt = T.transpose();
  auto h = s.support;
  out.support = [h, Tt](const VecRef& u) {
    const Vec x = Tt * u;
    const double r = x.norm();
    return r * h(x / r);
  };
  if (s.curvature) {
    auto f = s.curvature;
    const double det2 = det * det;
    out.curvature = [f, Tt, det2, n](const VecRef& u) {
      const Vec x = Tt * u;
      const double r = x.norm();
      return det2 * std::pow(r, -(n + 1)) * f(x / r);
    };
  }
  if (s.radial) {
    auto rho = s.radial;
    out.radial = [rho, Tinv](const VecRef& v) {
      const Vec x = Tinv * v;
      const double r = x.norm();
      return rho(x / r) / r;
    };
  }
  if (s.volume) out.volume = *s.volume * std::abs(det);
  const bool diagonal = (T - Mat(T.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
  out.axis_singular = s.axis_singular && diagonal;
  out.p = s.p;
  return ConvexBody(std::move(out), name);
}

ConvexBody scaled(const ConvexBody& body, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) fail(ErrorKind::invalid_argument, "scale factor must be positive");
  const std::string name = format_number(factor) + "*" + body.name();
  if (const auto* s = body.smooth()) {
    const int n = s->dim;
    SmoothBody out = *s;
    auto h = s->support;
    out.support = [h, factor](const VecRef& u) { return factor * h(u); };
    if (s->curvature) {
      auto f = s->curvature;
      const double c = std::pow(factor, n - 1);
      out.curvature = [f, c](const VecRef& u) { return c * f(u); };
    }
    if (s->radial) {
      auto rho = s->radial;
      out.radial = [rho, factor](const VecRef& v) { return factor * rho(v); };
    }
    if (s->volume) out.volume = *s->volume * std::pow(factor, n);
    return ConvexBody(std::move(out), name);
  }
  const Mat T = factor * Mat::Identity(body.dim(), body.dim());
  return linear_transform(body, T).renamed(name);
}

bool is_origin_symmetric(const ConvexBody& body, const SphereQuadrature& q) {
  Mat dirs = q.nodes;
  if (const auto* p = body.polytope(); p && p->has_facets()) {
    const auto& facets = p->facets();
    Mat all(dirs.rows(), dirs.cols() + static_cast<Eigen::Index>(facets.size()));
    all.leftCols(dirs.cols()) = dirs;
    for (std::size_t i = 0; i < facets.size(); ++i) all.col(dirs.cols() + static_cast<Eigen::Index>(i)) = facets[i].normal;
    dirs = std::move(all);
  }
  const Vec h = support_values(body, dirs);
  const Vec hn = support_values(body, -dirs);
  for (Eigen::Index j = 0; j < h.size(); ++j) {
    if (std::abs(h[j] - hn[j]) > 1e-9 * h[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- generators

ConvexBody cube(int n, double half_width) {
  if (n < 2 || n > 16) fail(ErrorKind::invalid_argument, "cube dimension must be in [2, 16]");
  if (!(half_width > 0.0)) fail(ErrorKind::invalid_argument, "cube half-width must be positive");
  std::vector<Vec> verts;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? half_width : -half_width;
    verts.push_back(v);
  }
  return ConvexBody(PolytopeV::from_points(verts), "cube");
}

ConvexBody cross_polytope(int n) {
  if (n < 2) fail(ErrorKind::invalid_argument, "cross-polytope dimension must be >= 2");
  std::vector<Vec> verts;
  for (int i = 0; i < n; ++i) {
    verts.push_back(Vec::Unit(n, i));
    verts.push_back(-Vec::Unit(n, i));
  }
  return ConvexBody(PolytopeV::from_points(verts), "cross");
}

ConvexBody regular_simplex(int n) {
  if (n < 2) fail(ErrorKind::invalid_argument, "simplex dimension must be >= 2");
  // Standard basis of ℝ^{n+1} projected on the Helmert basis of Σx = 0.
  std::vector<Vec> verts;
  for (int i = 0; i <= n; ++i) {
    Vec v(n);
    for (int k = 1; k <= n; ++k) {
      const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
      double c = 0.0;
      if (i < k) c = 1.0 / norm;
      else if (i == k) c = -static_cast<double>(k) / norm;
      v[k - 1] = c;
    }
    verts.push_back(v.normalized());
  }
  return ConvexBody(PolytopeV::from_points(verts), "simplex");
}

ConvexBody ball(int n, double radius) {
  if (n < 2) fail(ErrorKind::invalid_argument, "ball dimension must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(ErrorKind::invalid_argument, "ball radius must be positive");
  SmoothBody s;
  s.dim = n;
  s.family = SmoothFamily::ball;
  s.support = [radius](const VecRef&) { return radius; };
  const double f = std::pow(radius, n - 1);
  s.curvature = [f](const VecRef&) { return f; };
  s.radial = [radius](const VecRef&) { return radius; };
  s.volume = unit_ball_volume(n) * std::pow(radius, n);
  return ConvexBody(std::move(s), radius == 1.0 ? "ball" : format_number(radius) + "*ball");
}

ConvexBody ellipsoid(const std::vector<double>& semi_axes) {
  const int n = static_cast<int>(semi_axes.size());
  if (n < 2) fail(ErrorKind::invalid_argument, "ellipsoid needs at least two axes");
  Vec diag(n);
  for (int i = 0; i < n; ++i) {
    const double a = semi_axes[static_cast<std::size_t>(i)];
    if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::invalid_argument, "semi-axes must be positive");
    diag[i] = 1.0 / (a * a);
  }
  std::ostringstream name;
  name << "ellipsoid(";
  for (int i = 0; i < n; ++i) name << (i ? "," : "") << semi_axes[static_cast<std::size_t>(i)];
  name << ")";
  return ConvexBody(Ellipsoid::centered(diag.asDiagonal()), name.str());
}

ConvexBody p_ball_smooth(int n, double p) {
  if (n < 2) fail(ErrorKind::invalid_argument, "p-ball dimension must be >= 2");
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorKind::invalid_argument, "p must lie in (1, inf)");
  const double q = p / (p - 1.0);
  SmoothBody s;
  s.dim = n;
  s.family = SmoothFamily::pball;
  s.p = p;
  s.support = [q](const VecRef& u) { return q_norm(u, q); };
  // Inverse Gauss curvature at the boundary point with outer normal u:
  // ‖u‖_q^{n(2−q)−n−1} / ((p−1)^{n−1} ∏|u_i|^{2−q}).
  const double lead = std::pow(p - 1.0, n - 1);
  s.curvature = [q, n, lead](const VecRef& u) {
    double prod = 1.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) prod *= std::pow(std::abs(u[i]), 2.0 - q);
    return std::pow(q_norm(u, q), n * (2.0 - q) - n - 1.0) / (lead * prod);
  };
  s.radial = [p](const VecRef& v) { return 1.0 / q_norm(v, p); };
  s.volume = std::exp(n * (std::log(2.0) + std::lgamma(1.0 + 1.0 / p)) - std::lgamma(1.0 + n / p));
  s.axis_singular = (p != 2.0);
  return ConvexBody(std::move(s), "pball" + format_number(p));
}

namespace {

std::vector<Vec> random_points(int n, int m, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::invalid_argument, "dimension must be >= 2");
  if (m < n + 1) fail(ErrorKind::invalid_argument, "need m >= n+1 points");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 1.0);
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i) {
    Vec v(n);
    do {
      for (int k = 0; k < n; ++k) v[k] = gauss(rng);
    } while (v.norm() < 1e-9);
    pts.push_back(radius(rng) * v.normalized());
  }
  return pts;
}

}  // namespace

ConvexBody random_symmetric_polytope(int n, int m, std::uint64_t seed) {
  auto pts = random_points(n, m, seed);
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) pts.push_back(-pts[i]);
  return ConvexBody(PolytopeV::from_points(pts), "rsym");
}

ConvexBody centroid_centered(const std::vector<Vec>& points, std::string name) {
  const ConvexHull hull = ConvexHull::compute(points);
  const Vec c = hull.centroid();
  std::vector<Vec> shifted;
  for (int v : hull.vertices()) shifted.push_back(hull.points()[static_cast<std::size_t>(v)] - c);
  return ConvexBody(PolytopeV::from_points(shifted), std::move(name));
}

ConvexBody random_polytope(int n, int m, std::uint64_t seed) {
  return centroid_centered(random_points(n, m, seed), "rpoly");
}

}  // namespace convexlab
