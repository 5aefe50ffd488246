#include "convexlab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "convexlab/coverage.hpp"
#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRatioFloor = 1e-12;

template <class Range>
double csum(const Range& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(xs.size()); ++i) {
    const double x = xs[i];
    const double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

Vec masses_of(const SphereMeasure& m) { return Eigen::Map<const Vec>(m.masses.data(), static_cast<Eigen::Index>(m.masses.size())); }
Vec weights_of(const SphereMeasure& m) { return Eigen::Map<const Vec>(m.weights.data(), static_cast<Eigen::Index>(m.weights.size())); }
Vec density_of(const SphereMeasure& m) { return Eigen::Map<const Vec>(m.density.data(), static_cast<Eigen::Index>(m.density.size())); }

const SphereMeasure& require_density(const SphereMeasure& m, const char* what) {
  if (m.atomic) fail(ErrorKind::unsupported_representation, std::string(what) + " needs a body with a curvature function");
  return m;
}

// Vertices of a planar polygon ordered counter-clockwise around the origin.
std::vector<Vec> ccw_order(const Mat& verts) {
  std::vector<std::pair<double, Eigen::Index>> order;
  for (Eigen::Index j = 0; j < verts.cols(); ++j) order.emplace_back(std::atan2(verts(1, j), verts(0, j)), j);
  std::sort(order.begin(), order.end());
  std::vector<Vec> out;
  for (const auto& [angle, j] : order) out.push_back(verts.col(j));
  return out;
}

// Exact ∫₀^{2π} h dθ and ∫₀^{2π} h² dθ of a convex polygon with the origin
// inside, integrating v·u over the normal cone of each vertex v.
std::pair<double, double> polygon_moments(const Mat& verts) {
  const std::vector<Vec> v = ccw_order(verts);
  const std::size_t m = v.size();
  auto edge_normal_angle = [&](std::size_t i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % m];
    return std::atan2(-(b[0] - a[0]), b[1] - a[1]);
  };
  std::vector<double> first(m), second(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double alpha = edge_normal_angle((i + m - 1) % m);
    double beta = edge_normal_angle(i);
    while (beta <= alpha) beta += 2.0 * kPi;
    const double x = v[i][0];
    const double y = v[i][1];
    first[i] = x * (std::sin(beta) - std::sin(alpha)) - y * (std::cos(beta) - std::cos(alpha));
    auto prim = [&](double t) {
      const double s2 = std::sin(2.0 * t);
      const double s = std::sin(t);
      return x * x * (t / 2.0 + s2 / 4.0) + y * y * (t / 2.0 - s2 / 4.0) + x * y * s * s;
    };
    second[i] = prim(beta) - prim(alpha);
  }
  Vec f = Eigen::Map<Vec>(first.data(), static_cast<Eigen::Index>(m));
  Vec s = Eigen::Map<Vec>(second.data(), static_cast<Eigen::Index>(m));
  return {csum(f), csum(s)};
}

// Perimeter of the planar ellipse {x : xᵀB⁻¹x ≤ 1}.
double ellipse_perimeter(const Mat& B) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(B);
  const double a = std::sqrt(eig.eigenvalues()[1]);
  const double b = std::sqrt(eig.eigenvalues()[0]);
  const double k = std::sqrt(std::max(0.0, 1.0 - (b * b) / (a * a)));
  return 4.0 * a * std::comp_ellint_2(k);
}

double log_guard(double ratio) {
  if (!(ratio > kRatioFloor) || !std::isfinite(ratio)) {
    fail(ErrorKind::origin_not_interior, "support ratio below 1e-12");
  }
  return std::log(ratio);
}

double volume_for_check(const ConvexBody& body, const SphereQuadrature& q) {
  return volume(body, q);
}

}  // namespace

// ---------------------------------------------------------------- volumes

double polar_volume(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("polar_volume");
  const int n = K.dim();
  if (K.is_exact_polytope()) return volume(polar(K, q), q);
  if (const auto* e = K.ellipsoid(); e && e->is_centered()) {
    return unit_ball_volume(n) * std::sqrt(e->shape().determinant());
  }
  const Vec h = support_values(K, q.nodes);
  const Vec terms = Eigen::Map<const Vec>(q.weights.data(), static_cast<Eigen::Index>(q.size())).cwiseProduct(h.array().pow(-n).matrix());
  return csum(terms) / n;
}

double polar_volume(const ConvexBody& K) { return polar_volume(K, default_quadrature(K.dim())); }

double volume_product(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("volume_product");
  return volume(K, q) * polar_volume(K, q);
}

double volume_product(const ConvexBody& K) { return volume_product(K, default_quadrature(K.dim())); }

// ---------------------------------------------------------------- log-Minkowski

PairData pair_data(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  if (K.dim() != L.dim()) fail(ErrorKind::invalid_argument, "bodies have different dimensions");
  PairData d;
  d.dim = L.dim();
  d.surface = surface_measure(L, q);
  d.hK = support_values(K, d.surface.directions);
  d.hL = support_values(L, d.surface.directions);
  d.log_ratio.resize(d.hK.size());
  for (Eigen::Index i = 0; i < d.hK.size(); ++i) d.log_ratio[i] = log_guard(d.hK[i] / d.hL[i]);
  const Vec S = masses_of(d.surface);
  d.vol_L = csum(Vec(S.cwiseProduct(d.hL))) / d.dim;
  d.V1 = csum(Vec(S.cwiseProduct(d.hK))) / d.dim;
  d.exact = d.surface.atomic;
  return d;
}

namespace {

ChainRecord chain_from(const PairData& d, const ConvexBody& K, const ConvexBody& L) {
  const Vec S = masses_of(d.surface);
  ChainRecord c;
  c.lower = csum(Vec(S.cwiseProduct(d.hL).cwiseProduct(d.log_ratio))) / d.dim / d.vol_L;
  c.upper = csum(Vec(S.cwiseProduct(d.hK).cwiseProduct(d.log_ratio))) / d.dim / d.V1;
  c.middle = std::log(d.V1 / d.vol_L);
  c.tolerance = d.exact ? kExactTolerance : quadrature_tolerance(c.middle);
  c.lower_pass = c.lower <= c.middle + c.tolerance;
  c.upper_pass = c.middle <= c.upper + c.tolerance;
  c.body = K.name();
  c.body2 = L.name();
  c.quadrature = d.surface.descriptor;
  c.dim = d.dim;
  return c;
}

}  // namespace

double log_minkowski_L(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("log_minkowski_L");
  const PairData d = pair_data(K, L, q);
  return chain_from(d, K, L).lower;
}

double log_minkowski_L(const ConvexBody& K, const ConvexBody& L) {
  return log_minkowski_L(K, L, default_quadrature(L.dim()));
}

double log_minkowski_1(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("log_minkowski_1");
  const PairData d = pair_data(K, L, q);
  return chain_from(d, K, L).upper;
}

double log_minkowski_1(const ConvexBody& K, const ConvexBody& L) {
  return log_minkowski_1(K, L, default_quadrature(L.dim()));
}

ChainRecord entropy_chain(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("entropy_chain");
  return chain_from(pair_data(K, L, q), K, L);
}

ChainRecord entropy_chain(const ConvexBody& K, const ConvexBody& L) {
  return entropy_chain(K, L, default_quadrature(L.dim()));
}

Prop11Result check_prop11(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("check_prop11");
  const PairData d = pair_data(K, L, q);
  Prop11Result r;
  r.chain = chain_from(d, K, L);
  const int n = d.dim;
  const double tol = r.chain.tolerance;
  r.first = make_record("prop11-first", r.chain.upper, r.chain.middle, tol, K.name(), L.name(), r.chain.quadrature, n);
  const double vol_K = volume_for_check(K, q);
  const double vol_L = d.exact ? d.vol_L : volume_for_check(L, q);
  const double rhs = std::log(vol_K / vol_L) / n;
  const bool exact = d.exact && has_exact_volume(K);
  r.second = make_record("prop11-second", r.chain.middle, rhs, check_tolerance(exact, rhs), K.name(), L.name(),
                         r.chain.quadrature, n);
  r.first_tight = std::abs(r.chain.upper - r.chain.middle) <= tol;
  r.equality = std::abs(r.chain.upper - r.chain.lower) <= tol && std::abs(r.chain.middle - rhs) <= r.second.tolerance;
  if (r.first_tight) r.first.flags.push_back("first-tight");
  if (r.equality) r.second.flags.push_back("chain-equality");
  return r;
}

Prop11Result check_prop11(const ConvexBody& K, const ConvexBody& L) {
  return check_prop11(K, L, default_quadrature(L.dim()));
}

// ---------------------------------------------------------------- Gardner

bool support_contained(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q) {
  std::vector<Mat> blocks{q.nodes};
  if (auto* p = L.polytope(); p && p->has_facets()) {
    Mat m(L.dim(), static_cast<Eigen::Index>(p->facets().size()));
    for (std::size_t i = 0; i < p->facets().size(); ++i) m.col(static_cast<Eigen::Index>(i)) = p->facets()[i].normal;
    blocks.push_back(m);
  }
  if (auto* p = K.polytope(); p && p->has_facets()) {
    Mat m(K.dim(), static_cast<Eigen::Index>(p->facets().size()));
    for (std::size_t i = 0; i < p->facets().size(); ++i) m.col(static_cast<Eigen::Index>(i)) = p->facets()[i].normal;
    blocks.push_back(m);
  }
  for (const Mat& dirs : blocks) {
    const Vec hL = support_values(L, dirs);
    const Vec hK = support_values(K, dirs);
    for (Eigen::Index i = 0; i < hL.size(); ++i) {
      if (hL[i] > hK[i] + 1e-12 * std::max(1.0, hK[i])) return false;
    }
  }
  return true;
}

InequalityRecord gardner_functional(const ConvexBody& K, const ConvexBody& L, GardnerVariant variant,
                                    const SphereQuadrature& q) {
  coverage::touch("gardner_functional");
  const PairData d = pair_data(K, L, q);
  const int n = d.dim;
  const Vec S = masses_of(d.surface);
  Vec terms(d.hK.size());
  for (Eigen::Index i = 0; i < terms.size(); ++i) {
    const double r = d.hK[i] / d.hL[i];
    terms[i] = S[i] * d.hL[i] / n * r * d.log_ratio[i];
  }
  const double lhs = csum(terms) / d.vol_L;
  if (variant == GardnerVariant::mixed_volume) {
    const double x = d.V1 / d.vol_L;
    const double rhs = x * std::log(x);
    return make_record("gardner-mixed", lhs, rhs, check_tolerance(d.exact, rhs), K.name(), L.name(),
                       d.surface.descriptor, n);
  }
  if (!support_contained(L, K, q)) fail(ErrorKind::precondition, "the volume-ratio variant needs L contained in K");
  const double ratio = volume_for_check(K, q) / (d.exact ? d.vol_L : volume_for_check(L, q));
  const double rhs = std::pow(ratio, 1.0 / n) * std::log(ratio) / n;
  const bool exact = d.exact && has_exact_volume(K);
  return make_record("gardner-volume", lhs, rhs, check_tolerance(exact, rhs), K.name(), L.name(),
                     d.surface.descriptor, n);
}

InequalityRecord gardner_functional(const ConvexBody& K, const ConvexBody& L, GardnerVariant variant) {
  return gardner_functional(K, L, variant, default_quadrature(L.dim()));
}

// ---------------------------------------------------------------- Hölder limit

HolderLimit holder_limit(const ConvexBody& K, const ConvexBody& L, double p, const SphereQuadrature& q) {
  coverage::touch("holder_limit");
  if (!(p > 0.0) || !std::isfinite(p)) fail(ErrorKind::invalid_argument, "p must be positive");
  const PairData d = pair_data(K, L, q);
  const int n = d.dim;
  const Vec S = masses_of(d.surface);
  const double eps = n / (p + n);
  Vec excess(S.size()), entropy(S.size());
  for (Eigen::Index i = 0; i < S.size(); ++i) {
    const double mr = S[i] * d.hK[i] / n;  // cone mass times h_K/h_L
    excess[i] = mr * std::expm1(-eps * d.log_ratio[i]);
    entropy[i] = mr * d.log_ratio[i];
  }
  HolderLimit out;
  out.approx = std::exp((p + n) * std::log1p(csum(excess) / d.V1));
  out.target = std::exp(-n * csum(entropy) / d.V1);
  return out;
}

HolderLimit holder_limit(const ConvexBody& K, const ConvexBody& L, double p) {
  return holder_limit(K, L, p, default_quadrature(L.dim()));
}

// ---------------------------------------------------------------- affine surface area

namespace {

double omega_from(const SphereMeasure& m) {
  const int n = m.dim;
  const Vec w = weights_of(m);
  const Vec f = density_of(m);
  return csum(Vec(w.cwiseProduct(f.array().pow(n / (n + 1.0)).matrix())));
}

}  // namespace

double affine_surface_area(const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("affine_surface_area");
  if (L.polytope()) fail(ErrorKind::unsupported_representation, "affine surface area of a polytope is not computed");
  if (const auto* e = L.ellipsoid()) {
    // Ω(T·B + c) = |det T|^{(n−1)/(n+1)}·Ω(B), in the measure of q.
    const int n = e->dim();
    const double log_det = std::log(e->shape().determinant());
    return q.total_weight() * std::exp(-0.5 * (n - 1.0) / (n + 1.0) * log_det);
  }
  return omega_from(require_density(surface_measure(L, q), "affine surface area"));
}

double affine_surface_area(const ConvexBody& L) { return affine_surface_area(L, default_quadrature(L.dim())); }

InequalityRecord reverse_holder_check(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("reverse_holder_check");
  if (K.dim() != L.dim()) fail(ErrorKind::invalid_argument, "bodies have different dimensions");
  if (L.polytope()) fail(ErrorKind::unsupported_representation, "reverse Hoelder check needs a smooth L");
  const SphereMeasure m = require_density(surface_measure(L, q), "reverse Hoelder check");
  const int n = m.dim;
  const Vec w = weights_of(m);
  const Vec f = density_of(m);
  const Vec h = support_values(K, m.directions);
  const double lhs = csum(Vec(w.cwiseProduct(h).cwiseProduct(f)));
  const double a = csum(Vec(w.cwiseProduct(h.array().pow(-n).matrix())));
  const double b = omega_from(m);
  const double rhs = std::pow(a, -1.0 / n) * std::pow(b, (n + 1.0) / n);
  return make_record("reverse-holder", lhs, rhs, quadrature_tolerance(rhs), K.name(), L.name(), m.descriptor, n);
}

InequalityRecord reverse_holder_check(const ConvexBody& K, const ConvexBody& L) {
  return reverse_holder_check(K, L, default_quadrature(L.dim()));
}

InequalityRecord prop21_bound(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("prop21_bound");
  if (L.polytope()) fail(ErrorKind::unsupported_representation, "the bound needs a smooth L");
  const PairData d = pair_data(K, L, q);
  require_density(d.surface, "the bound");
  const int n = d.dim;
  const double omega = omega_from(d.surface);
  const double vol_L = volume(L, q);
  const double vol_K = volume(K, q);
  const double upper = chain_from(d, K, L).upper;
  const double log_rhs = (n + 1.0) * std::log(omega) - (n - 1.0) * std::log(vol_L) - (n + 1.0) * std::log(n) +
                         std::log(vol_K / vol_L) - n * upper;
  const double rhs = std::exp(log_rhs);
  const double lhs = volume_product(K, q);
  auto r = make_record("prop21", lhs, rhs, quadrature_tolerance(rhs), K.name(), L.name(), d.surface.descriptor, n);
  r.extras["affine_surface_area"] = omega;
  r.extras["log_minkowski_1"] = upper;
  return r;
}

InequalityRecord prop21_bound(const ConvexBody& K, const ConvexBody& L) {
  return prop21_bound(K, L, default_quadrature(L.dim()));
}

std::pair<InequalityRecord, InequalityRecord> corollary22_bound(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("corollary22_bound");
  if (K.polytope()) fail(ErrorKind::unsupported_representation, "the bound needs a smooth body");
  const SphereMeasure m = require_density(surface_measure(K, q), "the bound");
  const int n = m.dim;
  const double omega = affine_surface_area(K, q);
  const double vol = volume(K, q);
  const double ratio = std::exp((n + 1.0) * std::log(omega) - (n - 1.0) * std::log(vol));
  const double scale = std::pow(static_cast<double>(n), n + 1.0);
  const double lhs = volume_product(K, q);
  const double rhs = ratio / scale;
  auto first = make_record("cor22", lhs, rhs, quadrature_tolerance(rhs), K.name(), "", m.descriptor, n);
  first.extras["affine_surface_area"] = omega;
  const double iso = scale * std::pow(unit_ball_volume(n), 2);
  auto second = make_record("affine-isoperimetric", iso, ratio, quadrature_tolerance(ratio), K.name(), "",
                            m.descriptor, n);
  return {first, second};
}

std::pair<InequalityRecord, InequalityRecord> corollary22_bound(const ConvexBody& K) {
  return corollary22_bound(K, default_quadrature(K.dim()));
}

// ---------------------------------------------------------------- mean width and M

MomentEvaluator::MomentEvaluator(const ConvexBody& K, const SphereQuadrature& q)
    : dim_(K.dim()), path_(Path::generic), q_(&q), body_(K) {
  if (q.dim != dim_) fail(ErrorKind::invalid_argument, "quadrature dimension mismatch");
  if (const auto* p = K.polytope()) {
    vertices_ = p->vertex_matrix();
    path_ = dim_ == 2 ? Path::polygon : Path::vertices;
  } else if (K.ellipsoid()) {
    path_ = Path::ellipsoid;
  }
}

std::pair<double, double> MomentEvaluator::moments(const Mat& T) const {
  const int n = dim_;
  const double total = q_->total_weight();
  const double scale = total / sphere_area(n);
  switch (path_) {
    case Path::polygon: {
      const auto [w, h2] = polygon_moments(T * vertices_);
      return {w * scale, h2 * scale};
    }
    case Path::ellipsoid: {
      const auto& e = *body_.ellipsoid();
      const Mat B = T * e.shape_inverse() * T.transpose();
      const Vec c = T * e.center();
      const double h2 = (c.squaredNorm() + B.trace()) * total / n;
      if (n == 2) return {ellipse_perimeter(B) * scale, h2};
      const Mat BU = B * q_->nodes;
      const Vec h = (q_->nodes.transpose() * c) + q_->nodes.cwiseProduct(BU).colwise().sum().cwiseSqrt().transpose();
      const Vec w = Eigen::Map<const Vec>(q_->weights.data(), static_cast<Eigen::Index>(q_->size()));
      return {csum(Vec(w.cwiseProduct(h))), h2};
    }
    case Path::vertices:
    case Path::generic: {
      Vec h;
      if (path_ == Path::vertices) {
        h = ((T * vertices_).transpose() * q_->nodes).colwise().maxCoeff().transpose();
        for (Eigen::Index i = 0; i < h.size(); ++i) {
          if (!(h[i] > kRatioFloor)) fail(ErrorKind::origin_not_interior, "support function below 1e-12");
        }
      } else {
        h = support_values(body_, T.transpose() * q_->nodes);
      }
      const Vec w = Eigen::Map<const Vec>(q_->weights.data(), static_cast<Eigen::Index>(q_->size()));
      return {csum(Vec(w.cwiseProduct(h))), csum(Vec(w.cwiseProduct(h.cwiseAbs2())))};
    }
  }
  return {0.0, 0.0};
}

double mean_width_w(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("mean_width_w");
  return MomentEvaluator(K, q).moments(Mat::Identity(K.dim(), K.dim())).first;
}

double mean_width_w(const ConvexBody& K) { return mean_width_w(K, default_quadrature(K.dim())); }

double second_moment(const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("second_moment");
  return MomentEvaluator(K, q).moments(Mat::Identity(K.dim(), K.dim())).second;
}

double second_moment(const ConvexBody& K) { return second_moment(K, default_quadrature(K.dim())); }

double M_functional(const ConvexBody& K, const Mat& T, const SphereQuadrature& q) {
  coverage::touch("M_functional");
  const int n = K.dim();
  if (T.rows() != n || T.cols() != n) fail(ErrorKind::invalid_argument, "T must be n x n");
  if (!T.allFinite() || !(std::abs(T.determinant() - 1.0) < 1e-9)) {
    fail(ErrorKind::invalid_argument, "T must have determinant 1");
  }
  const auto [w, h2] = MomentEvaluator(K, q).moments(T);
  const bool unit_mass = std::abs(q.total_weight() / sphere_area(n) - 1.0) < 1e-12;
  const double vol = (unit_mass || has_exact_volume(K)) ? volume(K, q) : volume(K, default_quadrature(n));
  return vol * std::pow(w / h2, n);
}

double M_functional(const ConvexBody& K, const Mat& T) { return M_functional(K, T, default_quadrature(K.dim())); }

}  // namespace convexlab
