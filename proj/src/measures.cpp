#include "convexlab/measures.hpp"

#include <cmath>
#include <numbers>

#include "convexlab/coverage.hpp"
#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

double compensated(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

const SphereQuadrature& grid_for(const SmoothBody& s, const SphereQuadrature& q,
                                 std::shared_ptr<const SphereQuadrature>& holder) {
  if (s.axis_singular && q.dim <= 3 && q.scheme != QuadratureScheme::graded) {
    holder = cached_graded_quadrature(q.dim, q.resolution);
    return *holder;
  }
  return q;
}

SphereMeasure density_measure(const SphereQuadrature& q, std::vector<double> density) {
  SphereMeasure m;
  m.dim = q.dim;
  m.atomic = false;
  m.directions = q.nodes;
  m.weights = q.weights;
  m.masses.resize(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) m.masses[i] = q.weights[i] * density[i];
  m.density = std::move(density);
  m.descriptor = q.descriptor();
  return m;
}

std::vector<double> sample(const DirectionFn& f, const SphereQuadrature& q, const char* what) {
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double v = f(q.node(i));
    if (!std::isfinite(v) || v < 0.0) {
      fail(ErrorKind::numeric_domain, std::string(what) + " is not finite and non-negative at node " + std::to_string(i));
    }
    out[i] = v;
  }
  return out;
}

// f = h + h'' on S¹ by central differences with step 2π/resolution.
std::vector<double> planar_curvature(const DirectionFn& h, const SphereQuadrature& q) {
  const double step = 2.0 * std::numbers::pi / q.resolution;
  std::vector<double> out(q.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto u = q.node(i);
    const double theta = std::atan2(u[1], u[0]);
    Vec a(2), b(2);
    a << std::cos(theta + step), std::sin(theta + step);
    b << std::cos(theta - step), std::sin(theta - step);
    const double h0 = h(u);
    const double f = h0 + (h(a) - 2.0 * h0 + h(b)) / (step * step);
    if (!std::isfinite(f)) fail(ErrorKind::numeric_domain, "curvature is not finite at node " + std::to_string(i));
    out[i] = f;
    scale = std::max(scale, std::abs(h0));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0.0) {
      if (out[i] < -1e-6 * scale) fail(ErrorKind::numeric_domain, "negative curvature at node " + std::to_string(i));
      out[i] = 0.0;
    }
  }
  return out;
}

SphereMeasure weighted_by_support(SphereMeasure m, const ConvexBody& body, MeasureKind kind) {
  const Vec h = support_values(body, m.directions);
  const double inv_n = 1.0 / m.dim;
  for (std::size_t i = 0; i < m.masses.size(); ++i) {
    m.masses[i] *= inv_n * h[static_cast<Eigen::Index>(i)];
    if (!m.atomic) m.density[i] *= inv_n * h[static_cast<Eigen::Index>(i)];
  }
  m.kind = kind;
  return m;
}

}  // namespace

std::string measure_kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::surface: return "surface";
    case MeasureKind::cone_volume: return "cone-volume";
    case MeasureKind::mixed_volume: return "mixed-volume";
  }
  return "surface";
}

double SphereMeasure::total() const { return compensated(masses); }

nlohmann::json SphereMeasure::to_json() const {
  nlohmann::json atoms = nlohmann::json::array();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k < dim; ++k) row[static_cast<std::size_t>(k)] = directions(k, static_cast<Eigen::Index>(i));
    row.back() = masses[i];
    atoms.push_back(std::move(row));
  }
  return {{"kind", measure_kind_name(kind)}, {"dim", dim}, {"atomic", atomic},
          {"descriptor", descriptor}, {"total", total()}, {"atoms", std::move(atoms)}};
}

SphereMeasure surface_measure(const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("surface_measure");
  const int n = L.dim();
  if (q.dim != n) fail(ErrorKind::invalid_argument, "quadrature dimension mismatch");
  if (const auto* p = L.polytope()) {
    if (!p->has_facets()) {
      fail(ErrorKind::unsupported_representation, "surface measure of a polytope above dimension 6");
    }
    const auto& facets = p->facets();
    SphereMeasure m;
    m.dim = n;
    m.atomic = true;
    m.directions.resize(n, static_cast<Eigen::Index>(facets.size()));
    for (std::size_t i = 0; i < facets.size(); ++i) {
      m.directions.col(static_cast<Eigen::Index>(i)) = facets[i].normal;
      m.masses.push_back(facets[i].area);
    }
    m.descriptor = "atoms";
    return m;
  }
  if (const auto* e = L.ellipsoid()) {
    return density_measure(q, sample([e](const VecRef& u) { return e->curvature(u); }, q, "curvature"));
  }
  const auto& s = *L.smooth();
  if (s.curvature) {
    std::shared_ptr<const SphereQuadrature> holder;
    const SphereQuadrature& grid = grid_for(s, q, holder);
    return density_measure(grid, sample(s.curvature, grid, "curvature"));
  }
  if (n == 2 && q.scheme == QuadratureScheme::trapezoid) {
    return density_measure(q, planar_curvature(s.support, q));
  }
  fail(ErrorKind::unsupported_representation, "smooth body without a curvature function in dimension >= 3");
}

SphereMeasure surface_measure(const ConvexBody& L) { return surface_measure(L, default_quadrature(L.dim())); }

SphereMeasure cone_volume_measure(const ConvexBody& L, const SphereQuadrature& q) {
  coverage::touch("cone_volume_measure");
  return weighted_by_support(surface_measure(L, q), L, MeasureKind::cone_volume);
}

SphereMeasure cone_volume_measure(const ConvexBody& L) { return cone_volume_measure(L, default_quadrature(L.dim())); }

SphereMeasure mixed_volume_measure(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("mixed_volume_measure");
  if (L.dim() != K.dim()) fail(ErrorKind::invalid_argument, "bodies have different dimensions");
  return weighted_by_support(surface_measure(L, q), K, MeasureKind::mixed_volume);
}

SphereMeasure mixed_volume_measure(const ConvexBody& L, const ConvexBody& K) {
  return mixed_volume_measure(L, K, default_quadrature(L.dim()));
}

double mixed_volume_V1(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("mixed_volume_V1");
  return mixed_volume_measure(L, K, q).total();
}

double mixed_volume_V1(const ConvexBody& L, const ConvexBody& K) {
  return mixed_volume_V1(L, K, default_quadrature(L.dim()));
}

double check_tolerance(bool exact, double rhs) { return exact ? kExactTolerance : quadrature_tolerance(rhs); }

InequalityRecord minkowski_first_check(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q) {
  coverage::touch("minkowski_first_check");
  const SphereMeasure m = mixed_volume_measure(L, K, q);
  const int n = L.dim();
  const double lhs = m.total();
  const double rhs = std::pow(volume(K, q), 1.0 / n) * std::pow(volume(L, q), (n - 1.0) / n);
  const bool exact = m.atomic && has_exact_volume(K);
  return make_record("minkowski-first", lhs, rhs, check_tolerance(exact, rhs), L.name(), K.name(), m.descriptor, n);
}

InequalityRecord minkowski_first_check(const ConvexBody& L, const ConvexBody& K) {
  return minkowski_first_check(L, K, default_quadrature(L.dim()));
}

}  // namespace convexlab
