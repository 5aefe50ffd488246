#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convexlab/hull.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/sphere.hpp"

namespace convexlab {

// Convex polytope given by its vertices, origin strictly inside. For
// n ≤ kMaxHullDim the facet structure is computed once at construction and
// shared between copies.
class PolytopeV {
 public:
  // Builds the hull, drops non-extreme points and checks that the origin is
  // interior (min facet offset > 1e-9·circumradius).
  static PolytopeV from_points(const std::vector<Vec>& points);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return data_->vertices; }
  // Vertices as columns.
  const Mat& vertex_matrix() const { return data_->vertex_matrix; }
  bool has_facets() const { return data_->hull.has_value(); }
  const std::vector<HullFacet>& facets() const;
  const ConvexHull& hull() const;
  double circumradius() const { return data_->circumradius; }

  double support(const VecRef& u) const;
  double volume() const;

 private:
  struct Data {
    std::vector<Vec> vertices;
    Mat vertex_matrix;
    std::optional<ConvexHull> hull;
    double circumradius = 0.0;
  };
  int dim_ = 0;
  std::shared_ptr<const Data> data_;
};

// {x : (x−c)ᵀA(x−c) ≤ 1} with A symmetric positive definite.
class Ellipsoid {
 public:
  static Ellipsoid make(Vec center, Mat shape);
  static Ellipsoid centered(Mat shape) ;

  int dim() const { return static_cast<int>(center_.size()); }
  const Vec& center() const { return center_; }
  const Mat& shape() const { return shape_; }
  const Mat& shape_inverse() const { return shape_inv_; }
  bool is_centered(double tol = 1e-12) const { return center_.norm() <= tol; }

  double support(const VecRef& u) const;
  double volume() const;
  // Curvature function det(A⁻¹)/(uᵀA⁻¹u)^{(n+1)/2}.
  double curvature(const VecRef& u) const;
  // Radial function about the centre.
  double radial(const VecRef& v) const;
  // Mahalanobis value (x−c)ᵀA(x−c).
  double gauge(const VecRef& x) const;

 private:
  Vec center_;
  Mat shape_;
  Mat shape_inv_;
  double det_shape_ = 1.0;
};

enum class SmoothFamily { ball, pball, custom, polar };

std::string family_name(SmoothFamily f);

using DirectionFn = std::function<double(const VecRef&)>;

// Body known through evaluators on the sphere. `support` is mandatory; the
// curvature function f, radial function ρ and a closed-form volume are
// optional.
struct SmoothBody {
  int dim = 0;
  SmoothFamily family = SmoothFamily::custom;
  DirectionFn support;
  DirectionFn curvature;
  DirectionFn radial;
  std::optional<double> volume;
  // The curvature function is singular on the coordinate hyperplanes; its
  // measures use the graded quadrature.
  bool axis_singular = false;
  double p = 2.0;  // exponent for the p-ball family
};

class ConvexBody {
 public:
  using Variant = std::variant<PolytopeV, SmoothBody, Ellipsoid>;

  ConvexBody(PolytopeV p, std::string name = "polytope");
  ConvexBody(SmoothBody s, std::string name = "smooth");
  ConvexBody(Ellipsoid e, std::string name = "ellipsoid");

  int dim() const;
  const Variant& variant() const { return body_; }
  const std::string& name() const { return name_; }
  ConvexBody renamed(std::string name) const;

  const PolytopeV* polytope() const { return std::get_if<PolytopeV>(&body_); }
  const SmoothBody* smooth() const { return std::get_if<SmoothBody>(&body_); }
  const Ellipsoid* ellipsoid() const { return std::get_if<Ellipsoid>(&body_); }
  // Polytope with an exact facet structure.
  bool is_exact_polytope() const;

  // Metadata flags such as "off-center-polar".
  const std::vector<std::string>& flags() const { return flags_; }
  ConvexBody with_flag(std::string flag) const;

 private:
  Variant body_;
  std::string name_;
  std::vector<std::string> flags_;
};

// h_K(u) for unit u. Raises origin-not-interior when the value is ≤ 0.
double support(const ConvexBody& body, const VecRef& u);
// Positively homogeneous extension: h_K(x) = ‖x‖·h_K(x/‖x‖) for x ≠ 0.
double support_homogeneous(const ConvexBody& body, const VecRef& x);
// h_K on every column of `dirs` (unit or not, homogeneous extension).
// Rejects values ≤ 1e-12 with origin-not-interior.
Vec support_values(const ConvexBody& body, const Mat& dirs);

ConvexBody polar(const ConvexBody& body, const SphereQuadrature& q);
ConvexBody polar(const ConvexBody& body);

double volume(const ConvexBody& body, const SphereQuadrature& q);
double volume(const ConvexBody& body);
// True when volume() is exact up to rounding (polytope hull, ellipsoid,
// closed-form smooth family).
bool has_exact_volume(const ConvexBody& body);

// Radial function ρ_K(v) = max{t : t·v ∈ K}.
double radial(const ConvexBody& body, const VecRef& v, const SphereQuadrature& q);

ConvexBody linear_transform(const ConvexBody& body, const Mat& T);
ConvexBody scaled(const ConvexBody& body, double factor);

// Origin-symmetry test over probe directions (quadrature nodes plus facet
// normals): max |h(u) − h(−u)| ≤ 1e-9·h(u).
bool is_origin_symmetric(const ConvexBody& body, const SphereQuadrature& q);

// Generators.
ConvexBody cube(int n, double half_width = 1.0);
ConvexBody cross_polytope(int n);
// Vertices on the unit sphere, centroid at the origin.
ConvexBody regular_simplex(int n);
ConvexBody ball(int n, double radius = 1.0);
// Axis-aligned centred ellipsoid with the given semi-axes.
ConvexBody ellipsoid(const std::vector<double>& semi_axes);
// Unit ball of the ℓ_p norm, 1 < p < ∞, with closed-form support, curvature,
// radial function and volume.
ConvexBody p_ball_smooth(int n, double p);
// conv{±x_i} for m Gaussian-direction points at radius in [0.5, 1].
ConvexBody random_symmetric_polytope(int n, int m, std::uint64_t seed);
// conv of m such points, translated so its centroid is the origin.
ConvexBody random_polytope(int n, int m, std::uint64_t seed);
// Polytope translated so its centroid is the origin.
ConvexBody centroid_centered(const std::vector<Vec>& points, std::string name = "polytope");

}  // namespace convexlab
