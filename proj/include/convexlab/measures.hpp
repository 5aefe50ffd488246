#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "convexlab/bodies.hpp"
#include "convexlab/records.hpp"
#include "convexlab/sphere.hpp"

namespace convexlab {

enum class MeasureKind { surface, cone_volume, mixed_volume };

std::string measure_kind_name(MeasureKind kind);

// Finite measure on S^{n-1}: either atoms (polytopes) or a density sampled on
// quadrature nodes. In both cases ∫g dν = Σ masses[i]·g(directions[:, i]).
struct SphereMeasure {
  int dim = 0;
  MeasureKind kind = MeasureKind::surface;
  bool atomic = false;
  Mat directions;               // dim × size
  std::vector<double> masses;   // atom masses, or weight·density
  std::vector<double> weights;  // quadrature weights (density measures only)
  std::vector<double> density;  // density values (density measures only)
  std::string descriptor;       // "atoms" or the quadrature descriptor

  std::size_t size() const { return masses.size(); }
  double total() const;
  nlohmann::json to_json() const;
};

// dS_L: facet normals with facet areas, or f_L on a quadrature. Bodies whose
// curvature is singular on the coordinate hyperplanes use the graded
// quadrature of the same resolution (n ≤ 3).
SphereMeasure surface_measure(const ConvexBody& L, const SphereQuadrature& q);
SphereMeasure surface_measure(const ConvexBody& L);

// dv_L = (1/n)·h_L·dS_L
SphereMeasure cone_volume_measure(const ConvexBody& L, const SphereQuadrature& q);
SphereMeasure cone_volume_measure(const ConvexBody& L);

// dv₁ = (1/n)·h_K·dS_L
SphereMeasure mixed_volume_measure(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q);
SphereMeasure mixed_volume_measure(const ConvexBody& L, const ConvexBody& K);

// V₁(L, K) = (1/n)∫h_K dS_L
double mixed_volume_V1(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q);
double mixed_volume_V1(const ConvexBody& L, const ConvexBody& K);

// V₁(L, K) ≥ Vol(K)^{1/n}·Vol(L)^{(n−1)/n}
InequalityRecord minkowski_first_check(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q);
InequalityRecord minkowski_first_check(const ConvexBody& L, const ConvexBody& K);

// Tolerance for a check whose inputs are all exact polytopes vs. anything
// sampled on a quadrature.
double check_tolerance(bool exact, double rhs);

}  // namespace convexlab
