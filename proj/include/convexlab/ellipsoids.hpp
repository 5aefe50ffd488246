#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convexlab/bodies.hpp"
#include "convexlab/records.hpp"

namespace convexlab {

inline constexpr double kMveeTolerance = 1e-7;
inline constexpr int kMveeMaxIterations = 100000;

struct MveeResult {
  Ellipsoid ellipsoid;
  int iterations = 0;
  // max(κ_max/d − 1, 1 − κ_min/d) over the support of the weights.
  double residual = 0.0;
  Vec weights;
  bool symmetric = false;
};

// Minimum-volume enclosing ellipsoid of the columns of `points` by Khachiyan's
// coordinate ascent with Todd-Yildirim away steps. With symmetric=true the
// centre is pinned at the origin (the point set is read as ±points). The
// result is rescaled so that every point lies inside and at least one lies on
// the boundary.
MveeResult mvee(const Mat& points, double eps = kMveeTolerance, bool symmetric = false,
                int max_iterations = kMveeMaxIterations);
MveeResult mvee(const std::vector<Vec>& points, double eps = kMveeTolerance, bool symmetric = false,
                int max_iterations = kMveeMaxIterations);

struct EvrResult {
  std::string body;
  Ellipsoid loewner;
  double evr = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool symmetric = false;
  std::string method;  // "closed-form", "symmetry" or "mvee"
  int samples = 0;
};

// Löwner ellipsoid. Ellipsoids and balls are their own; p-balls use the ball
// through their farthest points; everything else runs mvee on vertices or on
// boundary samples ρ(u)·u (at most 20000 in dimension ≥ 4).
EvrResult loewner_ellipsoid(const ConvexBody& K, const SphereQuadrature& q);

// (Vol K / Vol ℰ_L)^{1/n}
EvrResult exterior_volume_ratio(const ConvexBody& K, const SphereQuadrature& q);
EvrResult exterior_volume_ratio(const ConvexBody& K);

// "john-outer": min_u h_E(u) − h_K(u) ≥ 0 and "john-inner":
// min_u h_K(u) − h_{c + (E−c)/n}(u) ≥ 0 over the probe directions.
std::pair<InequalityRecord, InequalityRecord> john_containment_check(const ConvexBody& K, const SphereQuadrature& q);
std::pair<InequalityRecord, InequalityRecord> john_containment_check(const ConvexBody& K);

// Vol(K)Vol(K°) > max{evrⁿ(K), evrⁿ(K°)}·ωₙ², evaluated on TK where T maps
// the Löwner ellipsoid of K onto a unit ball.
InequalityRecord theorem11_check(const ConvexBody& K, const SphereQuadrature& q);
InequalityRecord theorem11_check(const ConvexBody& K);

struct BartheConstants {
  int dim = 0;
  double symmetric = 0.0;        // 2ⁿωₙ/n!
  double general = 0.0;          // (n+1)^{(n+1)/2}Γ(n/2+1)ωₙ²/(n!(nπ)^{n/2})
  double symmetric_evr_power = 0.0;  // evrⁿ of the cross-polytope
  double general_evr_power = 0.0;    // evrⁿ of the regular simplex
};

BartheConstants barthe_constants(int n);

nlohmann::json to_json(const Ellipsoid& e);
nlohmann::json to_json(const EvrResult& r);

}  // namespace convexlab
