#pragma once

#include <vector>

#include "convexlab/linalg.hpp"

namespace convexlab {

// Largest dimension for which polytopes get an exact facet enumeration.
inline constexpr int kMaxHullDim = 6;

// Simplicial boundary facet: outward unit normal, normal·x = offset on the
// facet, vertex indices into ConvexHull::points().
struct HullSimplex {
  std::vector<int> vertices;
  Vec normal;
  double offset = 0.0;
  double area = 0.0;  // (n−1)-volume
};

// A true facet: coplanar simplices fused.
struct HullFacet {
  Vec normal;
  double offset = 0.0;
  double area = 0.0;
  std::vector<int> vertices;  // sorted, unique
};

// Incremental (beneath-beyond) convex hull in 2 ≤ n ≤ 6. Each inserted point
// is the extreme point of the remaining set in the direction of the facet it
// sees furthest, so every hull vertex is a genuine extreme point. Throws
// degeneracy when the points do not affinely span ℝⁿ.
class ConvexHull {
 public:
  static ConvexHull compute(const std::vector<Vec>& points);

  int dim() const { return dim_; }
  // Input points after deduplication (1e-12 absolute per coordinate).
  const std::vector<Vec>& points() const { return points_; }
  const std::vector<HullSimplex>& simplices() const { return simplices_; }
  const std::vector<HullFacet>& facets() const { return facets_; }
  // Indices of extreme points (vertices of the polytope), ascending.
  const std::vector<int>& vertices() const { return vertices_; }

  // Cone decomposition about the origin: (1/n)·Σ offset·area (signed, so the
  // origin need not be interior).
  double volume() const;
  Vec centroid() const;

 private:
  int dim_ = 0;
  std::vector<Vec> points_;
  std::vector<HullSimplex> simplices_;
  std::vector<HullFacet> facets_;
  std::vector<int> vertices_;
};

// Deduplicate within `tol` on every coordinate, keeping first occurrences.
std::vector<Vec> deduplicate_points(const std::vector<Vec>& points, double tol = 1e-12);

}  // namespace convexlab
