#include "convexlab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

constexpr double kNormalMergeTol = 1e-9;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct Builder {
  int n;
  const std::vector<Vec>& pts;
  double eps;
  Vec interior;
  std::vector<HullSimplex> facets;

  // Outward simplex through the given vertices; throws when degenerate.
  HullSimplex make_facet(std::vector<int> verts) const {
    Mat edges(n - 1, n);
    const Vec& p0 = pts[static_cast<std::size_t>(verts[0])];
    for (int i = 1; i < n; ++i) edges.row(i - 1) = (pts[static_cast<std::size_t>(verts[i])] - p0).transpose();
    Eigen::JacobiSVD<Mat> svd(edges, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv.size() ? sv[0] : 0.0, 1e-300);
    if (sv.size() < n - 1 || sv[n - 2] <= 1e-12 * scale) {
      fail(ErrorKind::degeneracy, "hull facet is degenerate (affinely dependent vertices)");
    }
    Vec normal = svd.matrixV().col(n - 1);
    double offset = normal.dot(p0);
    if (normal.dot(interior) > offset) {
      normal = -normal;
      offset = -offset;
    }
    Mat frame(n, n);
    frame.leftCols(n - 1) = edges.transpose();
    frame.col(n - 1) = normal;
    HullSimplex f;
    std::sort(verts.begin(), verts.end());
    f.vertices = std::move(verts);
    f.normal = std::move(normal);
    f.offset = offset;
    f.area = std::abs(frame.determinant()) / factorial(n - 1);
    return f;
  }

  double distance(const HullSimplex& f, int p) const {
    return f.normal.dot(pts[static_cast<std::size_t>(p)]) - f.offset;
  }
};

}  // namespace

std::vector<Vec> deduplicate_points(const std::vector<Vec>& points, double tol) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a][0] < points[b][0];
  });
  std::vector<bool> keep(points.size(), true);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!keep[order[i]]) continue;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (points[order[j]][0] - points[order[i]][0] > tol) break;
      if (keep[order[j]] && (points[order[j]] - points[order[i]]).cwiseAbs().maxCoeff() <= tol) {
        // Keep the earlier input index.
        if (order[j] < order[i]) {
          keep[order[i]] = false;
          break;
        }
        keep[order[j]] = false;
      }
    }
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(points[i]);
  }
  return out;
}

ConvexHull ConvexHull::compute(const std::vector<Vec>& input) {
  if (input.empty()) fail(ErrorKind::degeneracy, "empty point set");
  const int n = static_cast<int>(input.front().size());
  if (n < 2 || n > kMaxHullDim) {
    fail(ErrorKind::invalid_argument, "exact hulls are supported for 2 <= n <= 6");
  }
  for (const auto& p : input) {
    if (p.size() != n) fail(ErrorKind::invalid_argument, "points have inconsistent dimensions");
    if (!p.allFinite()) fail(ErrorKind::invalid_argument, "point coordinates must be finite");
  }

  ConvexHull hull;
  hull.dim_ = n;
  hull.points_ = deduplicate_points(input);
  const auto& pts = hull.points_;
  const int m = static_cast<int>(pts.size());
  if (m < n + 1) fail(ErrorKind::degeneracy, "fewer than n+1 distinct points");

  Vec mean = Vec::Zero(n);
  for (const auto& p : pts) mean += p;
  mean /= m;
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, (p - mean).norm());
  if (!(scale > 0.0)) fail(ErrorKind::degeneracy, "all points coincide");
  const double eps = 1e-11 * std::max(scale, mean.norm());

  // Initial simplex: farthest point from the mean, then repeatedly the point
  // farthest from the affine hull of those chosen.
  std::vector<int> chosen;
  {
    int best = 0;
    for (int i = 1; i < m; ++i) {
      if ((pts[static_cast<std::size_t>(i)] - mean).norm() > (pts[static_cast<std::size_t>(best)] - mean).norm()) best = i;
    }
    chosen.push_back(best);
    std::vector<Vec> basis;
    const Vec& origin = pts[static_cast<std::size_t>(best)];
    while (static_cast<int>(chosen.size()) < n + 1) {
      int arg = -1;
      double far = -1.0;
      for (int i = 0; i < m; ++i) {
        Vec r = pts[static_cast<std::size_t>(i)] - origin;
        for (const auto& b : basis) r -= r.dot(b) * b;
        const double d = r.norm();
        if (d > far) {
          far = d;
          arg = i;
        }
      }
      if (far <= 1e-9 * scale) fail(ErrorKind::degeneracy, "points do not affinely span R^n");
      Vec r = pts[static_cast<std::size_t>(arg)] - origin;
      for (const auto& b : basis) r -= r.dot(b) * b;
      basis.push_back(r.normalized());
      chosen.push_back(arg);
    }
  }

  Builder b{n, pts, eps, Vec::Zero(n), {}};
  for (int i : chosen) b.interior += pts[static_cast<std::size_t>(i)];
  b.interior /= (n + 1);
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> verts;
    for (int i = 0; i <= n; ++i) {
      if (i != skip) verts.push_back(chosen[static_cast<std::size_t>(i)]);
    }
    b.facets.push_back(b.make_facet(std::move(verts)));
  }

  std::vector<bool> in_hull(static_cast<std::size_t>(m), false);
  for (int i : chosen) in_hull[static_cast<std::size_t>(i)] = true;
  std::vector<int> remaining;
  for (int i = 0; i < m; ++i) {
    if (!in_hull[static_cast<std::size_t>(i)]) remaining.push_back(i);
  }

  while (!remaining.empty()) {
    // Drop points that no facet sees; find the furthest (facet, point) pair.
    std::vector<int> outside;
    double best_dist = eps;
    for (int p : remaining) {
      double worst = -1.0;
      for (const auto& f : b.facets) worst = std::max(worst, b.distance(f, p));
      if (worst > eps) {
        outside.push_back(p);
        best_dist = std::max(best_dist, worst);
      }
    }
    remaining.swap(outside);
    if (remaining.empty()) break;

    // Facet and point attaining the max; ties broken towards the
    // lexicographically largest point, which is then extreme.
    int apex = -1;
    for (const auto& f : b.facets) {
      for (int p : remaining) {
        const double d = b.distance(f, p);
        if (d >= best_dist - 1e-12 * scale) {
          if (apex < 0 || lex_less(pts[static_cast<std::size_t>(apex)], pts[static_cast<std::size_t>(p)])) apex = p;
        }
      }
      if (apex >= 0) break;
    }

    std::vector<HullSimplex> kept;
    std::map<std::vector<int>, int> ridge_count;
    for (auto& f : b.facets) {
      if (b.distance(f, apex) > eps) {
        for (int skip = 0; skip < n; ++skip) {
          std::vector<int> ridge;
          for (int i = 0; i < n; ++i) {
            if (i != skip) ridge.push_back(f.vertices[static_cast<std::size_t>(i)]);
          }
          ++ridge_count[ridge];
        }
      } else {
        kept.push_back(std::move(f));
      }
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(apex);
      kept.push_back(b.make_facet(std::move(verts)));
    }
    b.facets.swap(kept);
    remaining.erase(std::remove(remaining.begin(), remaining.end(), apex), remaining.end());
  }

  hull.simplices_ = std::move(b.facets);

  // Fuse coplanar simplices into facets.
  for (const auto& s : hull.simplices_) {
    HullFacet* target = nullptr;
    for (auto& f : hull.facets_) {
      if ((f.normal.normalized() - s.normal).norm() < kNormalMergeTol) {
        target = &f;
        break;
      }
    }
    if (!target) {
      hull.facets_.push_back(HullFacet{s.normal, 0.0, 0.0, {}});
      target = &hull.facets_.back();
      target->normal = Vec::Zero(n);
    }
    target->normal += s.area * s.normal;
    target->offset += s.area * s.offset;
    target->area += s.area;
    target->vertices.insert(target->vertices.end(), s.vertices.begin(), s.vertices.end());
  }
  for (auto& f : hull.facets_) {
    f.offset /= f.area;
    f.normal.normalize();
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
  }

  // Extreme points: the normals of the facets through a vertex span ℝⁿ.
  std::map<int, std::vector<int>> incident;
  for (int fi = 0; fi < static_cast<int>(hull.facets_.size()); ++fi) {
    for (int v : hull.facets_[static_cast<std::size_t>(fi)].vertices) incident[v].push_back(fi);
  }
  for (const auto& [v, fs] : incident) {
    if (static_cast<int>(fs.size()) < n) continue;
    Mat normals(n, static_cast<Eigen::Index>(fs.size()));
    for (std::size_t k = 0; k < fs.size(); ++k) normals.col(static_cast<Eigen::Index>(k)) = hull.facets_[static_cast<std::size_t>(fs[k])].normal;
    Eigen::JacobiSVD<Mat> svd(normals);
    if (svd.singularValues()[n - 1] > 1e-9) hull.vertices_.push_back(v);
  }
  return hull;
}

double ConvexHull::volume() const {
  double acc = 0.0;
  for (const auto& s : simplices_) acc += s.offset * s.area;
  return acc / dim_;
}

Vec ConvexHull::centroid() const {
  // Cones from a point inside the hull over every simplicial facet.
  Vec apex = Vec::Zero(dim_);
  for (int v : vertices_) apex += points_[static_cast<std::size_t>(v)];
  apex /= static_cast<double>(vertices_.size());
  Vec acc = Vec::Zero(dim_);
  double total = 0.0;
  for (const auto& s : simplices_) {
    const double cone = s.area * (s.offset - s.normal.dot(apex)) / dim_;
    Vec c = apex;
    for (int v : s.vertices) c += points_[static_cast<std::size_t>(v)];
    c /= (dim_ + 1);
    acc += cone * c;
    total += cone;
  }
  return acc / total;
}

}  // namespace convexlab
