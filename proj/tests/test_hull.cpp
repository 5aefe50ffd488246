#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <functional>
#include <set>

#include "convexlab/errors.hpp"
#include "convexlab/hull.hpp"

using namespace convexlab;

namespace {

std::vector<Vec> random_points(int n, int m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i) {
    Vec p(n);
    for (int k = 0; k < n; ++k) p[k] = g(rng);
    pts.push_back(p);
  }
  return pts;
}

// Brute force: every affinely independent n-subset whose hyperplane leaves all
// points on one side; returns the distinct unit normals.
std::vector<Vec> brute_facet_normals(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts[0].size());
  const int m = static_cast<int>(pts.size());
  std::vector<Vec> normals;
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      Mat E(n - 1, n);
      for (int i = 1; i < n; ++i) E.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
      Eigen::FullPivLU<Mat> lu(E);
      if (lu.rank() < n - 1) return;
      Vec nu = lu.kernel().col(0).normalized();
      const double c = nu.dot(pts[idx[0]]);
      int above = 0, below = 0;
      for (const auto& p : pts) {
        const double d = nu.dot(p) - c;
        if (d > 1e-9) ++above;
        if (d < -1e-9) ++below;
      }
      if (above && below) return;
      if (above) nu = -nu;
      for (const auto& v : normals) {
        if ((v - nu).norm() < 1e-7) return;
      }
      normals.push_back(nu);
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return normals;
}

// Andrew's monotone chain and the shoelace formula.
double planar_hull_area(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); });
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) { return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]); };
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  double a = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec& p = h[i];
    const Vec& q = h[(i + 1) % h.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * std::abs(a);
}

std::vector<Vec> cube_points(int n) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec p(n);
    for (int k = 0; k < n; ++k) p[k] = (mask >> k & 1) ? 1.0 : -1.0;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST(Hull, CubeFacetsAndVolume) {
  for (int n = 2; n <= 6; ++n) {
    const auto h = ConvexHull::compute(cube_points(n));
    EXPECT_EQ(h.facets().size(), static_cast<std::size_t>(2 * n)) << n;
    EXPECT_EQ(h.vertices().size(), static_cast<std::size_t>(1 << n));
    EXPECT_NEAR(h.volume(), std::pow(2.0, n), 1e-9 * std::pow(2.0, n));
  }
}

TEST(Hull, CrossPolytopeVolume) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Vec> pts;
    for (int k = 0; k < n; ++k) {
      pts.push_back(Vec::Unit(n, k));
      pts.push_back(-Vec::Unit(n, k));
    }
    const auto h = ConvexHull::compute(pts);
    EXPECT_EQ(h.facets().size(), static_cast<std::size_t>(1 << n));
    EXPECT_NEAR(h.volume(), std::pow(2.0, n) / std::tgamma(n + 1.0), 1e-12);
  }
}

TEST(Hull, PlanarAreaMatchesShoelace) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto pts = random_points(2, 40, seed);
    EXPECT_NEAR(ConvexHull::compute(pts).volume(), planar_hull_area(pts), 1e-12);
  }
}

TEST(Hull, FacetsMatchBruteForceEnumeration) {
  for (int n : {3, 4}) {
    for (unsigned seed = 1; seed <= 5; ++seed) {
      const auto pts = random_points(n, n == 3 ? 25 : 14, seed * 31 + n);
      const auto h = ConvexHull::compute(pts);
      const auto brute = brute_facet_normals(pts);
      ASSERT_EQ(h.facets().size(), brute.size()) << "n=" << n << " seed=" << seed;
      for (const auto& f : h.facets()) {
        const bool found = std::any_of(brute.begin(), brute.end(), [&](const Vec& v) { return (v - f.normal).norm() < 1e-7; });
        EXPECT_TRUE(found);
      }
    }
  }
}

TEST(Hull, VolumeAgreesWithHitOrMiss) {
  const auto pts = random_points(3, 30, 4242);
  const auto h = ConvexHull::compute(pts);
  const auto brute = brute_facet_normals(pts);
  std::vector<double> offsets;
  for (const auto& nu : brute) {
    double c = -1e300;
    for (const auto& p : pts) c = std::max(c, nu.dot(p));
    offsets.push_back(c);
  }
  Vec lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  const int samples = 400000;
  int inside = 0;
  for (int s = 0; s < samples; ++s) {
    Vec x(3);
    for (int k = 0; k < 3; ++k) x[k] = lo[k] + u(rng) * (hi[k] - lo[k]);
    bool in = true;
    for (std::size_t f = 0; f < brute.size() && in; ++f) in = brute[f].dot(x) <= offsets[f];
    inside += in;
  }
  const double box = (hi - lo).prod();
  const double frac = static_cast<double>(inside) / samples;
  const double est = box * frac;
  const double sigma = box * std::sqrt(frac * (1 - frac) / samples);
  EXPECT_NEAR(h.volume(), est, 4 * sigma);
}

TEST(Hull, InteriorAndDuplicatePointsAreIgnored) {
  auto pts = cube_points(3);
  pts.push_back(Vec::Zero(3));
  pts.push_back(pts[0]);
  pts.push_back(Vec::Constant(3, 0.5));
  const auto h = ConvexHull::compute(pts);
  EXPECT_EQ(h.vertices().size(), 8u);
  EXPECT_EQ(h.facets().size(), 6u);
}

TEST(Hull, CentroidOfTranslatedSimplex) {
  std::vector<Vec> pts{Vec::Zero(3), Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)};
  for (auto& p : pts) p += Vec::Constant(3, 2.0);
  const auto h = ConvexHull::compute(pts);
  EXPECT_NEAR((h.centroid() - Vec::Constant(3, 2.25)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(h.volume(), 1.0 / 6.0, 1e-15);
}

TEST(Hull, DegenerateInputRaises) {
  std::vector<Vec> flat;
  for (int i = 0; i < 6; ++i) flat.push_back((Vec(3) << i, 2 * i * i, 0).finished());
  try {
    ConvexHull::compute(flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degeneracy);
  }
  EXPECT_THROW(ConvexHull::compute({Vec::Zero(2), Vec::Ones(2)}), Error);
  EXPECT_THROW(ConvexHull::compute(random_points(7, 20, 1)), Error);
}
