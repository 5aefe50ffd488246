#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "convexlab/bodies.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/measures.hpp"

using namespace convexlab;

namespace {

constexpr double kPi = std::numbers::pi;

// h + h'' by central differences in the angle.
double planar_curvature_fd(const ConvexBody& L, double theta) {
  const double d = 1e-4;
  auto h = [&](double t) { return support(L, (Vec(2) << std::cos(t), std::sin(t)).finished()); };
  return h(theta) + (h(theta + d) - 2 * h(theta) + h(theta - d)) / (d * d);
}

}  // namespace

TEST(SurfaceMeasure, PolytopeAtoms) {
  for (int n = 2; n <= 5; ++n) {
    const auto m = surface_measure(cube(n));
    EXPECT_TRUE(m.atomic);
    EXPECT_EQ(m.size(), static_cast<std::size_t>(2 * n));
    EXPECT_NEAR(m.total(), 2 * n * std::pow(2.0, n - 1), 1e-10);
    EXPECT_EQ(m.descriptor, "atoms");
  }
}

TEST(SurfaceMeasure, DensityMatchesFiniteDifferences) {
  for (const auto& L : {ellipsoid({2.0, 0.5}), p_ball_smooth(2, 3.0), p_ball_smooth(2, 1.5), ball(2, 1.5)}) {
    const auto m = surface_measure(L);
    ASSERT_FALSE(m.atomic);
    int checked = 0;
    for (std::size_t i = 0; i < m.size(); i += 7) {
      const Vec u = m.directions.col(static_cast<Eigen::Index>(i));
      if (u.cwiseAbs().minCoeff() < 0.1) continue;
      const double fd = planar_curvature_fd(L, std::atan2(u[1], u[0]));
      EXPECT_NEAR(m.density[i], fd, 1e-5 * std::max(1.0, fd)) << L.name();
      ++checked;
    }
    EXPECT_GT(checked, 50);
  }
}

TEST(SurfaceMeasure, SpheroidArea) {
  // Prolate spheroid with semi-axes (1, 1, 2).
  const double a = 1.0, c = 2.0;
  const double e = std::sqrt(1 - a * a / (c * c));
  const double area = 2 * kPi * a * a * (1 + c / (a * e) * std::asin(e));
  EXPECT_NEAR(surface_measure(ellipsoid({1.0, 1.0, 2.0})).total(), area, 1e-4 * area);
}

TEST(SurfaceMeasure, BallAndPerimeter) {
  EXPECT_NEAR(surface_measure(ball(3)).total(), 4 * kPi, 1e-9);
  // Perimeter of the ellipse (3, 1): 4·3·E(k), k² = 1 − 1/9.
  const double perim = 12 * std::comp_ellint_2(std::sqrt(1 - 1.0 / 9));
  EXPECT_NEAR(surface_measure(ellipsoid({3.0, 1.0})).total(), perim, 1e-8);
}

TEST(ConeVolume, TotalsToVolume) {
  for (const auto& K : {cube(3), regular_simplex(3), random_polytope(3, 15, 3), ellipsoid({2.0, 1.0, 0.5}),
                        p_ball_smooth(3, 4.0), p_ball_smooth(2, 1.5)}) {
    const double v = volume(K);
    EXPECT_NEAR(cone_volume_measure(K).total(), v, 1e-4 * v) << K.name();
  }
}

TEST(MixedVolume, KnownValues) {
  EXPECT_NEAR(mixed_volume_V1(cube(2), ball(2)), 4.0, 1e-12);
  EXPECT_NEAR(mixed_volume_V1(ball(2), cube(2)), 4.0, 1e-5);
  EXPECT_NEAR(mixed_volume_V1(ball(3), ball(3, 2.0)), 2 * 4 * kPi / 3, 1e-8);
  // V₁(L, L) = Vol(L).
  const auto S = regular_simplex(3);
  EXPECT_NEAR(mixed_volume_V1(S, S), volume(S), 1e-12);
  EXPECT_NEAR(mixed_volume_measure(cube(2), ball(2)).total(), 4.0, 1e-12);
}

TEST(Minkowski, HoldsAndIsTightForHomothets) {
  const auto r = minkowski_first_check(cube(3), random_symmetric_polytope(3, 8, 4));
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.gap, r.tolerance);
  const auto h = minkowski_first_check(regular_simplex(3), scaled(regular_simplex(3), 2.0));
  EXPECT_TRUE(h.at_boundary());
  EXPECT_NEAR(h.tolerance, 1e-9, 0);
  const auto s = minkowski_first_check(ball(2), p_ball_smooth(2, 4.0));
  EXPECT_TRUE(s.pass);
}

TEST(Measures, UnsupportedPaths) {
  try {
    surface_measure(cube(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_representation);
  }
  EXPECT_NEAR(check_tolerance(true, 5.0), 1e-9, 0);
  EXPECT_NEAR(check_tolerance(false, 5.0), 5e-3, 1e-15);
}
