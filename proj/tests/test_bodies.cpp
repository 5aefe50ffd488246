#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "convexlab/bodies.hpp"
#include "convexlab/errors.hpp"

using namespace convexlab;

namespace {

constexpr double kPi = std::numbers::pi;

Vec random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec u(n);
  for (int k = 0; k < n; ++k) u[k] = g(rng);
  return u.normalized();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::io;
}

}  // namespace

TEST(Support, ClosedFormsOnRandomDirections) {
  std::mt19937_64 rng(1);
  for (int n : {2, 3, 5}) {
    const auto C = cube(n);
    const auto X = cross_polytope(n);
    const auto B = ball(n, 2.5);
    for (int i = 0; i < 50; ++i) {
      const Vec u = random_unit(n, rng);
      EXPECT_NEAR(support(C, u), u.lpNorm<1>(), 1e-14);
      EXPECT_NEAR(support(X, u), u.lpNorm<Eigen::Infinity>(), 1e-14);
      EXPECT_NEAR(support(B, u), 2.5, 1e-14);
    }
  }
}

TEST(Support, EllipsoidAndHomogeneity) {
  std::mt19937_64 rng(2);
  Mat A(3, 3);
  A << 2, 0.3, 0, 0.3, 1, 0.1, 0, 0.1, 0.5;
  const ConvexBody E(Ellipsoid::make(Vec::Zero(3), A));
  const Mat Ainv = A.inverse();
  for (int i = 0; i < 30; ++i) {
    const Vec u = random_unit(3, rng);
    EXPECT_NEAR(support(E, u), std::sqrt(u.dot(Ainv * u)), 1e-13);
    EXPECT_NEAR(support_homogeneous(E, 3.0 * u), 3.0 * support(E, u), 1e-12);
  }
}

TEST(Support, PBallIsDualNorm) {
  std::mt19937_64 rng(3);
  const double p = 3.0, q = 1.5;
  const auto P = p_ball_smooth(3, p);
  for (int i = 0; i < 30; ++i) {
    const Vec u = random_unit(3, rng);
    const double dual = std::pow(u.array().abs().pow(q).sum(), 1.0 / q);
    EXPECT_NEAR(support(P, u), dual, 1e-12);
  }
}

TEST(Volume, ClosedForms) {
  EXPECT_NEAR(volume(cube(4)), 16.0, 1e-12);
  EXPECT_NEAR(volume(cross_polytope(3)), 8.0 / 6.0, 1e-13);
  EXPECT_NEAR(volume(ball(3)), 4 * kPi / 3, 1e-13);
  EXPECT_NEAR(volume(ellipsoid({2.0, 0.5, 3.0})), 4 * kPi, 1e-12);
  for (double p : {1.5, 3.0, 4.0}) {
    for (int n : {2, 3}) {
      const double expect = std::pow(2 * std::tgamma(1 + 1 / p), n) / std::tgamma(1 + n / p);
      EXPECT_NEAR(volume(p_ball_smooth(n, p)), expect, 1e-12) << p;
    }
  }
  // Regular simplex with unit circumradius in the plane: 3√3/4.
  EXPECT_NEAR(volume(regular_simplex(2)), 3 * std::sqrt(3.0) / 4, 1e-13);
}

TEST(Volume, CurvatureRouteAgreesWithClosedForm) {
  // Strip the closed form so volume falls back to (1/n)∫h·f.
  const auto P = p_ball_smooth(2, 4.0);
  SmoothBody s = *P.smooth();
  s.volume.reset();
  s.family = SmoothFamily::custom;
  const ConvexBody custom(s, "custom");
  EXPECT_NEAR(volume(custom), volume(P), 1e-6 * volume(P));
}

TEST(Polar, CubeIsCrossAndBallInverts) {
  for (int n : {2, 3}) {
    const auto P = polar(cube(n));
    ASSERT_TRUE(P.polytope());
    EXPECT_NEAR(volume(P), volume(cross_polytope(n)), 1e-12);
  }
  const auto B = polar(ball(3, 2.0));
  EXPECT_NEAR(support(B, Vec::Unit(3, 0)), 0.5, 1e-14);
  const auto E = polar(ellipsoid({2.0, 0.5}));
  EXPECT_NEAR(support(E, Vec::Unit(2, 0)), 0.5, 1e-14);
  EXPECT_NEAR(support(E, Vec::Unit(2, 1)), 2.0, 1e-14);
}

TEST(Polar, RadialTimesPolarSupportIsOne) {
  std::mt19937_64 rng(4);
  const auto& q = default_quadrature(2);
  for (const auto& K : {cube(2), regular_simplex(2), p_ball_smooth(2, 3.0), ellipsoid({3.0, 0.5})}) {
    const auto P = polar(K, q);
    for (int i = 0; i < 20; ++i) {
      const Vec u = random_unit(2, rng);
      EXPECT_NEAR(radial(K, u, q) * support(P, u), 1.0, 1e-9) << K.name();
    }
  }
}

TEST(Transform, VolumeScalesWithDeterminant) {
  Mat T(3, 3);
  T << 1, 0.5, 0, 0, 2, 0.1, 0.3, 0, 0.7;
  const double det = std::abs(T.determinant());
  for (const auto& K : {cube(3), regular_simplex(3), ellipsoid({1.0, 2.0, 0.5})}) {
    EXPECT_NEAR(volume(linear_transform(K, T)), det * volume(K), 1e-10 * det * volume(K)) << K.name();
  }
  const auto S = scaled(p_ball_smooth(3, 4.0), 2.0);
  EXPECT_NEAR(volume(S), 8.0 * volume(p_ball_smooth(3, 4.0)), 1e-10);
  EXPECT_EQ(S.smooth()->family, SmoothFamily::pball);
}

TEST(Symmetry, Detection) {
  const auto& q = default_quadrature(3);
  EXPECT_TRUE(is_origin_symmetric(cube(3), q));
  EXPECT_TRUE(is_origin_symmetric(random_symmetric_polytope(3, 8, 5), q));
  EXPECT_TRUE(is_origin_symmetric(p_ball_smooth(3, 1.5), q));
  EXPECT_FALSE(is_origin_symmetric(regular_simplex(3), q));
  EXPECT_FALSE(is_origin_symmetric(random_polytope(3, 12, 5), q));
}

TEST(Generators, SimplexAndRandomPolytopes) {
  for (int n = 2; n <= 6; ++n) {
    const auto S = regular_simplex(n);
    ASSERT_EQ(S.polytope()->vertices().size(), static_cast<std::size_t>(n + 1));
    Vec c = Vec::Zero(n);
    for (const auto& v : S.polytope()->vertices()) {
      EXPECT_NEAR(v.norm(), 1.0, 1e-13);
      c += v;
    }
    EXPECT_NEAR(c.norm(), 0.0, 1e-13);
  }
  const auto R = random_polytope(3, 12, 9);
  EXPECT_NEAR(R.polytope()->hull().centroid().norm(), 0.0, 1e-12);
  const auto a = random_symmetric_polytope(3, 8, 11);
  const auto b = random_symmetric_polytope(3, 8, 11);
  EXPECT_EQ(a.polytope()->vertex_matrix(), b.polytope()->vertex_matrix());
}

TEST(Errors, OriginOutsideAndDegenerate) {
  const auto C = cube(2);
  std::vector<Vec> shifted;
  for (const auto& v : C.polytope()->vertices()) shifted.push_back(v + Vec::Constant(2, 3.0));
  EXPECT_EQ(kind_of([&] { PolytopeV::from_points(shifted); }), ErrorKind::origin_not_interior);
  std::vector<Vec> line{Vec::Unit(2, 0), -Vec::Unit(2, 0), 2 * Vec::Unit(2, 0)};
  EXPECT_EQ(kind_of([&] { PolytopeV::from_points(line); }), ErrorKind::degeneracy);
  Mat A(2, 2);
  A << 1, 0, 0, -1;
  EXPECT_EQ(kind_of([&] { Ellipsoid::make(Vec::Zero(2), A); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([&] { p_ball_smooth(2, 1.0); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([&] { support(cube(2), Vec::Zero(3)); }), ErrorKind::invalid_argument);
}

TEST(Errors, SupportValuesRejectNonPositive) {
  Mat A = Mat::Identity(2, 2);
  const ConvexBody E(Ellipsoid::make((Vec(2) << 0.0, 1.5).finished(), A));
  Mat dirs(2, 1);
  dirs << 0.0, -1.0;
  EXPECT_EQ(kind_of([&] { support_values(E, dirs); }), ErrorKind::origin_not_interior);
}
