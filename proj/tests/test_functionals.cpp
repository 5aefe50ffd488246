#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "convexlab/bodies.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/functionals.hpp"

using namespace convexlab;

namespace {

constexpr double kPi = std::numbers::pi;

// Fine trapezoid rule on S¹ for the oracles below.
template <class F>
double circle_integral(F f, int m = 200000) {
  double s = 0;
  for (int k = 0; k < m; ++k) {
    const double t = 2 * kPi * k / m;
    s += f((Vec(2) << std::cos(t), std::sin(t)).finished());
  }
  return s * 2 * kPi / m;
}

}  // namespace

TEST(VolumeProduct, KnownValues) {
  EXPECT_NEAR(volume_product(cube(2)), 8.0, 1e-12);
  EXPECT_NEAR(volume_product(cube(3)), 32.0 / 3, 1e-12);
  EXPECT_NEAR(volume_product(ball(2)), kPi * kPi, 1e-9);
  EXPECT_NEAR(volume_product(ellipsoid({5.0, 0.3, 2.0})), std::pow(4 * kPi / 3, 2), 1e-9);
  // Affine invariance.
  Mat T(2, 2);
  T << 2, 1, 0, 0.5;
  EXPECT_NEAR(volume_product(linear_transform(regular_simplex(2), T)), volume_product(regular_simplex(2)), 1e-10);
  EXPECT_NEAR(polar_volume(ball(3, 2.0)), 4 * kPi / 3 / 8, 1e-8);
}

TEST(LogMinkowski, HomotheticPairsGiveLogScale) {
  for (const auto& L : {cube(2), regular_simplex(3), p_ball_smooth(2, 3.0), ellipsoid({2.0, 0.5})}) {
    const double lambda = 1.7;
    const auto K = scaled(L, lambda);
    EXPECT_NEAR(log_minkowski_L(K, L), std::log(lambda), 1e-9) << L.name();
    EXPECT_NEAR(log_minkowski_1(K, L), std::log(lambda), 1e-9) << L.name();
    const auto p = check_prop11(K, L);
    EXPECT_TRUE(p.equality);
  }
}

TEST(LogMinkowski, SquareAgainstFacetSums) {
  // L = [−1,1]²: four facets of length 2 with h_L = 1, so dv̄_L puts mass 1/4
  // on ±e_i and V₁ = Σ h_K(±e_i).
  const auto L = cube(2);
  const auto K = ellipsoid({3.0, 0.5});
  const double h[4] = {3.0, 3.0, 0.5, 0.5};
  double lower = 0, v1 = 0, upper = 0;
  for (double x : h) {
    lower += std::log(x) / 4;
    v1 += x;
  }
  for (double x : h) upper += x * std::log(x) / v1;
  const auto c = entropy_chain(K, L);
  EXPECT_NEAR(c.lower, lower, 1e-13);
  EXPECT_NEAR(c.upper, upper, 1e-13);
  EXPECT_NEAR(c.middle, std::log(v1 / 4), 1e-13);
  EXPECT_TRUE(c.pass());
  const auto g = gardner_functional(K, L, GardnerVariant::mixed_volume);
  EXPECT_NEAR(g.lhs, upper * v1 / 4, 1e-13);
  EXPECT_NEAR(g.rhs, v1 / 4 * std::log(v1 / 4), 1e-13);
}

TEST(LogMinkowski, ChainHoldsOnMixedPairs) {
  const auto L = ball(2);
  const auto K = cube(2);
  const auto c = entropy_chain(K, L);
  EXPECT_TRUE(c.pass());
  EXPECT_LT(c.lower, c.middle);
  EXPECT_LT(c.middle, c.upper);
  // ∫ln|u|₁ dθ/2π, computed independently.
  const double lower = circle_integral([](const Vec& u) { return std::log(u.lpNorm<1>()); }) / (2 * kPi);
  EXPECT_NEAR(c.lower, lower, 1e-6);
  const auto p = check_prop11(K, L);
  EXPECT_TRUE(p.first.pass && p.second.pass);
}

TEST(Gardner, VolumeVariantNeedsContainment) {
  const auto r = gardner_functional(scaled(cube(2), 2.0), cube(2), GardnerVariant::volume_ratio);
  EXPECT_TRUE(r.at_boundary());
  try {
    gardner_functional(cube(2), scaled(cube(2), 2.0), GardnerVariant::volume_ratio);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
  EXPECT_TRUE(support_contained(ball(2), cube(2), default_quadrature(2)));
  EXPECT_FALSE(support_contained(cube(2), ball(2), default_quadrature(2)));
}

TEST(Holder, ConvergesLikeOneOverP) {
  const auto K = cube(2);
  const auto L = ball(2);
  const double e3 = holder_limit(K, L, 1e3).error();
  const double e4 = holder_limit(K, L, 1e4).error();
  const double e5 = holder_limit(K, L, 1e5).error();
  EXPECT_GT(e3 / e4, 8.0);
  EXPECT_LT(e3 / e4, 12.0);
  EXPECT_GT(e4 / e5, 8.0);
  EXPECT_LT(e4 / e5, 12.0);
  const auto h = holder_limit(scaled(L, 2.0), L, 1e4);
  EXPECT_NEAR(h.error(), 0.0, 1e-12 * h.target);
  EXPECT_NEAR(h.target, 0.25, 1e-12);
}

TEST(AffineSurfaceArea, BallsAndEllipses) {
  EXPECT_NEAR(affine_surface_area(ball(2)), 2 * kPi, 1e-9);
  EXPECT_NEAR(affine_surface_area(ball(3)), 4 * kPi, 1e-8);
  const auto E = ellipsoid({3.0, 1.0 / 3.0});
  const auto [first, second] = corollary22_bound(E);
  EXPECT_NEAR(second.rhs, 8 * kPi * kPi, 1e-6);
  EXPECT_TRUE(first.at_boundary());
  try {
    affine_surface_area(cube(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_representation);
  }
}

TEST(AffineSurfaceArea, PBallsAreStrict) {
  for (double p : {1.5, 4.0}) {
    const auto [first, second] = corollary22_bound(p_ball_smooth(2, p));
    EXPECT_TRUE(first.strict()) << p;
    EXPECT_TRUE(second.strict()) << p;
  }
}

TEST(AffineAreaBound, EqualityForBallsAndValueForEllipse) {
  const auto r = prop21_bound(ball(3), ball(3));
  EXPECT_NEAR(r.lhs, r.rhs, 1e-6 * r.rhs);
  const auto K = ellipsoid({2.0, 0.5});
  const auto s = prop21_bound(K, ball(2));
  EXPECT_NEAR(s.lhs, kPi * kPi, 1e-9);
  // rhs = π²·exp(−2∫h ln h dθ / ∫h dθ) for L the unit disc.
  auto h = [](const Vec& u) { return std::sqrt(4 * u[0] * u[0] + 0.25 * u[1] * u[1]); };
  const double num = circle_integral([&](const Vec& u) { return h(u) * std::log(h(u)); });
  const double den = circle_integral(h);
  EXPECT_NEAR(s.rhs, kPi * kPi * std::exp(-2 * num / den), 1e-6);
  EXPECT_TRUE(s.strict());
}

TEST(ReverseHolder, HoldsWithEqualityForBall) {
  EXPECT_TRUE(reverse_holder_check(ball(2), ball(2)).at_boundary());
  EXPECT_TRUE(reverse_holder_check(cube(2), ball(2)).pass);
  EXPECT_TRUE(reverse_holder_check(regular_simplex(3), p_ball_smooth(3, 3.0)).pass);
}

TEST(MeanWidth, BallAndCube) {
  EXPECT_NEAR(mean_width_w(ball(3, 2.0)), 2 * 4 * kPi, 1e-8);
  EXPECT_NEAR(second_moment(ball(3, 2.0)), 4 * 4 * kPi, 1e-8);
  // ∫|u|₁ dθ = 8, ∫|u|₁² dθ = 2π + 4 on S¹.
  EXPECT_NEAR(mean_width_w(cube(2)), 8.0, 1e-12);
  EXPECT_NEAR(second_moment(cube(2)), 2 * kPi + 4, 1e-12);
}

TEST(MFunctional, ClosedFormsAndInvariance) {
  EXPECT_NEAR(M_functional(cube(2), Mat::Identity(2, 2)), 256.0 / std::pow(2 * kPi + 4, 2), 1e-12);
  EXPECT_NEAR(M_functional(ball(3), Mat::Identity(3, 3)), 4 * kPi / 3, 1e-8);
  Mat T(2, 2);
  T << 2, 0.3, 0, 0.5;
  const auto K = regular_simplex(2);
  EXPECT_NEAR(M_functional(K, T), M_functional(linear_transform(K, T), Mat::Identity(2, 2)), 1e-12);
  EXPECT_THROW(M_functional(K, 2 * Mat::Identity(2, 2)), Error);
  // Weight scaling leaves M unchanged.
  const auto q = default_quadrature(2).scaled(3.0);
  EXPECT_NEAR(M_functional(cube(2), Mat::Identity(2, 2), q), M_functional(cube(2), Mat::Identity(2, 2)), 1e-12);
}
