#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "convexlab/bodies.hpp"
#include "convexlab/ellipsoids.hpp"
#include "convexlab/errors.hpp"

using namespace convexlab;

namespace {

constexpr double kPi = std::numbers::pi;

double omega(int n) { return std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1.0); }

std::vector<Vec> columns(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec v(static_cast<Eigen::Index>(r.size()));
    int k = 0;
    for (double x : r) v[k++] = x;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Mvee, Square) {
  const auto r = mvee(columns({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  EXPECT_NEAR((r.ellipsoid.shape() - 0.5 * Mat::Identity(2, 2)).norm(), 0.0, 1e-6);
  EXPECT_NEAR(r.ellipsoid.center().norm(), 0.0, 1e-7);
  EXPECT_LE(r.residual, kMveeTolerance);
}

TEST(Mvee, Diamond) {
  const auto r = mvee(columns({{1, 0}, {-1, 0}, {0, 2}, {0, -2}}), kMveeTolerance, true);
  Mat expect(2, 2);
  expect << 1, 0, 0, 0.25;
  EXPECT_NEAR((r.ellipsoid.shape() - expect).norm(), 0.0, 1e-6);
}

TEST(Mvee, TriangleGivesCircumcircle) {
  const auto S = regular_simplex(2);
  const auto r = mvee(S.polytope()->vertices());
  EXPECT_NEAR((r.ellipsoid.shape() - Mat::Identity(2, 2)).norm(), 0.0, 1e-6);
}

TEST(Mvee, RandomPointsAreEnclosedAndTouched) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int n : {2, 3, 4}) {
    std::vector<Vec> pts;
    for (int i = 0; i < 60; ++i) {
      Vec p(n);
      for (int k = 0; k < n; ++k) p[k] = g(rng) * (k + 1);
      pts.push_back(p);
    }
    const auto r = mvee(pts);
    double worst = 0;
    for (const auto& p : pts) worst = std::max(worst, r.ellipsoid.gauge(p));
    EXPECT_NEAR(worst, 1.0, 1e-12);
    EXPECT_LE(r.residual, kMveeTolerance);
    // Weights form a probability vector; the centre is their barycentre.
    EXPECT_NEAR(r.weights.sum(), 1.0, 1e-10);
  }
}

TEST(Mvee, RejectsDegenerateInput) {
  EXPECT_THROW(mvee(columns({{0, 0}, {1, 1}, {2, 2}})), Error);
  EXPECT_THROW(mvee(columns({{1, 0}})), Error);
}

TEST(Evr, CubeBallAndExtremes) {
  for (int n : {2, 3}) {
    const double cube_evr_n = std::pow(2.0, n) / (omega(n) * std::pow(n, n / 2.0));
    EXPECT_NEAR(std::pow(exterior_volume_ratio(cube(n)).evr, n), cube_evr_n, 1e-6);
    EXPECT_NEAR(exterior_volume_ratio(ball(n)).evr, 1.0, 1e-12);
    EXPECT_NEAR(exterior_volume_ratio(ellipsoid(std::vector<double>(n, 0.7))).evr, 1.0, 1e-12);
  }
  const auto c = barthe_constants(3);
  EXPECT_NEAR(std::pow(exterior_volume_ratio(cross_polytope(3)).evr, 3), c.symmetric_evr_power, 1e-6);
  EXPECT_NEAR(std::pow(exterior_volume_ratio(regular_simplex(3)).evr, 3), c.general_evr_power, 1e-6);
}

TEST(Evr, AffineInvariant) {
  Mat T(3, 3);
  T << 1, 0.4, 0, 0, 2, 0.3, 0.2, 0, 0.6;
  const auto K = random_polytope(3, 15, 8);
  EXPECT_NEAR(exterior_volume_ratio(linear_transform(K, T)).evr, exterior_volume_ratio(K).evr, 1e-6);
}

TEST(Barthe, FormulasAndPlanarValues) {
  for (int n = 2; n <= 10; ++n) {
    const auto c = barthe_constants(n);
    const double g = std::tgamma(n / 2.0 + 1.0);
    const double nf = std::tgamma(n + 1.0);
    EXPECT_NEAR(c.symmetric_evr_power, std::pow(2.0, n) * g / (nf * std::pow(kPi, n / 2.0)), 1e-12);
    EXPECT_NEAR(c.symmetric, std::pow(2.0, n) * omega(n) / nf, 1e-12);
    EXPECT_NEAR(c.general_evr_power, std::pow(n + 1.0, (n + 1.0) / 2) * g / (nf * std::pow(n * kPi, n / 2.0)), 1e-12);
    EXPECT_NEAR(c.general, c.general_evr_power * omega(n) * omega(n), 1e-12);
    EXPECT_LT(c.general, c.symmetric);
  }
  EXPECT_NEAR(barthe_constants(2).symmetric, 2 * kPi, 1e-12);
  EXPECT_NEAR(barthe_constants(2).general, 3 * std::sqrt(3.0) * kPi / 4, 1e-12);
  EXPECT_THROW(barthe_constants(1), Error);
}

TEST(John, ContainmentHolds) {
  for (const auto& K : {cube(3), regular_simplex(3), random_polytope(3, 12, 2), p_ball_smooth(2, 4.0)}) {
    const auto [outer, inner] = john_containment_check(K);
    EXPECT_TRUE(outer.pass) << K.name();
    EXPECT_TRUE(inner.pass) << K.name();
  }
}

TEST(VolumeProductBound, StrictOffEllipsoidsAndTightOnThem) {
  for (const auto& K : {cube(2), cross_polytope(3), regular_simplex(3), p_ball_smooth(3, 3.0)}) {
    const auto r = theorem11_check(K);
    EXPECT_TRUE(r.strict()) << K.name() << " gap " << r.gap;
    EXPECT_EQ(r.has_flag("symmetric"), K.name() != "simplex");
  }
  const auto b = theorem11_check(ellipsoid({2.0, 0.5, 1.0}));
  EXPECT_TRUE(b.pass);
  EXPECT_TRUE(b.has_flag("equality-boundary"));
}
