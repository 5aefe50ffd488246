#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "convexlab/bodies.hpp"

namespace convexlab {

// exp(A) for traceless A by scaling and squaring with a truncated Taylor
// series; det exp(A) = 1.
Mat sl_exp(const Mat& A);

// Traceless matrix from n²−1 coordinates: off-diagonal entries row by row,
// then diag(e_k − e_{k+1}).
Mat traceless_from_coordinates(const Vec& x, int n);

struct PositionConfig {
  int restarts = 8;
  std::uint64_t seed = kDefaultSeed;
  int evaluations_per_coordinate = 400;
  double box = 3.0;  // ‖A‖_F bound
};

struct PositionResult {
  std::string body;
  int dim = 0;
  Mat T_star;
  double M_star = 0.0;
  double omega_M = 0.0;
  double volume_product = 0.0;
  double M_identity = 0.0;
  int evaluations = 0;
  std::vector<double> best_per_restart;
  // Best value after every simplex iteration, over all restarts.
  std::vector<double> trace;
  bool low_confidence = false;
};

PositionResult optimize_M(const ConvexBody& K, const PositionConfig& config, const SphereQuadrature& q);
PositionResult optimize_M(const ConvexBody& K, const PositionConfig& config = {});

struct DegeneracyRow {
  double aspect = 1.0;
  double M = 0.0;
};

// M(K_a, I) for the volume-preserving ellipsoids with axes (a, 1/a, 1, …).
std::vector<DegeneracyRow> degeneracy_experiment(int n, const std::vector<double>& aspects,
                                                 std::uint64_t seed = kDefaultSeed);

struct IsotropicReport {
  std::string body;
  Mat T;
  Mat moment;  // ∫u uᵀ h_{TK}²(u) dμ
  double deviation = 0.0;           // ‖moment − (tr/n)·I‖_F
  double relative_deviation = 0.0;  // deviation / ‖(tr/n)·I‖_F
  std::string reading = "h2-moment";
};

IsotropicReport isotropic_probe(const ConvexBody& K, const Mat& T, const SphereQuadrature& q);
// Probe at the optimizer's T_star.
IsotropicReport isotropic_probe(const ConvexBody& K, const PositionConfig& config = {});

nlohmann::json to_json(const PositionResult& r);
nlohmann::json to_json(const IsotropicReport& r);
nlohmann::json matrix_json(const Mat& m);

}  // namespace convexlab
