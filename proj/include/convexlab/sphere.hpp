#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "convexlab/linalg.hpp"

namespace convexlab {

inline constexpr std::uint64_t kDefaultSeed = 24137;

// Volume of the Euclidean unit ball, π^{n/2}/Γ(n/2+1), evaluated through
// log-Gamma so that it stays finite for large n.
double unit_ball_volume(int n);
double log_unit_ball_volume(int n);
// Total surface measure of S^{n-1}, n·ωₙ.
double sphere_area(int n);

enum class QuadratureScheme { trapezoid, fibonacci, monte_carlo, graded };

std::string scheme_name(QuadratureScheme scheme);

// Nodes and positive weights on S^{n-1}. Weights carry the unnormalized
// surface measure, so they sum to n·ωₙ; normalized measures divide at the
// point of use.
struct SphereQuadrature {
  int dim = 0;
  int resolution = 0;
  std::uint64_t seed = 0;
  QuadratureScheme scheme = QuadratureScheme::trapezoid;
  Mat nodes;  // dim × size, unit columns
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  auto node(std::size_t i) const { return nodes.col(static_cast<Eigen::Index>(i)); }
  double total_weight() const;
  // Same nodes, every weight multiplied by c.
  SphereQuadrature scaled(double c) const;
  std::string descriptor() const;
};

// n=2: uniform angular trapezoid θ_k = 2πk/N.
// n=3: Fibonacci lattice with equal weights.
// n≥4: seeded Gaussian-normalized Monte Carlo nodes with equal weights.
SphereQuadrature build_quadrature(int dim, int resolution, std::uint64_t seed = kDefaultSeed);

// Quadrature whose nodes cluster towards the coordinate hyperplanes, for
// integrands that are singular there (curvature functions of p-balls).
// Each quadrant (n=2) or octant (n=3, spherical coordinates) is covered by a
// midpoint grid in a parameter s with angle = (π/2)·ψ(s), ψ' ∝ sin⁸(πs).
// Node count is close to `resolution`.
SphereQuadrature build_graded_quadrature(int dim, int resolution);

int default_resolution(int dim);

// Process-wide cached quadratures. Returned references stay valid for the
// lifetime of the program.
const SphereQuadrature& default_quadrature(int dim);
std::shared_ptr<const SphereQuadrature> cached_graded_quadrature(int dim, int resolution);

// Σᵢ weightᵢ·f(nodeᵢ), with compensated summation. A non-finite value of f
// raises numeric-domain naming the node.
double integrate(const SphereQuadrature& q, const std::function<double(const VecRef&)>& f);

// Compensated sum of wᵢ·vᵢ.
double weighted_sum(const std::vector<double>& weights, const std::vector<double>& values);

}  // namespace convexlab
