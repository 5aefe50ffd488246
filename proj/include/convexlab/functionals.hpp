#pragma once

#include <utility>

#include "convexlab/bodies.hpp"
#include "convexlab/measures.hpp"
#include "convexlab/records.hpp"

namespace convexlab {

// Vol(K°): exact for polytopes with facets and centred ellipsoids, otherwise
// (1/n)∫h_K^{−n} dμ.
double polar_volume(const ConvexBody& K, const SphereQuadrature& q);
double polar_volume(const ConvexBody& K);

double volume_product(const ConvexBody& K, const SphereQuadrature& q);
double volume_product(const ConvexBody& K);

// Quantities shared by the log-Minkowski functionals of a pair (K, L), all
// evaluated on the atoms or nodes of dS_L. Normalizations use the discrete
// totals, so Jensen-type inequalities between them hold exactly.
struct PairData {
  int dim = 0;
  SphereMeasure surface;   // dS_L
  Vec hK, hL;              // supports on the measure's directions
  Vec log_ratio;           // ln(h_K/h_L)
  double vol_L = 0.0;      // (1/n)Σ h_L dS_L
  double V1 = 0.0;         // (1/n)Σ h_K dS_L
  bool exact = false;      // L atomic
};

PairData pair_data(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);

// ∫ln(h_K/h_L) d̄v_L
double log_minkowski_L(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
double log_minkowski_L(const ConvexBody& K, const ConvexBody& L);
// ∫ln(h_K/h_L) d̄v₁
double log_minkowski_1(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
double log_minkowski_1(const ConvexBody& K, const ConvexBody& L);

ChainRecord entropy_chain(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
ChainRecord entropy_chain(const ConvexBody& K, const ConvexBody& L);

// ∫ln(h_K/h_L)d̄v₁ ≥ ln(V₁/Vol L) ≥ (1/n)ln(Vol K/Vol L).
struct Prop11Result {
  ChainRecord chain;
  InequalityRecord first;   // upper ≥ middle
  InequalityRecord second;  // middle ≥ (1/n)ln(VolK/VolL)
  bool first_tight = false;
  // All three terms equal within tolerance.
  bool equality = false;
};

Prop11Result check_prop11(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
Prop11Result check_prop11(const ConvexBody& K, const ConvexBody& L);

enum class GardnerVariant {
  volume_ratio,  // rhs = (1/n)(VolK/VolL)^{1/n}ln(VolK/VolL), needs L ⊆ K
  mixed_volume,  // rhs = (V₁/VolL)ln(V₁/VolL)
};

// lhs = ∫(h_K/h_L)ln(h_K/h_L) d̄v_L
InequalityRecord gardner_functional(const ConvexBody& K, const ConvexBody& L, GardnerVariant variant,
                                    const SphereQuadrature& q);
InequalityRecord gardner_functional(const ConvexBody& K, const ConvexBody& L, GardnerVariant variant);

// h_L ≤ h_K on the atoms or nodes of dS_L, the quadrature nodes and the facet
// normals of K.
bool support_contained(const ConvexBody& L, const ConvexBody& K, const SphereQuadrature& q);

struct HolderLimit {
  double approx = 0.0;
  double target = 0.0;
  double error() const { return std::abs(approx - target); }
};

// approx = [(1/V₁)∫(h_K/h_L)^{p/(p+n)} dv_L]^{p+n},
// target = exp[−(n/V₁)∫(h_K/h_L)ln(h_K/h_L) dv_L].
HolderLimit holder_limit(const ConvexBody& K, const ConvexBody& L, double p, const SphereQuadrature& q);
HolderLimit holder_limit(const ConvexBody& K, const ConvexBody& L, double p);

// Ω(L) = ∫f_L^{n/(n+1)} dμ; polytopes raise unsupported-representation.
double affine_surface_area(const ConvexBody& L, const SphereQuadrature& q);
double affine_surface_area(const ConvexBody& L);

// ∫h_K f_L dμ ≥ (∫h_K^{−n}dμ)^{−1/n}(∫f_L^{n/(n+1)}dμ)^{(n+1)/n}
InequalityRecord reverse_holder_check(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
InequalityRecord reverse_holder_check(const ConvexBody& K, const ConvexBody& L);

// Vol(K)Vol(K°) ≥ n^{−(n+1)}·Ω(L)^{n+1}/Vol(L)^{n−1}·(VolK/VolL)/exp(n∫ln(h_K/h_L)d̄v₁)
InequalityRecord prop21_bound(const ConvexBody& K, const ConvexBody& L, const SphereQuadrature& q);
InequalityRecord prop21_bound(const ConvexBody& K, const ConvexBody& L);

// "cor22": Vol(K)Vol(K°) ≥ n^{−(n+1)}·Ω(K)^{n+1}/Vol(K)^{n−1};
// "affine-isoperimetric": n^{n+1}ωₙ² ≥ Ω(K)^{n+1}/Vol(K)^{n−1}.
std::pair<InequalityRecord, InequalityRecord> corollary22_bound(const ConvexBody& K, const SphereQuadrature& q);
std::pair<InequalityRecord, InequalityRecord> corollary22_bound(const ConvexBody& K);

// w(K) = ∫h_K dμ and ∫h_K² dμ with the quadrature's weights. Planar polygons
// and ellipsoids use exact integrals rescaled by Σweights/(n·ωₙ).
double mean_width_w(const ConvexBody& K, const SphereQuadrature& q);
double mean_width_w(const ConvexBody& K);
double second_moment(const ConvexBody& K, const SphereQuadrature& q);
double second_moment(const ConvexBody& K);

// Vol(K)·w(TK)ⁿ/(∫h_{TK}² dμ)ⁿ for T ∈ SL(n).
double M_functional(const ConvexBody& K, const Mat& T, const SphereQuadrature& q);
double M_functional(const ConvexBody& K, const Mat& T);

// Fast evaluation of T ↦ (w(TK), ∫h_{TK}²) without rebuilding TK.
class MomentEvaluator {
 public:
  MomentEvaluator(const ConvexBody& K, const SphereQuadrature& q);
  std::pair<double, double> moments(const Mat& T) const;
  int dim() const { return dim_; }

 private:
  enum class Path { polygon, ellipsoid, vertices, generic };
  int dim_;
  Path path_;
  const SphereQuadrature* q_;
  ConvexBody body_;
  Mat vertices_;  // columns, for the polygon and vertex paths
};

}  // namespace convexlab
