#include "convexlab/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier summation; the order of terms is fixed so results are reproducible.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Grading map ψ on [0,1] with ψ'(s) = (128/35)·sin⁸(πs). ψ(s) for s ≤ 1/2 is
// integrated with Gauss-Legendre so the tiny values near 0 keep full relative
// precision; the upper half uses ψ(s) = 1 − ψ(1−s).
double grading_density(double s) {
  const double v = std::sin(kPi * s);
  const double v2 = v * v;
  const double v4 = v2 * v2;
  return 128.0 / 35.0 * v4 * v4;
}

double grading_lower(double s) {
  // 20-point Gauss-Legendre on [0, s]; the integrand is a smooth
  // trigonometric polynomial on that interval.
  static constexpr double x[10] = {
      0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
      0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
      0.9639719272779138, 0.9931285991850949};
  static constexpr double w[10] = {
      0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
      0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
      0.0406014298003869, 0.0176140071391521};
  const double half = 0.5 * s;
  double acc = 0.0;
  for (int i = 0; i < 10; ++i) {
    acc += w[i] * (grading_density(half * (1.0 + x[i])) + grading_density(half * (1.0 - x[i])));
  }
  return acc * half;
}

struct GradedPoint {
  double lower;  // ψ(s)
  double upper;  // 1 − ψ(s)
  double weight; // ψ'(s)/m
};

std::vector<GradedPoint> graded_axis(int m) {
  std::vector<GradedPoint> pts(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double s = (k + 0.5) / m;
    GradedPoint p;
    if (s <= 0.5) {
      p.lower = grading_lower(s);
      p.upper = 1.0 - p.lower;
    } else {
      p.upper = grading_lower(1.0 - s);
      p.lower = 1.0 - p.upper;
    }
    p.weight = grading_density(s) / m;
    pts[static_cast<std::size_t>(k)] = p;
  }
  return pts;
}

}  // namespace

double log_unit_ball_volume(int n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "unit ball dimension must be >= 1");
  return 0.5 * n * std::log(kPi) - std::lgamma(0.5 * n + 1.0);
}

double unit_ball_volume(int n) { return std::exp(log_unit_ball_volume(n)); }

double sphere_area(int n) { return n * unit_ball_volume(n); }

std::string scheme_name(QuadratureScheme scheme) {
  switch (scheme) {
    case QuadratureScheme::trapezoid: return "trapezoid";
    case QuadratureScheme::fibonacci: return "fibonacci";
    case QuadratureScheme::monte_carlo: return "monte-carlo";
    case QuadratureScheme::graded: return "graded";
  }
  return "unknown";
}

double SphereQuadrature::total_weight() const {
  CompensatedSum s;
  for (double w : weights) s.add(w);
  return s.value();
}

SphereQuadrature SphereQuadrature::scaled(double c) const {
  SphereQuadrature out = *this;
  for (double& w : out.weights) w *= c;
  return out;
}

std::string SphereQuadrature::descriptor() const {
  std::ostringstream os;
  os << scheme_name(scheme) << ":n=" << dim << ":res=" << resolution;
  if (scheme == QuadratureScheme::monte_carlo) os << ":seed=" << seed;
  return os.str();
}

SphereQuadrature build_quadrature(int dim, int resolution, std::uint64_t seed) {
  if (dim < 2) fail(ErrorKind::invalid_argument, "quadrature dimension must be >= 2");
  if (resolution < 4) fail(ErrorKind::invalid_argument, "quadrature resolution must be >= 4");

  SphereQuadrature q;
  q.dim = dim;
  q.resolution = resolution;
  q.seed = seed;
  q.nodes.resize(dim, resolution);
  const double area = sphere_area(dim);
  q.weights.assign(static_cast<std::size_t>(resolution), area / resolution);

  if (dim == 2) {
    q.scheme = QuadratureScheme::trapezoid;
    for (int k = 0; k < resolution; ++k) {
      const double t = 2.0 * kPi * k / resolution;
      q.nodes(0, k) = std::cos(t);
      q.nodes(1, k) = std::sin(t);
    }
  } else if (dim == 3) {
    q.scheme = QuadratureScheme::fibonacci;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < resolution; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / resolution;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * k;
      q.nodes(0, k) = r * std::cos(phi);
      q.nodes(1, k) = r * std::sin(phi);
      q.nodes(2, k) = z;
    }
  } else {
    q.scheme = QuadratureScheme::monte_carlo;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < resolution; ++k) {
      double norm = 0.0;
      do {
        for (int i = 0; i < dim; ++i) q.nodes(i, k) = gauss(rng);
        norm = q.nodes.col(k).norm();
      } while (norm < 1e-12);
      q.nodes.col(k) /= norm;
    }
  }
  return q;
}

SphereQuadrature build_graded_quadrature(int dim, int resolution) {
  if (resolution < 4) fail(ErrorKind::invalid_argument, "quadrature resolution must be >= 4");
  SphereQuadrature q;
  q.dim = dim;
  q.resolution = resolution;
  q.scheme = QuadratureScheme::graded;
  const double quarter = 0.5 * kPi;

  if (dim == 2) {
    const int m = std::max(1, resolution / 4);
    const auto axis = graded_axis(m);
    q.nodes.resize(2, 4 * m);
    q.weights.resize(static_cast<std::size_t>(4 * m));
    int col = 0;
    for (int quadrant = 0; quadrant < 4; ++quadrant) {
      for (const auto& p : axis) {
        // Angle within the quadrant is (π/2)·ψ; cos uses the complement so
        // both coordinates keep relative precision near the axes.
        const double c = std::sin(quarter * p.upper);
        const double s = std::sin(quarter * p.lower);
        double x = c, y = s;
        switch (quadrant) {
          case 1: x = -s; y = c; break;
          case 2: x = -c; y = -s; break;
          case 3: x = s; y = -c; break;
          default: break;
        }
        q.nodes(0, col) = x;
        q.nodes(1, col) = y;
        q.weights[static_cast<std::size_t>(col)] = quarter * p.weight;
        ++col;
      }
    }
    return q;
  }
  if (dim == 3) {
    const int m = std::max(2, static_cast<int>(std::lround(std::sqrt(resolution / 8.0))));
    const auto axis = graded_axis(m);
    q.nodes.resize(3, 8 * m * m);
    q.weights.resize(static_cast<std::size_t>(8 * m * m));
    int col = 0;
    for (int octant = 0; octant < 8; ++octant) {
      const double sx = (octant & 1) ? -1.0 : 1.0;
      const double sy = (octant & 2) ? -1.0 : 1.0;
      const double sz = (octant & 4) ? -1.0 : 1.0;
      for (const auto& polar : axis) {
        const double sin_phi = std::sin(quarter * polar.lower);
        const double cos_phi = std::sin(quarter * polar.upper);
        for (const auto& az : axis) {
          const double sin_t = std::sin(quarter * az.lower);
          const double cos_t = std::sin(quarter * az.upper);
          q.nodes(0, col) = sx * sin_phi * cos_t;
          q.nodes(1, col) = sy * sin_phi * sin_t;
          q.nodes(2, col) = sz * cos_phi;
          q.weights[static_cast<std::size_t>(col)] =
              quarter * quarter * polar.weight * az.weight * sin_phi;
          ++col;
        }
      }
    }
    return q;
  }
  fail(ErrorKind::invalid_argument, "graded quadrature is available for n = 2, 3 only");
}

int default_resolution(int dim) {
  if (dim == 2) return 2048;
  if (dim == 3) return 8192;
  return 200000;
}

const SphereQuadrature& default_quadrature(int dim) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<SphereQuadrature>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[dim];
  if (!slot) slot = std::make_unique<SphereQuadrature>(build_quadrature(dim, default_resolution(dim)));
  return *slot;
}

std::shared_ptr<const SphereQuadrature> cached_graded_quadrature(int dim, int resolution) {
  static std::mutex m;
  static std::map<std::pair<int, int>, std::shared_ptr<const SphereQuadrature>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[{dim, resolution}];
  if (!slot) slot = std::make_shared<const SphereQuadrature>(build_graded_quadrature(dim, resolution));
  return slot;
}

double integrate(const SphereQuadrature& q, const std::function<double(const VecRef&)>& f) {
  CompensatedSum s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double v = f(q.node(i));
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "integrand is not finite at node " << i << " (" << q.node(i).transpose() << ")";
      fail(ErrorKind::numeric_domain, os.str());
    }
    s.add(q.weights[i] * v);
  }
  return s.value();
}

double weighted_sum(const std::vector<double>& weights, const std::vector<double>& values) {
  CompensatedSum s;
  const std::size_t n = std::min(weights.size(), values.size());
  for (std::size_t i = 0; i < n; ++i) s.add(weights[i] * values[i]);
  return s.value();
}

}  // namespace convexlab
