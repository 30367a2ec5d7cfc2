#pragma once

// Tensor densities u(theta) dtheta^W on the circle and the Schwarzian family built from
// the cocycle triple E, A, S.

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "circdiff/circle.hpp"
#include "circdiff/errors.hpp"
#include "circdiff/numerics.hpp"
#include "circdiff/projective_structure.hpp"

namespace circdiff {

// u(theta) dtheta^Weight. Holds grid samples and, when the coefficient is known in closed
// form, the exact rule; evaluation off the grid uses the rule or else the trigonometric
// interpolant of the samples.
template <int Weight>
class CircleTensor {
 public:
  using Rule = std::function<double(double)>;

  explicit CircleTensor(PeriodicSamples samples)
      : samples_(std::move(samples)),
        interp_(std::make_shared<FourierSeries>(fourier_analyze(samples_))) {}

  CircleTensor(std::size_t n, Rule exact)
      : samples_(PeriodicSamples::sample(n, exact)), exact_(std::move(exact)) {}

  static CircleTensor zero(std::size_t n = kDefaultGridSize) {
    return CircleTensor(n, [](double) { return 0.0; });
  }
  static CircleTensor constant(double value, std::size_t n = kDefaultGridSize) {
    return CircleTensor(n, [value](double) { return value; });
  }

  const PeriodicSamples& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool has_exact() const { return static_cast<bool>(exact_); }

  double operator()(double theta) const { return exact_ ? exact_(theta) : interp_->eval(theta); }
  double sup_norm() const { return samples_.max_abs(); }

  CircleTensor resampled(std::size_t n) const {
    const CircleTensor self = *this;
    return CircleTensor(n, [self](double t) { return self(t); });
  }

  CircleTensor operator+(const CircleTensor& o) const { return combine(o, 1.0); }
  CircleTensor operator-(const CircleTensor& o) const { return combine(o, -1.0); }
  CircleTensor scaled(double s) const {
    const CircleTensor self = *this;
    return CircleTensor(size(), [self, s](double t) { return s * self(t); });
  }

  // psi^* u = u(psi(theta)) psi'(theta)^Weight
  CircleTensor pullback(const CircleDiffeo& psi) const {
    const CircleTensor self = *this;
    return CircleTensor(size(), [self, psi](double t) {
      return self(psi(t)) * std::pow(psi.derivative(t, 1), Weight);
    });
  }

 private:
  CircleTensor combine(const CircleTensor& o, double sign) const {
    const CircleTensor a = *this;
    const CircleTensor b = o;
    return CircleTensor(std::max(size(), o.size()),
                        [a, b, sign](double t) { return a(t) + sign * b(t); });
  }

  PeriodicSamples samples_;
  Rule exact_;
  std::shared_ptr<const FourierSeries> interp_;
};

using PeriodicFunction = CircleTensor<0>;
using OneForm = CircleTensor<1>;
using QuadraticDifferential = CircleTensor<2>;

// Max over the samples of the larger grid of |a - b|, evaluating both pointwise.
template <int W>
double sup_distance(const CircleTensor<W>& a, const CircleTensor<W>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = PeriodicSamples::node(k, n);
    m = std::max(m, std::abs(a(t) - b(t)));
  }
  return m;
}

// Density underlying the Euclidean cocycle. Only the round density dtheta is supported.
enum class DensityChoice { UniformAngle };

// phi'''/phi' - 3/2 (phi''/phi')^2
QuadraticDifferential schwarzian_classical(const CircleDiffeo& d,
                                           std::size_t n = kDefaultGridSize);
// S(phi) + 1/2 (phi'^2 - 1)
QuadraticDifferential schwarzian_modified(const CircleDiffeo& d,
                                          std::size_t n = kDefaultGridSize);
// S(phi) + phi^* S(Phi) - S(Phi) = S(phi) + k (phi'^2 - 1), k the constant S(Phi).
QuadraticDifferential schwarzian_universal(const CircleDiffeo& d,
                                           const ProjectiveStructure& structure,
                                           std::size_t n = kDefaultGridSize);

// E(phi) = log phi'
PeriodicFunction cocycle_E(const CircleDiffeo& d, DensityChoice density = DensityChoice::UniformAngle,
                           std::size_t n = kDefaultGridSize);
// A(phi) = dE(phi) = phi''/phi' dtheta
OneForm cocycle_A(const CircleDiffeo& d, std::size_t n = kDefaultGridSize);
// A' - A^2/2 with A' taken spectrally from the samples of A; no closed-form rule.
QuadraticDifferential schwarzian_from_triple(const CircleDiffeo& d,
                                             std::size_t n = kDefaultGridSize);

// d/de at e = 0 of the universal Schwarzian of flow(xi, e): xi''' + 2k xi'.
QuadraticDifferential infinitesimal_schwarzian(const VectorFieldS1& xi,
                                               const ProjectiveStructure& structure,
                                               std::size_t n = kDefaultGridSize);

// The homography whose action through the developing map matches d to second order at
// theta0.
MobiusElement osculating_mobius(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                double theta0);

struct GhysResult {
  bool identically_zero = false;  // |S~| < 1e-11 on the whole grid
  std::size_t count = 0;
  std::vector<double> zeros;
};

// Transverse zeros of the modified Schwarzian coefficient.
GhysResult ghys_zero_count(const CircleDiffeo& d, std::size_t n = kDefaultGridSize);

}  // namespace circdiff
