#pragma once

// Spectral calculus and quadrature for smooth 2*pi-periodic functions,
// Richardson extrapolation of even-power expansions, and zero localization.

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace circdiff {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr std::size_t kDefaultGridSize = 256;

// Samples of a real 2*pi-periodic function at theta_k = 2*pi*k/N.
// N is even and at least 8; all samples are finite.
class PeriodicSamples {
 public:
  explicit PeriodicSamples(std::vector<double> values);

  template <typename F>
  static PeriodicSamples sample(std::size_t n, F&& f) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = f(node(k, n));
    return PeriodicSamples(std::move(v));
  }

  static double node(std::size_t k, std::size_t n) {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }
  double theta(std::size_t k) const { return node(k, values_.size()); }
  double max_abs() const;

 private:
  std::vector<double> values_;
};

// Real trigonometric series
//   mean + sum_n (cos[n-1] cos n theta + sin[n-1] sin n theta) + nyquist cos(M theta)
// with M = cos.size() + 1 when nyquist is nonzero.
struct FourierSeries {
  double mean = 0.0;
  std::vector<double> cos;
  std::vector<double> sin;
  double nyquist = 0.0;

  double eval(double theta) const;
  // order in 0..3
  double derivative(double theta, int order) const;
};

// Trigonometric interpolant of the samples.
FourierSeries fourier_analyze(const PeriodicSamples& f);

// order in {1, 2, 3}; differentiation in frequency space.
PeriodicSamples spectral_derivative(const PeriodicSamples& f, int order);

// (2*pi/N) * sum of samples.
double circle_integral(const PeriodicSamples& f);

struct ExtrapolationConfig {
  double eps0 = 0.1;
  int levels = 5;
};

struct ExtrapolationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels_used = 0;
};

// Limit of g(eps) as eps -> 0 assuming g(eps) = g0 + c1 eps^2 + c2 eps^4 + ...
// Evaluates g at eps0 / 2^j, j < levels (levels >= 3). Throws ExtrapolationFailure
// when the raw sequence of differences grows.
ExtrapolationResult richardson_limit(const std::function<double(double)>& g, double eps0,
                                     int levels);
inline ExtrapolationResult richardson_limit(const std::function<double(double)>& g,
                                            const ExtrapolationConfig& config) {
  return richardson_limit(g, config.eps0, config.levels);
}

struct ZeroSet {
  std::size_t count = 0;
  std::vector<double> zeros;  // ascending, in [0, 2*pi)
};

// Transverse zeros of the trigonometric interpolant on one period. Each sign change
// between adjacent nodes is refined by bisection on the interpolant to refine_tol.
// Throws IllConditioned when more than N/2 sign changes are found.
ZeroSet count_sign_changes(const PeriodicSamples& f, double refine_tol);

// Wrap an angle into [0, 2*pi).
double wrap_angle(double theta);

}  // namespace circdiff
