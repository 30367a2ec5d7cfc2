#include "circdiff/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <unsupported/Eigen/FFT>

#include "circdiff/errors.hpp"

namespace circdiff {

namespace {

using Spectrum = std::vector<std::complex<double>>;

Spectrum forward(std::span<const double> values) {
  Eigen::FFT<double> fft;
  std::vector<double> in(values.begin(), values.end());
  Spectrum out;
  fft.fwd(out, in);
  return out;
}

std::vector<double> inverse_real(const Spectrum& spectrum) {
  Eigen::FFT<double> fft;
  Spectrum out;
  fft.inv(out, spectrum);
  std::vector<double> re(out.size());
  std::transform(out.begin(), out.end(), re.begin(), [](const auto& z) { return z.real(); });
  return re;
}

// Sum over modes of amp_n * trig(n theta) using the angle-addition recurrence.
template <typename Visit>
void for_each_mode(double theta, std::size_t modes, Visit&& visit) {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double c = c1;
  double s = s1;
  for (std::size_t n = 1; n <= modes; ++n) {
    visit(n, c, s);
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
}

}  // namespace

PeriodicSamples::PeriodicSamples(std::vector<double> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n < 8 || n % 2 != 0) {
    throw InvalidInput("periodic samples need an even count >= 8, got " + std::to_string(n));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("periodic samples must be finite");
  }
}

double PeriodicSamples::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double FourierSeries::eval(double theta) const { return derivative(theta, 0); }

double FourierSeries::derivative(double theta, int order) const {
  if (order < 0 || order > 3) throw InvalidInput("interpolant derivative order must be 0..3");
  double acc = order == 0 ? mean : 0.0;
  const std::size_t modes = cos.size();
  for_each_mode(theta, modes, [&](std::size_t n, double c, double s) {
    const double a = cos[n - 1];
    const double b = sin[n - 1];
    const double k = static_cast<double>(n);
    switch (order) {
      case 0: acc += a * c + b * s; break;
      case 1: acc += k * (b * c - a * s); break;
      case 2: acc -= k * k * (a * c + b * s); break;
      default: acc += k * k * k * (a * s - b * c); break;
    }
  });
  if (nyquist != 0.0) {
    const double k = static_cast<double>(modes + 1);
    const double c = std::cos(k * theta);
    const double s = std::sin(k * theta);
    switch (order) {
      case 0: acc += nyquist * c; break;
      case 1: acc -= k * nyquist * s; break;
      case 2: acc -= k * k * nyquist * c; break;
      default: acc += k * k * k * nyquist * s; break;
    }
  }
  return acc;
}

FourierSeries fourier_analyze(const PeriodicSamples& f) {
  const std::size_t n = f.size();
  const Spectrum x = forward(f.values());
  const double inv_n = 1.0 / static_cast<double>(n);
  FourierSeries series;
  series.mean = x[0].real() * inv_n;
  const std::size_t half = n / 2;
  series.cos.resize(half - 1);
  series.sin.resize(half - 1);
  for (std::size_t k = 1; k < half; ++k) {
    series.cos[k - 1] = 2.0 * x[k].real() * inv_n;
    series.sin[k - 1] = -2.0 * x[k].imag() * inv_n;
  }
  series.nyquist = x[half].real() * inv_n;
  return series;
}

PeriodicSamples spectral_derivative(const PeriodicSamples& f, int order) {
  if (order < 1 || order > 3) {
    throw InvalidInput("spectral derivative order must be 1, 2 or 3");
  }
  const std::size_t n = f.size();
  Spectrum x = forward(f.values());
  const std::size_t half = n / 2;
  // Coefficients at transform round-off carry no signal; k^order would amplify them.
  double peak = 0.0;
  for (const auto& c : x) peak = std::max(peak, std::abs(c));
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() * peak;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(x[k]) <= noise) {
      x[k] = 0.0;
      continue;
    }
    if (k == half) {
      if (order % 2 == 1) {
        x[k] = 0.0;
      } else {
        const double w = static_cast<double>(half);
        x[k] *= order == 2 ? -w * w : 0.0;
      }
      continue;
    }
    const double wave = k < half ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(n);
    std::complex<double> factor(1.0, 0.0);
    for (int i = 0; i < order; ++i) factor *= std::complex<double>(0.0, wave);
    x[k] *= factor;
  }
  return PeriodicSamples(inverse_real(x));
}

double circle_integral(const PeriodicSamples& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return kTwoPi * sum / static_cast<double>(f.size());
}

ExtrapolationResult richardson_limit(const std::function<double(double)>& g, double eps0,
                                     int levels) {
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) throw InvalidInput("eps0 must be positive");
  if (levels < 3) throw InvalidInput("richardson_limit needs at least 3 levels");

  const auto lv = static_cast<std::size_t>(levels);
  std::vector<std::vector<double>> table(lv);
  double scale = 0.0;
  for (std::size_t j = 0; j < lv; ++j) {
    const double eps = std::ldexp(eps0, -static_cast<int>(j));
    const double value = g(eps);
    if (!std::isfinite(value)) {
      throw ExtrapolationFailure("non-finite sample at eps = " + std::to_string(eps));
    }
    scale = std::max(scale, std::abs(value));
    table[j].assign(j + 1, 0.0);
    table[j][0] = value;
  }

  // Raw differences must contract at the fine end. A single early increase can come from
  // cancellation between the eps^2 and eps^4 terms, so only sustained growth is fatal.
  const double noise_floor = 1e-7 * (1.0 + scale);
  auto diff = [&](std::size_t j) { return std::abs(table[j][0] - table[j - 1][0]); };
  bool growing = diff(lv - 1) > noise_floor && diff(lv - 1) > diff(lv - 2);
  if (lv >= 4) growing = growing && diff(lv - 2) > diff(lv - 3);
  if (growing) {
    throw ExtrapolationFailure("successive differences grow (" + std::to_string(diff(lv - 2)) +
                               " -> " + std::to_string(diff(lv - 1)) + ")");
  }

  for (std::size_t j = 1; j < lv; ++j) {
    double factor = 1.0;
    for (std::size_t k = 1; k <= j; ++k) {
      factor *= 4.0;
      table[j][k] = table[j][k - 1] + (table[j][k - 1] - table[j - 1][k - 1]) / (factor - 1.0);
    }
  }

  ExtrapolationResult result;
  result.value = table[lv - 1][lv - 1];
  result.error_estimate = std::abs(table[lv - 1][lv - 1] - table[lv - 2][lv - 2]);
  result.levels_used = levels;
  return result;
}

ZeroSet count_sign_changes(const PeriodicSamples& f, double refine_tol) {
  if (!(refine_tol > 0.0)) throw InvalidInput("refine_tol must be positive");
  const std::size_t n = f.size();
  const FourierSeries interp = fourier_analyze(f);
  const double h = kTwoPi / static_cast<double>(n);

  ZeroSet result;
  for (std::size_t k = 0; k < n; ++k) {
    const double v0 = f[k];
    const double v1 = f[(k + 1) % n];
    if ((v0 >= 0.0) == (v1 >= 0.0)) continue;
    double lo = static_cast<double>(k) * h;
    double hi = lo + h;
    double flo = v0;
    while (hi - lo > refine_tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = interp.eval(mid);
      if ((fm >= 0.0) == (flo >= 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    result.zeros.push_back(wrap_angle(0.5 * (lo + hi)));
  }
  result.count = result.zeros.size();
  if (result.count > n / 2) {
    throw IllConditioned("more than N/2 sign changes; input is undersampled");
  }
  std::sort(result.zeros.begin(), result.zeros.end());
  return result;
}

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace circdiff
