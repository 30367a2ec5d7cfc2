#include "projection.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "circdiff/circle.hpp"
#include "circdiff/errors.hpp"

namespace circdiff::detail {

namespace {

// Largest trailing-third mode allowed, relative to 1 + max|f|; a few units above FFT
// round-off so third derivatives of the projection stay accurate.
constexpr double kTailAmplitude = 2e-15;
constexpr double kMidpointResidual = 1e-10;

void trim(FourierSeries& s) {
  double biggest = 0.0;
  for (std::size_t k = 0; k < s.cos.size(); ++k) {
    biggest = std::max({biggest, std::abs(s.cos[k]), std::abs(s.sin[k])});
  }
  // Trailing modes at the FFT noise floor only add round-off to derivatives.
  const double floor = 4e-16 * biggest;
  std::size_t keep = s.cos.size();
  while (keep > 0 && std::abs(s.cos[keep - 1]) <= floor && std::abs(s.sin[keep - 1]) <= floor) {
    --keep;
  }
  s.cos.resize(keep);
  s.sin.resize(keep);
  s.nyquist = 0.0;
}

}  // namespace

FourierSeries project_periodic(const std::function<double(double)>& f, std::size_t min_nodes,
                               std::string_view what) {
  std::size_t n = std::bit_ceil(std::max<std::size_t>(min_nodes, 16));
  if (n > kMaxProjectionGrid) n = kMaxProjectionGrid;

  std::vector<double> nodes(n);
  for (std::size_t k = 0; k < n; ++k) nodes[k] = f(PeriodicSamples::node(k, n));

  while (true) {
    std::vector<double> mids(n);
    for (std::size_t k = 0; k < n; ++k) mids[k] = f(PeriodicSamples::node(2 * k + 1, 2 * n));

    // Removing the mean first keeps FFT round-off proportional to the oscillating part.
    double mean = 0.0;
    for (double v : nodes) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t k = 0; k < n; ++k) centered[k] = nodes[k] - mean;
    FourierSeries s = fourier_analyze(PeriodicSamples(std::move(centered)));
    s.mean += mean;
    double scale = 0.0;
    for (double v : nodes) scale = std::max(scale, std::abs(v));
    double tail = std::abs(s.nyquist);
    for (std::size_t k = (2 * s.cos.size()) / 3; k < s.cos.size(); ++k) {
      tail = std::max(tail, std::hypot(s.cos[k], s.sin[k]));
    }
    bool ok = tail <= kTailAmplitude * (1.0 + scale);
    if (ok) {
      for (std::size_t k = 0; k < n && ok; ++k) {
        const double theta = PeriodicSamples::node(2 * k + 1, 2 * n);
        ok = std::abs(s.eval(theta) - mids[k]) <= kMidpointResidual;
      }
    }
    if (ok) {
      trim(s);
      return s;
    }
    if (2 * n > kMaxProjectionGrid) {
      throw BandwidthOverflow(std::string(what) + ": not resolved on " + std::to_string(n) +
                              " nodes");
    }
    std::vector<double> merged(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      merged[2 * k] = nodes[k];
      merged[2 * k + 1] = mids[k];
    }
    nodes = std::move(merged);
    n *= 2;
  }
}

double amplitude_bound(const std::vector<double>& cos, const std::vector<double>& sin) {
  double a = 0.0;
  for (std::size_t k = 0; k < cos.size(); ++k) a += std::abs(cos[k]) + std::abs(sin[k]);
  return a;
}

}  // namespace circdiff::detail
