#include "circdiff/random.hpp"

#include <cmath>
#include <vector>

namespace circdiff {

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

CircleDiffeo RandomSource::diffeo(int max_modes) {
  const int modes = std::uniform_int_distribution<int>(1, max_modes)(engine_);
  std::vector<double> a(modes), b(modes);
  double weight = 0.0;
  for (int n = 0; n < modes; ++n) {
    a[n] = uniform(-1.0, 1.0);
    b[n] = uniform(-1.0, 1.0);
    weight += (n + 1) * (std::abs(a[n]) + std::abs(b[n]));
  }
  const double scale = 0.8 * uniform(0.2, 1.0) / weight;
  for (int n = 0; n < modes; ++n) {
    a[n] *= scale;
    b[n] *= scale;
  }
  return CircleDiffeo(uniform(-kPi, kPi), std::move(a), std::move(b));
}

VectorFieldS1 RandomSource::field(int max_modes, double amplitude) {
  std::vector<double> a(max_modes), b(max_modes);
  const double mean = uniform(-amplitude, amplitude);
  for (int n = 0; n < max_modes; ++n) {
    a[n] = uniform(-amplitude, amplitude);
    b[n] = uniform(-amplitude, amplitude);
  }
  return VectorFieldS1(mean, std::move(a), std::move(b));
}

MobiusElement RandomSource::mobius(const ProjectiveStructure& structure) {
  const double s = uniform(-0.4, 0.4);
  const MobiusElement boost(std::exp(s), 0.0, 0.0, std::exp(-s));
  const double a = uniform(-kPi, kPi);
  const double b = uniform(-kPi, kPi);
  return rigid_rotation(structure, a) * boost * rigid_rotation(structure, b);
}

}  // namespace circdiff
