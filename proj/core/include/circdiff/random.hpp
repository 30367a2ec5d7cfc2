#pragma once

#include <cstdint>
#include <random>

#include "circdiff/circle.hpp"

namespace circdiff {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Seeded generator of valid test inputs.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform(double lo, double hi);

  // 1..max_modes random modes scaled so that sum n (|a_n| + |b_n|) <= 0.8, which keeps
  // phi' >= 0.2; plus a random shift.
  CircleDiffeo diffeo(int max_modes = 3);
  // Coefficients in [-amplitude, amplitude] on modes 0..max_modes.
  VectorFieldS1 field(int max_modes = 3, double amplitude = 1.0);
  // R(a) diag(e^s, e^-s) R(b) with |s| <= 0.4, R the rigid rotations of the structure.
  MobiusElement mobius(const ProjectiveStructure& structure = ProjectiveStructure::torus());

 private:
  std::mt19937_64 engine_;
};

}  // namespace circdiff
