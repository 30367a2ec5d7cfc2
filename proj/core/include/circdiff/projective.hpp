#pragma once

#include <vector>

#include "circdiff/circle.hpp"
#include "circdiff/projective_structure.hpp"

namespace circdiff {

// (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)) from homogeneous 2x2 brackets, so infinity
// is an ordinary point. A vanishing denominator yields a signed infinity. Throws
// InvalidInput when three of the points coincide.
double cross_ratio(const ProjectivePoint& z1, const ProjectivePoint& z2,
                   const ProjectivePoint& z3, const ProjectivePoint& z4);
// Affine inputs; +/-infinity is accepted. Bit-exact with the affine formula for finite z.
double cross_ratio(double z1, double z2, double z3, double z4);

// 6 (CR(tau) / CR(t) - 1) / ((theta1 - theta2)(theta3 - theta4)) on the stencil
// theta + eps (1, -1, 2, -2), where t are the developed stencil points and tau the
// developed images. Tends to the universal Schwarzian coefficient as eps -> 0.
// Requires 0 < eps < 0.3.
double cartan_schwarzian_estimate(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                  double theta, double eps);

struct CartanConvergence {
  std::vector<double> eps;
  std::vector<double> estimates;
  std::vector<double> errors;  // |estimate - reference|
  double order = 0.0;          // least-squares slope of log error against log eps
};

// Estimates on eps0 / 2^j, j < levels, compared with a reference value.
CartanConvergence cartan_convergence(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                     double theta, double eps0, int levels, double reference);

}  // namespace circdiff
