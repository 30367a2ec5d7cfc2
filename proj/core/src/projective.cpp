#include "circdiff/projective.hpp"

#include <cmath>
#include <limits>

#include "circdiff/errors.hpp"

namespace circdiff {

namespace {

struct Homogeneous {
  double x;
  double y;
};

Homogeneous lift_affine(double z) {
  if (std::isinf(z)) return {0.0, 1.0};
  return {1.0, z};
}

double bracket(const Homogeneous& p, const Homogeneous& q) { return p.y * q.x - q.y * p.x; }

double cross_ratio_impl(const Homogeneous& p1, const Homogeneous& p2, const Homogeneous& p3,
                        const Homogeneous& p4) {
  const double b13 = bracket(p1, p3);
  const double b24 = bracket(p2, p4);
  const double b14 = bracket(p1, p4);
  const double b23 = bracket(p2, p3);
  const double b12 = bracket(p1, p2);
  const double b34 = bracket(p3, p4);
  // Three coincident points make some triple of brackets vanish together.
  const bool degenerate = (b12 == 0.0 && b13 == 0.0) || (b12 == 0.0 && b14 == 0.0) ||
                          (b13 == 0.0 && b14 == 0.0) || (b23 == 0.0 && b24 == 0.0) ||
                          (b23 == 0.0 && b34 == 0.0) || (b24 == 0.0 && b34 == 0.0);
  if (degenerate) throw InvalidInput("cross-ratio: three of the four points coincide");
  const double num = b13 * b24;
  const double den = b14 * b23;
  if (den == 0.0) {
    return std::copysign(std::numeric_limits<double>::infinity(), num);
  }
  return num / den;
}

}  // namespace

double cross_ratio(const ProjectivePoint& z1, const ProjectivePoint& z2,
                   const ProjectivePoint& z3, const ProjectivePoint& z4) {
  return cross_ratio_impl({z1.x(), z1.y()}, {z2.x(), z2.y()}, {z3.x(), z3.y()},
                          {z4.x(), z4.y()});
}

double cross_ratio(double z1, double z2, double z3, double z4) {
  for (double z : {z1, z2, z3, z4}) {
    if (std::isnan(z)) throw InvalidInput("cross-ratio: NaN input");
  }
  return cross_ratio_impl(lift_affine(z1), lift_affine(z2), lift_affine(z3), lift_affine(z4));
}

double cartan_schwarzian_estimate(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                  double theta, double eps) {
  if (!(eps > 0.0) || !(eps < 0.3)) throw InvalidInput("Cartan estimator needs 0 < eps < 0.3");
  constexpr double offsets[4] = {1.0, -1.0, 2.0, -2.0};
  std::vector<ProjectivePoint> t, tau;
  for (double o : offsets) {
    const double th = theta + o * eps;
    t.push_back(structure.develop(th));
    tau.push_back(structure.develop(d(th)));
  }
  const double cr_t = cross_ratio(t[0], t[1], t[2], t[3]);
  const double cr_tau = cross_ratio(tau[0], tau[1], tau[2], tau[3]);
  if (cr_t == 0.0 || !std::isfinite(cr_t) || !std::isfinite(cr_tau)) {
    throw IllConditioned("Cartan estimator: degenerate stencil cross-ratio");
  }
  return 6.0 * (cr_tau / cr_t - 1.0) / ((2.0 * eps) * (4.0 * eps));
}

CartanConvergence cartan_convergence(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                     double theta, double eps0, int levels, double reference) {
  if (levels < 2) throw InvalidInput("Cartan convergence needs at least two levels");
  CartanConvergence out;
  for (int j = 0; j < levels; ++j) {
    const double eps = std::ldexp(eps0, -j);
    const double est = cartan_schwarzian_estimate(d, structure, theta, eps);
    out.eps.push_back(eps);
    out.estimates.push_back(est);
    out.errors.push_back(std::abs(est - reference));
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (std::size_t j = 0; j < out.eps.size(); ++j) {
    if (!(out.errors[j] > 0.0)) continue;
    const double x = std::log(out.eps[j]);
    const double y = std::log(out.errors[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used >= 2) {
    out.order = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  } else {
    // Errors at round-off from the start: nothing left to converge.
    out.order = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace circdiff
