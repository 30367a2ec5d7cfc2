#pragma once

// Null-coordinate metrics F(theta1, theta2) dtheta1 dtheta2 on T x T minus the diagonal,
// the embedding of that space as the one-sheeted hyperboloid x^2 + y^2 - t^2 = c, and the
// metric-valued cocycles read off along the diagonal.

#include <memory>
#include <utility>

#include "circdiff/circle.hpp"
#include "circdiff/numerics.hpp"
#include "circdiff/projective_structure.hpp"

namespace circdiff {

// Evaluations of diagonal-singular metrics reject |sin((theta1 - theta2)/2)| at or below this.
inline constexpr double kDiagonalGuard = 1e-8;
// Curvature stencils need this much angular room from the diagonal.
inline constexpr double kCurvatureMargin = 0.05;

class NullMetric {
 public:
  enum class Kind { Curved, Flat, Pullback };

  // c / sin^2((theta1 - theta2)/2); c must be nonzero.
  static NullMetric curved(double c);
  // F = 1
  static NullMetric flat();
  // F_base(phi theta1, phi theta2) phi'(theta1) phi'(theta2)
  static NullMetric pullback(const NullMetric& base, const CircleDiffeo& d);

  Kind kind() const;
  // c of the innermost Curved metric; 0 for metrics built on Flat.
  double charge() const;
  bool singular_on_diagonal() const { return charge() != 0.0; }

  double operator()(double theta1, double theta2) const;
  // Same value at theta1 = center + gap/2, theta2 = center - gap/2; nested pullbacks
  // carry the gap through lift differences so near-diagonal evaluation keeps precision.
  double eval_centered(double center, double gap) const;

 private:
  struct Node;
  explicit NullMetric(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

double metric_eval(const NullMetric& g, double theta1, double theta2);

struct SpacetimePoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

// x^2 + y^2 - t^2
double hyperboloid_residual(const SpacetimePoint& p);

// theta = (theta1 + theta2)/2, phi = (theta1 - theta2)/2, rho = sqrt(c) / sin phi:
// (rho sin theta, rho cos theta, rho cos phi). Requires c > 0.
SpacetimePoint embed(double theta1, double theta2, double c);

// Minkowski inner products of the coordinate derivatives of embed, by centered
// differences of step h. For the null metric, g12 = F/2 and g11 = g22 = 0.
struct InducedMetric {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;
};
InducedMetric induced_metric(double theta1, double theta2, double c, double h = 1e-5);

// K = -(2/F) d1 d2 log|F| with the mixed partial from a Richardson-corrected centered
// stencil of step 1e-3. Throws DiagonalProximity within kCurvatureMargin of the diagonal.
double gaussian_curvature(const NullMetric& g, double theta1, double theta2);

// phi'(theta1) phi'(theta2) sin^2((theta1-theta2)/2) / sin^2((phi theta1 - phi theta2)/2)
double conformal_factor(const CircleDiffeo& d, double theta1, double theta2);
// Same at theta1,2 = center +/- gap/2.
double conformal_factor_centered(const CircleDiffeo& d, double center, double gap);

// Limit along (theta + e, theta - e) of 3/2 (f_phi - 1) F_c; equals c S~(phi)(theta).
ExtrapolationResult diagonal_restriction(const CircleDiffeo& d, double c, double theta,
                                         const ExtrapolationConfig& config = {});

struct HessianCheck {
  double hessian_value = 0.0;     // coefficient of (theta1 - theta2)^2 / 2 in f_phi
  double schwarzian_value = 0.0;  // S~(phi)(theta) / 3
  double error_estimate = 0.0;
};
HessianCheck hessian_check(const CircleDiffeo& d, double theta,
                           const ExtrapolationConfig& config = {});

// phi'(theta)^2 - 1
double flat_cocycle(const CircleDiffeo& d, double theta);
// Same quantity as the diagonal limit of phi^* g_0 - g_0.
ExtrapolationResult flat_cocycle_limit(const CircleDiffeo& d, double theta,
                                       const ExtrapolationConfig& config = {});

// 4 Phi'(theta1) Phi'(theta2) / (Phi(theta1) - Phi(theta2))^2 in homogeneous form.
double general_metric(const ProjectiveStructure& structure, double theta1, double theta2);

}  // namespace circdiff
