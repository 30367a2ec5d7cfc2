#include "circdiff/geometry.hpp"

#include <cmath>
#include <string>

#include "circdiff/errors.hpp"

namespace circdiff {

struct NullMetric::Node {
  Kind kind;
  double c = 0.0;
  std::shared_ptr<const Node> base;
  CircleDiffeo by;
};

namespace {

void guard_gap(double gap) {
  if (std::abs(std::sin(0.5 * gap)) <= kDiagonalGuard) {
    throw DiagonalProximity("metric evaluated within the diagonal guard band");
  }
}

}  // namespace

NullMetric NullMetric::curved(double c) {
  if (!std::isfinite(c) || c == 0.0) throw InvalidInput("curved metric needs a nonzero finite c");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Curved;
  n->c = c;
  return NullMetric(std::move(n));
}

NullMetric NullMetric::flat() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Flat;
  return NullMetric(std::move(n));
}

NullMetric NullMetric::pullback(const NullMetric& base, const CircleDiffeo& d) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pullback;
  n->c = base.charge();
  n->base = base.node_;
  n->by = d;
  return NullMetric(std::move(n));
}

NullMetric::Kind NullMetric::kind() const { return node_->kind; }

double NullMetric::charge() const { return node_->c; }

double NullMetric::operator()(double theta1, double theta2) const {
  return eval_centered(0.5 * (theta1 + theta2), theta1 - theta2);
}

double NullMetric::eval_centered(double center, double gap) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Flat:
      return 1.0;
    case Kind::Curved: {
      guard_gap(gap);
      const double s = std::sin(0.5 * gap);
      return n.c / (s * s);
    }
    case Kind::Pullback: {
      if (n.c != 0.0) guard_gap(gap);
      const CircleDiffeo& d = n.by;
      const double a = center + 0.5 * gap;
      const double b = center - 0.5 * gap;
      const double image_center = 0.5 * (d(a) + d(b));
      const double image_gap = d.lift_difference(center, gap);
      const NullMetric base(n.base);
      return base.eval_centered(image_center, image_gap) * d.derivative(a, 1) *
             d.derivative(b, 1);
    }
  }
  throw Error("unknown metric kind");
}

double metric_eval(const NullMetric& g, double theta1, double theta2) { return g(theta1, theta2); }

double hyperboloid_residual(const SpacetimePoint& p) { return p.x * p.x + p.y * p.y - p.t * p.t; }

SpacetimePoint embed(double theta1, double theta2, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("embedding needs c > 0");
  guard_gap(theta1 - theta2);
  const double theta = 0.5 * (theta1 + theta2);
  const double phi = 0.5 * (theta1 - theta2);
  const double rho = std::sqrt(c) / std::sin(phi);
  return {rho * std::sin(theta), rho * std::cos(theta), rho * std::cos(phi)};
}

InducedMetric induced_metric(double theta1, double theta2, double c, double h) {
  auto minkowski = [](const SpacetimePoint& u, const SpacetimePoint& v) {
    return u.x * v.x + u.y * v.y - u.t * v.t;
  };
  auto diff = [h](const SpacetimePoint& p, const SpacetimePoint& m) {
    const double s = 1.0 / (2.0 * h);
    return SpacetimePoint{(p.x - m.x) * s, (p.y - m.y) * s, (p.t - m.t) * s};
  };
  const SpacetimePoint d1 = diff(embed(theta1 + h, theta2, c), embed(theta1 - h, theta2, c));
  const SpacetimePoint d2 = diff(embed(theta1, theta2 + h, c), embed(theta1, theta2 - h, c));
  return {minkowski(d1, d1), minkowski(d1, d2), minkowski(d2, d2)};
}

double gaussian_curvature(const NullMetric& g, double theta1, double theta2) {
  const double sep = std::remainder(theta1 - theta2, kTwoPi);
  if (std::abs(sep) < kCurvatureMargin) {
    throw DiagonalProximity("curvature requested within " + std::to_string(kCurvatureMargin) +
                            " of the diagonal");
  }
  const double center = 0.5 * (theta1 + theta2);
  const double gap = theta1 - theta2;
  auto log_f = [&](double dc, double dg) {
    return std::log(std::abs(g.eval_centered(center + dc, gap + dg)));
  };
  // (theta1 +/- h, theta2 +/- h) in centered coordinates.
  auto mixed = [&](double h) {
    return (log_f(h, 0.0) - log_f(0.0, 2.0 * h) - log_f(0.0, -2.0 * h) + log_f(-h, 0.0)) /
           (4.0 * h * h);
  };
  constexpr double h = 1e-3;
  const double d12 = (4.0 * mixed(0.5 * h) - mixed(h)) / 3.0;
  const double f = g.eval_centered(center, gap);
  return -2.0 / f * d12;
}

double conformal_factor_centered(const CircleDiffeo& d, double center, double gap) {
  guard_gap(gap);
  const double s = std::sin(0.5 * gap);
  const double si = std::sin(0.5 * d.lift_difference(center, gap));
  const double p1 = d.derivative(center + 0.5 * gap, 1);
  const double p2 = d.derivative(center - 0.5 * gap, 1);
  return p1 * p2 * (s * s) / (si * si);
}

double conformal_factor(const CircleDiffeo& d, double theta1, double theta2) {
  return conformal_factor_centered(d, 0.5 * (theta1 + theta2), theta1 - theta2);
}

ExtrapolationResult diagonal_restriction(const CircleDiffeo& d, double c, double theta,
                                         const ExtrapolationConfig& config) {
  if (!std::isfinite(c) || c == 0.0) throw InvalidInput("diagonal restriction needs c != 0");
  return richardson_limit(
      [&](double e) {
        const double s = std::sin(e);
        return 1.5 * (conformal_factor_centered(d, theta, 2.0 * e) - 1.0) * c / (s * s);
      },
      config);
}

HessianCheck hessian_check(const CircleDiffeo& d, double theta,
                           const ExtrapolationConfig& config) {
  const ExtrapolationResult r = richardson_limit(
      [&](double e) { return (conformal_factor_centered(d, theta, 2.0 * e) - 1.0) / (4.0 * e * e); },
      config);
  const double p = d.derivative(theta, 1);
  const double p2 = d.derivative(theta, 2);
  const double ratio = p2 / p;
  const double s_mod = d.derivative(theta, 3) / p - 1.5 * ratio * ratio + 0.5 * (p * p - 1.0);
  return {2.0 * r.value, s_mod / 3.0, 2.0 * r.error_estimate};
}

double flat_cocycle(const CircleDiffeo& d, double theta) {
  const double p = d.derivative(theta, 1);
  return p * p - 1.0;
}

ExtrapolationResult flat_cocycle_limit(const CircleDiffeo& d, double theta,
                                       const ExtrapolationConfig& config) {
  const NullMetric g0 = NullMetric::flat();
  const NullMetric pulled = NullMetric::pullback(g0, d);
  return richardson_limit(
      [&](double e) { return pulled.eval_centered(theta, 2.0 * e) - g0.eval_centered(theta, 2.0 * e); },
      config);
}

double general_metric(const ProjectiveStructure& structure, double theta1, double theta2) {
  const auto [x1, y1] = structure.develop_jet(Jet3::variable(theta1));
  const auto [x2, y2] = structure.develop_jet(Jet3::variable(theta2));
  const double b12 = y1.v * x2.v - y2.v * x1.v;
  if (std::abs(b12) <= kDiagonalGuard) {
    throw DiagonalProximity("general metric: developed points coincide");
  }
  // Phi' = W / x^2 with W = y' x - y x'; the x^2 factors cancel against the bracket.
  const double w1 = y1.d1 * x1.v - y1.v * x1.d1;
  const double w2 = y2.d1 * x2.v - y2.v * x2.d1;
  return 4.0 * w1 * w2 / (b12 * b12);
}

}  // namespace circdiff
