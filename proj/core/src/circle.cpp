#include "circdiff/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "circdiff/errors.hpp"
#include "projection.hpp"

namespace circdiff {

namespace {

void normalize_coeffs(std::vector<double>& cos, std::vector<double>& sin, const char* what) {
  const std::size_t m = std::max(cos.size(), sin.size());
  cos.resize(m, 0.0);
  sin.resize(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    if (!std::isfinite(cos[k]) || !std::isfinite(sin[k])) {
      throw InvalidInput(std::string(what) + ": coefficients must be finite");
    }
  }
  std::size_t keep = m;
  while (keep > 0 && cos[keep - 1] == 0.0 && sin[keep - 1] == 0.0) --keep;
  cos.resize(keep);
  sin.resize(keep);
}

// Derivative `order` (0..3) of sum_n (a_n cos n t + b_n sin n t).
double trig_sum(const std::vector<double>& cos, const std::vector<double>& sin, double theta,
                int order) {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double c = c1;
  double s = s1;
  double acc = 0.0;
  for (std::size_t n = 1; n <= cos.size(); ++n) {
    const double a = cos[n - 1];
    const double b = sin[n - 1];
    const double k = static_cast<double>(n);
    switch (order) {
      case 0: acc += a * c + b * s; break;
      case 1: acc += k * (b * c - a * s); break;
      case 2: acc -= k * k * (a * c + b * s); break;
      default: acc += k * k * k * (a * s - b * c); break;
    }
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
  return acc;
}

double lowest_derivative(const CircleDiffeo& d) {
  if (d.is_rotation()) return 1.0;
  const std::size_t n = 8 * std::max<std::size_t>(d.modes(), 32);
  std::size_t best = 0;
  double best_value = d.derivative(0.0, 1);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = d.derivative(PeriodicSamples::node(k, n), 1);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  // Golden-section refinement between the neighbours of the grid minimum.
  const double h = kTwoPi / static_cast<double>(n);
  double lo = PeriodicSamples::node(best, n) - h;
  double hi = lo + 2.0 * h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = d.derivative(x1, 1);
  double f2 = d.derivative(x2, 1);
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = d.derivative(x1, 1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = d.derivative(x2, 1);
    }
  }
  return std::min({best_value, f1, f2});
}

CircleDiffeo from_series(const FourierSeries& s) { return CircleDiffeo(s.mean, s.cos, s.sin); }

VectorFieldS1 field_from_series(const FourierSeries& s) {
  return VectorFieldS1(s.mean, s.cos, s.sin);
}

}  // namespace

CircleDiffeo::CircleDiffeo(double shift, std::vector<double> cos, std::vector<double> sin)
    : shift_(shift), cos_(std::move(cos)), sin_(std::move(sin)) {
  if (!std::isfinite(shift_)) throw InvalidInput("diffeomorphism shift must be finite");
  normalize_coeffs(cos_, sin_, "diffeomorphism");
  min_derivative_ = lowest_derivative(*this);
  if (!(min_derivative_ >= kMinDerivative)) {
    throw InvalidDiffeo("lift derivative reaches " + std::to_string(min_derivative_) +
                        "; not an orientation-preserving diffeomorphism");
  }
}

double CircleDiffeo::operator()(double theta) const {
  return theta + shift_ + trig_sum(cos_, sin_, theta, 0);
}

double CircleDiffeo::derivative(double theta, int order) const {
  if (order < 1 || order > 3) throw InvalidInput("diffeomorphism derivative order must be 1..3");
  const double periodic = trig_sum(cos_, sin_, theta, order);
  return order == 1 ? 1.0 + periodic : periodic;
}

Jet3 CircleDiffeo::jet(double theta) const {
  return {(*this)(theta), derivative(theta, 1), derivative(theta, 2), derivative(theta, 3)};
}

double CircleDiffeo::lift_difference(double center, double gap) const {
  // cos n(c+g/2) - cos n(c-g/2) = -2 sin(nc) sin(ng/2), sin likewise with 2 cos(nc).
  double acc = gap;
  const double c1 = std::cos(center);
  const double s1 = std::sin(center);
  const double hc1 = std::cos(0.5 * gap);
  const double hs1 = std::sin(0.5 * gap);
  double c = c1, s = s1, hc = hc1, hs = hs1;
  for (std::size_t n = 1; n <= cos_.size(); ++n) {
    acc += 2.0 * hs * (sin_[n - 1] * c - cos_[n - 1] * s);
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
    const double hcn = hc * hc1 - hs * hs1;
    hs = hs * hc1 + hc * hs1;
    hc = hcn;
  }
  return acc;
}

VectorFieldS1::VectorFieldS1(double mean, std::vector<double> cos, std::vector<double> sin)
    : mean_(mean), cos_(std::move(cos)), sin_(std::move(sin)) {
  if (!std::isfinite(mean_)) throw InvalidInput("vector field mean must be finite");
  normalize_coeffs(cos_, sin_, "vector field");
}

VectorFieldS1 VectorFieldS1::cos_mode(std::size_t n, double amplitude) {
  if (n == 0) return constant(amplitude);
  std::vector<double> c(n, 0.0), s(n, 0.0);
  c[n - 1] = amplitude;
  return VectorFieldS1(0.0, std::move(c), std::move(s));
}

VectorFieldS1 VectorFieldS1::sin_mode(std::size_t n, double amplitude) {
  if (n == 0) return {};
  std::vector<double> c(n, 0.0), s(n, 0.0);
  s[n - 1] = amplitude;
  return VectorFieldS1(0.0, std::move(c), std::move(s));
}

double VectorFieldS1::derivative(double theta, int order) const {
  if (order < 0 || order > 3) throw InvalidInput("vector field derivative order must be 0..3");
  return (order == 0 ? mean_ : 0.0) + trig_sum(cos_, sin_, theta, order);
}

PeriodicSamples VectorFieldS1::samples(std::size_t n, int order) const {
  return PeriodicSamples::sample(n, [&](double t) { return derivative(t, order); });
}

double VectorFieldS1::derivative_bound() const {
  double b = 0.0;
  for (std::size_t k = 0; k < cos_.size(); ++k) {
    b += static_cast<double>(k + 1) * (std::abs(cos_[k]) + std::abs(sin_[k]));
  }
  return b;
}

VectorFieldS1 VectorFieldS1::operator+(const VectorFieldS1& other) const {
  const std::size_t m = std::max(modes(), other.modes());
  std::vector<double> c(m, 0.0), s(m, 0.0);
  for (std::size_t k = 0; k < modes(); ++k) {
    c[k] += cos_[k];
    s[k] += sin_[k];
  }
  for (std::size_t k = 0; k < other.modes(); ++k) {
    c[k] += other.cos_[k];
    s[k] += other.sin_[k];
  }
  return VectorFieldS1(mean_ + other.mean_, std::move(c), std::move(s));
}

VectorFieldS1 VectorFieldS1::operator*(double f) const {
  std::vector<double> c = cos_, s = sin_;
  for (auto& v : c) v *= f;
  for (auto& v : s) v *= f;
  return VectorFieldS1(mean_ * f, std::move(c), std::move(s));
}

MobiusElement::MobiusElement(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!std::isfinite(det) || !(det > 0.0)) {
    throw InvalidInput("Mobius matrix needs a positive finite determinant");
  }
  const double r = 1.0 / std::sqrt(det);
  m_ = {a * r, b * r, c * r, d * r};
}

MobiusElement MobiusElement::operator*(const MobiusElement& o) const {
  return MobiusElement(a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(),
                       c() * o.a() + d() * o.c(), c() * o.b() + d() * o.d());
}

MobiusElement MobiusElement::inverse() const { return MobiusElement(d(), -b(), -c(), a()); }

ProjectivePoint MobiusElement::apply(const ProjectivePoint& p) const {
  return ProjectivePoint(c() * p.y() + d() * p.x(), a() * p.y() + b() * p.x());
}

double MobiusElement::apply(double t) const {
  if (std::isinf(t)) {
    return c() == 0.0 ? std::numeric_limits<double>::infinity() : a() / c();
  }
  const double den = c() * t + d();
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return (a() * t + b()) / den;
}

double MobiusElement::distance(const MobiusElement& o) const {
  double plus = 0.0, minus = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    plus = std::max(plus, std::abs(m_[k] - o.m_[k]));
    minus = std::max(minus, std::abs(m_[k] + o.m_[k]));
  }
  return std::min(plus, minus);
}

MobiusElement rigid_rotation(const ProjectiveStructure& structure, double angle) {
  // Conjugate the plane rotation by the y-scale of the homogeneous pair.
  const double amp = structure.y_scale();
  const double b = structure.frequency() * angle;
  return MobiusElement(std::cos(b), amp * std::sin(b), -std::sin(b) / amp, std::cos(b));
}

CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner) {
  if (outer.is_rotation() && inner.is_rotation()) {
    return CircleDiffeo::rotation(outer.shift() + inner.shift());
  }
  const std::size_t min_nodes = 4 * (outer.modes() + inner.modes() + 8);
  return from_series(detail::project_periodic(
      [&](double t) { return outer(inner(t)) - t; }, min_nodes, "compose"));
}

CircleDiffeo inverse(const CircleDiffeo& d) {
  if (d.is_rotation()) return CircleDiffeo::rotation(-d.shift());
  const double amp = detail::amplitude_bound(d.cos_coeffs(), d.sin_coeffs());
  auto solve = [&](double theta) {
    // phi(lo) <= theta <= phi(hi) since |periodic part| <= amp.
    double lo = theta - d.shift() - amp - 1e-9;
    double hi = theta - d.shift() + amp + 1e-9;
    double x = theta - d.shift();
    for (int it = 0; it < 100; ++it) {
      const double r = d(x) - theta;
      if (r == 0.0) return x;
      if (r > 0.0) hi = std::min(hi, x);
      else lo = std::max(lo, x);
      double next = x - r / d.derivative(x, 1);
      if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - x) <= 1e-13 * (1.0 + std::abs(x))) return next;
      x = next;
    }
    throw ConvergenceFailure("inverse: Newton iteration did not converge");
  };
  const std::size_t min_nodes = 4 * (d.modes() + 8);
  return from_series(detail::project_periodic(
      [&](double t) { return solve(t) - t; }, min_nodes, "inverse"));
}

CircleDiffeo flow(const VectorFieldS1& xi, double s) {
  if (!std::isfinite(s)) throw InvalidInput("flow time must be finite");
  if (s == 0.0) return CircleDiffeo::identity();
  if (xi.modes() == 0) return CircleDiffeo::rotation(xi.mean() * s);
  const double lip = xi.derivative_bound();
  if (std::abs(s) * lip >= 5.0) {
    throw IllConditioned("flow: |s| * max|xi'| = " + std::to_string(std::abs(s) * lip) +
                         " is too large for a resolvable time-s map");
  }

  auto integrate = [&](double theta, std::size_t steps) {
    const double h = s / static_cast<double>(steps);
    double y = theta;
    for (std::size_t k = 0; k < steps; ++k) {
      const double k1 = xi(y);
      const double k2 = xi(y + 0.5 * h * k1);
      const double k3 = xi(y + 0.5 * h * k2);
      const double k4 = xi(y + h * k3);
      y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
  };

  // Step doubling on probe points until the RK4 error estimate is below 1e-13.
  std::size_t steps = std::max<std::size_t>(
      8, static_cast<std::size_t>(std::ceil(4.0 * std::abs(s) * (lip + 1.0))));
  while (true) {
    double err = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
      const double theta = PeriodicSamples::node(k, 16) + 0.1;
      err = std::max(err, std::abs(integrate(theta, 2 * steps) - integrate(theta, steps)) / 15.0);
    }
    steps *= 2;
    if (err <= 1e-13) break;
    if (steps > (std::size_t{1} << 20)) throw ConvergenceFailure("flow: step size underflow");
  }

  const std::size_t min_nodes = static_cast<std::size_t>(
      4.0 * static_cast<double>(xi.modes() + 8) * (1.0 + std::abs(s) * lip));
  return from_series(detail::project_periodic(
      [&](double t) { return integrate(t, steps) - t; }, min_nodes, "flow"));
}

VectorFieldS1 bracket(const VectorFieldS1& xi1, const VectorFieldS1& xi2) {
  const std::size_t min_nodes = 4 * (xi1.modes() + xi2.modes() + 8);
  return field_from_series(detail::project_periodic(
      [&](double t) {
        return xi1(t) * xi2.derivative(t, 1) - xi2(t) * xi1.derivative(t, 1);
      },
      min_nodes, "bracket"));
}

VectorFieldS1 pullback(const VectorFieldS1& xi, const CircleDiffeo& d) {
  const std::size_t min_nodes = 4 * (xi.modes() + d.modes() + 8);
  return field_from_series(detail::project_periodic(
      [&](double t) { return xi(d(t)) / d.derivative(t, 1); }, min_nodes, "pullback"));
}

namespace {

// phi(theta) - theta for the lift of m. In the rescaled frame (X, Y) = (x, y / amp) the
// developed point is (cos b, sin b) with b = f theta. Choosing the sign with nonnegative
// trace rules out negative eigenvalues, so the image is never antipodal and its signed
// angle from the input is continuous.
double mobius_displacement(const MobiusElement& m, const ProjectiveStructure& structure,
                           double theta) {
  const double f = structure.frequency();
  const double amp = structure.y_scale();
  const double sign = m.trace() < 0.0 ? -1.0 : 1.0;
  const double b = f * theta;
  const double X = std::cos(b);
  const double Y = std::sin(b);
  const double Xn = sign * (m.c() * amp * Y + m.d() * X);
  const double Yn = sign * (m.a() * Y + m.b() / amp * X);
  return std::atan2(X * Yn - Y * Xn, X * Xn + Y * Yn) / f;
}

}  // namespace

double mobius_circle_action(const MobiusElement& m, const ProjectiveStructure& structure,
                            double theta) {
  return theta + mobius_displacement(m, structure, theta);
}

CircleDiffeo mobius_lift(const MobiusElement& m, const ProjectiveStructure& structure) {
  return from_series(detail::project_periodic(
      [&](double t) { return mobius_displacement(m, structure, t); }, 64, "mobius_lift"));
}

}  // namespace circdiff
