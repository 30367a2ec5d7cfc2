#include "circdiff/projective_structure.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "circdiff/errors.hpp"
#include "circdiff/numerics.hpp"

namespace circdiff {

ProjectivePoint::ProjectivePoint(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InvalidInput("projective point coordinates must be finite");
  }
  const double r = std::hypot(x, y);
  if (r == 0.0) throw InvalidInput("projective point cannot be [0 : 0]");
  x /= r;
  y /= r;
  if (x < 0.0 || (x == 0.0 && y < 0.0)) {
    x = -x;
    y = -y;
  }
  x_ = x + 0.0;
  y_ = y + 0.0;
}

ProjectivePoint ProjectivePoint::from_affine(double t) {
  if (std::isinf(t)) return infinity();
  return ProjectivePoint(1.0, t);
}

double ProjectivePoint::affine() const {
  if (x_ == 0.0) return std::numeric_limits<double>::infinity();
  return y_ / x_;
}

ProjectiveStructure::ProjectiveStructure(StructureKind kind) : kind_(kind) {
  if (kind == StructureKind::Torus) {
    freq_ = 0.5;
    amp_ = 2.0;
  } else {
    freq_ = 1.0;
    amp_ = 1.0;
  }
  // The stored constant must agree with the Schwarzian of the chart itself.
  for (double theta : std::array{0.3, 1.1, -0.7}) {
    const auto [x, y] = develop_jet(Jet3::variable(theta));
    const Jet3 t = y / x;
    const double r = t.d2 / t.d1;
    const double s = t.d3 / t.d1 - 1.5 * r * r;
    if (std::abs(s - reference_schwarzian()) > 1e-12) {
      throw Error("projective structure: reference Schwarzian mismatch");
    }
  }
}

double ProjectiveStructure::image_period() const { return kPi / freq_; }

double ProjectiveStructure::chart(double theta) const { return develop(theta).affine(); }

ProjectivePoint ProjectiveStructure::develop(double theta) const {
  const double a = freq_ * theta;
  return ProjectivePoint(std::cos(a), amp_ * std::sin(a));
}

std::pair<Jet3, Jet3> ProjectiveStructure::develop_jet(const Jet3& theta) const {
  const Jet3 a = freq_ * theta;
  return {cos(a), amp_ * sin(a)};
}

double ProjectiveStructure::undevelop(const ProjectivePoint& p) const {
  const double period = image_period();
  // p ~ (cos(f theta), amp sin(f theta)); the sign ambiguity is the pi/f period.
  double a = std::atan2(p.y() / amp_, p.x());
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;
  double theta = a / freq_;
  if (theta >= period) theta -= period;
  return theta;
}

double ProjectiveStructure::undevelop_near(const ProjectivePoint& p, double near) const {
  const double period = image_period();
  const double base = undevelop(p);
  return base + period * std::round((near - base) / period);
}

}  // namespace circdiff
