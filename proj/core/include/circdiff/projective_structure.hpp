#pragma once

#include <string_view>
#include <utility>

#include "circdiff/jet.hpp"

namespace circdiff {

// A point [x : y] of the real projective line, affine coordinate t = y / x.
// Stored normalized: x^2 + y^2 = 1 and the first nonzero coordinate positive.
class ProjectivePoint {
 public:
  ProjectivePoint(double x, double y);

  // +/-infinity maps to [0 : 1].
  static ProjectivePoint from_affine(double t);
  static ProjectivePoint infinity() { return ProjectivePoint(0.0, 1.0); }

  double x() const { return x_; }
  double y() const { return y_; }
  bool is_infinity() const { return x_ == 0.0; }
  // y / x, or +infinity at [0 : 1].
  double affine() const;

 private:
  double x_;
  double y_;
};

enum class StructureKind { Torus, Line };

// The two built-in projective structures on the circle, both with trivial holonomy:
//   Torus: developing map 2 tan(theta/2), homogeneous (cos(theta/2), 2 sin(theta/2))
//   Line:  developing map tan(theta),     homogeneous (cos(theta), sin(theta))
// The reference Schwarzian S(Phi) is the constant 1/2 (Torus) or 2 (Line).
class ProjectiveStructure {
 public:
  explicit ProjectiveStructure(StructureKind kind);

  static ProjectiveStructure torus() { return ProjectiveStructure(StructureKind::Torus); }
  static ProjectiveStructure line() { return ProjectiveStructure(StructureKind::Line); }

  StructureKind kind() const { return kind_; }
  std::string_view name() const { return kind_ == StructureKind::Torus ? "torus" : "line"; }

  double reference_schwarzian() const { return 2.0 * freq_ * freq_; }

  // Homogeneous pair is (cos(f theta), amp sin(f theta)).
  double frequency() const { return freq_; }
  double y_scale() const { return amp_; }

  // Developed images repeat with this period (2*pi for Torus, pi for Line).
  double image_period() const;

  // Affine chart value; +/-infinity at the pole.
  double chart(double theta) const;

  ProjectivePoint develop(double theta) const;

  // Unnormalized homogeneous components (x, y) of the developing map along an angle jet.
  std::pair<Jet3, Jet3> develop_jet(const Jet3& theta) const;

  // Angle in [0, image_period()) developing to p.
  double undevelop(const ProjectivePoint& p) const;

  // Representative of undevelop(p) closest to `near`.
  double undevelop_near(const ProjectivePoint& p, double near) const;

  friend bool operator==(const ProjectiveStructure& a, const ProjectiveStructure& b) {
    return a.kind_ == b.kind_;
  }

 private:
  StructureKind kind_;
  double freq_;  // theta multiplier inside the trigonometric functions
  double amp_;   // y-scale of the homogeneous pair
};

}  // namespace circdiff
