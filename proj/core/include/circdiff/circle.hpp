#pragma once

// The group of orientation-preserving circle diffeomorphisms, represented by lifts
//   phi(theta) = theta + shift + sum_n (a_n cos n theta + b_n sin n theta),
// circle vector fields, and PSL(2,R) acting through a projective structure.

#include <array>
#include <cstddef>
#include <vector>

#include "circdiff/jet.hpp"
#include "circdiff/numerics.hpp"
#include "circdiff/projective_structure.hpp"

namespace circdiff {

// Lifts whose derivative dips below this are rejected.
inline constexpr double kMinDerivative = 1e-6;
// Resolution cap for Fourier re-projection.
inline constexpr std::size_t kMaxProjectionGrid = 8192;

class CircleDiffeo {
 public:
  // Identity.
  CircleDiffeo() = default;
  // Throws InvalidDiffeo unless phi' >= kMinDerivative everywhere.
  CircleDiffeo(double shift, std::vector<double> cos, std::vector<double> sin);

  static CircleDiffeo identity() { return {}; }
  static CircleDiffeo rotation(double angle) { return CircleDiffeo(angle, {}, {}); }

  double shift() const { return shift_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }
  std::size_t modes() const { return cos_.size(); }
  bool is_rotation() const { return cos_.empty(); }
  double min_derivative() const { return min_derivative_; }

  // Lift value; eval(theta + 2 pi) == eval(theta) + 2 pi.
  double operator()(double theta) const;
  double eval(double theta) const { return (*this)(theta); }
  // order in {1, 2, 3}
  double derivative(double theta, int order) const;
  // phi, phi', phi'', phi''' at theta.
  Jet3 jet(double theta) const;
  // phi composed with an angle jet.
  Jet3 jet(const Jet3& theta) const { return chain(jet(theta.v), theta); }

  // phi(center + gap/2) - phi(center - gap/2), free of cancellation for small gaps.
  double lift_difference(double center, double gap) const;

 private:
  double shift_ = 0.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
  double min_derivative_ = 1.0;
};

// xi(theta) d/dtheta with xi a real trigonometric polynomial.
class VectorFieldS1 {
 public:
  VectorFieldS1() = default;
  VectorFieldS1(double mean, std::vector<double> cos, std::vector<double> sin);

  static VectorFieldS1 constant(double value) { return VectorFieldS1(value, {}, {}); }
  static VectorFieldS1 cos_mode(std::size_t n, double amplitude = 1.0);
  static VectorFieldS1 sin_mode(std::size_t n, double amplitude = 1.0);

  double mean() const { return mean_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }
  std::size_t modes() const { return cos_.size(); }

  double operator()(double theta) const { return derivative(theta, 0); }
  // order in 0..3
  double derivative(double theta, int order) const;
  PeriodicSamples samples(std::size_t n, int order = 0) const;

  // Upper bound of |xi'| from the coefficients.
  double derivative_bound() const;

  VectorFieldS1 operator+(const VectorFieldS1& other) const;
  VectorFieldS1 operator*(double s) const;

 private:
  double mean_ = 0.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// Element of PSL(2,R): t -> (a t + b) / (c t + d), normalized to determinant +1.
// m and -m represent the same element.
class MobiusElement {
 public:
  MobiusElement() = default;
  // Throws InvalidInput unless det > 0.
  MobiusElement(double a, double b, double c, double d);

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  double trace() const { return m_[0] + m_[3]; }

  MobiusElement operator*(const MobiusElement& rhs) const;
  MobiusElement inverse() const;

  ProjectivePoint apply(const ProjectivePoint& p) const;
  // Affine action; +/-infinity is a regular input and output.
  double apply(double t) const;

  // Max-abs distance between matrices, minimized over the sign ambiguity.
  double distance(const MobiusElement& other) const;

 private:
  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

// Rigid rotation by `angle` of the circle as seen through the developing map.
MobiusElement rigid_rotation(const ProjectiveStructure& structure, double angle);

// outer o inner
CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner);
CircleDiffeo inverse(const CircleDiffeo& d);
// Time-s map of d theta / ds = xi(theta).
CircleDiffeo flow(const VectorFieldS1& xi, double s);
// (xi1 xi2' - xi2 xi1') d/dtheta
VectorFieldS1 bracket(const VectorFieldS1& xi1, const VectorFieldS1& xi2);
// d^* xi = (xi o phi) / phi'
VectorFieldS1 pullback(const VectorFieldS1& xi, const CircleDiffeo& d);

// Pointwise lift of the circle map induced by m through the developing map. Lifts of
// the same element differ by multiples of structure.image_period().
double mobius_circle_action(const MobiusElement& m, const ProjectiveStructure& structure,
                            double theta);
CircleDiffeo mobius_lift(const MobiusElement& m, const ProjectiveStructure& structure);

}  // namespace circdiff
