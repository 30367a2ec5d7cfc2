#pragma once

// Dual of Vect(S): pairings, coadjoint actions, the Gelfand-Fuchs and Bott-Thurston
// cocycles, the forms alpha and alpha-hat, symplectic forms on metric classes, momentum
// maps, and the Virasoro group law.

#include <cstddef>
#include <utility>

#include "circdiff/circle.hpp"
#include "circdiff/numerics.hpp"
#include "circdiff/projective_structure.hpp"
#include "circdiff/schwarzian.hpp"

namespace circdiff {

struct VirasoroElement {
  CircleDiffeo diffeo;
  double t = 0.0;
};

// Central charge of an orbit: a nonzero c for the affine orbits, or the flat orbit.
class OrbitCharge {
 public:
  static OrbitCharge curved(double c);
  static OrbitCharge flat() { return OrbitCharge(0.0); }
  bool is_flat() const { return c_ == 0.0; }
  double value() const { return c_; }

 private:
  explicit OrbitCharge(double c) : c_(c) {}
  double c_;
};

struct OrbitPoint {
  QuadraticDifferential q;
  double charge = 0.0;
};

// Tangent vector L_xi g to a metric class, stored by its generator.
struct TangentAtMetric {
  VectorFieldS1 generator;
};

// Integral of u xi over the circle.
double pairing(const QuadraticDifferential& q, const VectorFieldS1& xi);

// phi^* q = u(phi) phi'^2. Anti-action: coad(d1 o d2) = coad(d2) coad(d1).
QuadraticDifferential coadjoint_linear(const CircleDiffeo& d, const QuadraticDifferential& q);
// coad(d) q + c S_Phi(d)
QuadraticDifferential coadjoint_affine(const CircleDiffeo& d, const QuadraticDifferential& q,
                                       double c, const ProjectiveStructure& structure);

// -<s_Phi(xi1), xi2>
double gelfand_fuchs(const VectorFieldS1& xi1, const VectorFieldS1& xi2,
                     const ProjectiveStructure& structure);

// c (<S_Phi(d), [xi1, xi2]> + GF(xi1, xi2))
double omega_c_algebraic(const CircleDiffeo& d, const VectorFieldS1& xi1, const VectorFieldS1& xi2,
                         double c, const ProjectiveStructure& structure,
                         std::size_t n = kDefaultGridSize);

struct GeometricOmegaConfig {
  ExtrapolationConfig extrapolation{};
  double flow_step = 1e-3;
  std::size_t grid = 128;
};

// 3/2 times the integral over the diagonal of i_{xi1} L_{xi2} g for g = d^* g_c, with the
// Lie derivative taken by centered differences of flows and the diagonal value by
// extrapolation.
double omega_c_geometric(const CircleDiffeo& d, const VectorFieldS1& xi1,
                         const VectorFieldS1& xi2, double c,
                         const GeometricOmegaConfig& config = {});

// <q0, [xi1, xi2]> with q0 the diagonal value of d^* g_0, read from the metric.
double omega_0(const CircleDiffeo& d, const VectorFieldS1& xi1, const VectorFieldS1& xi2,
               std::size_t n = kDefaultGridSize);
// Same value through coad(d) dtheta^2.
double omega_0_coadjoint(const CircleDiffeo& d, const VectorFieldS1& xi1,
                         const VectorFieldS1& xi2, std::size_t n = kDefaultGridSize);

// Curved c: (c S~(d), c). Flat: (phi'^2, 0).
OrbitPoint momentum_map(const CircleDiffeo& d, const OrbitCharge& charge,
                        std::size_t n = kDefaultGridSize);

// alpha(d)(xi) = 1/2 integral of A (A xi + xi'), the tangent d o flow(xi, s).
double alpha_eval(const CircleDiffeo& d, const VectorFieldS1& xi,
                  std::size_t n = kDefaultGridSize);
// alpha_0(d)(xi) = -integral of phi'^2 xi; d alpha_0 = <phi'^2, [xi1, xi2]>.
double alpha0_eval(const CircleDiffeo& d, const VectorFieldS1& xi,
                   std::size_t n = kDefaultGridSize);

struct DAlphaCheck {
  double left = 0.0;   // exterior derivative from finite differences
  double right = 0.0;  // <S_Phi(d), [xi1, xi2]> + GF_Phi(xi1, xi2)
};
// The 1-form differentiated is alpha + k alpha_0 with k = S(Phi); for the round density
// this is the form whose derivative carries the structure's Schwarzian. Throws
// IllConditioned when halving the step moves `left` by more than 10%.
DAlphaCheck d_alpha_check(const CircleDiffeo& d, const VectorFieldS1& xi1,
                          const VectorFieldS1& xi2, const ProjectiveStructure& structure,
                          double step = 1e-3);

// -1/2 integral of log((d1 o d2)') d2''/d2'
double bott_thurston(const CircleDiffeo& d1, const CircleDiffeo& d2,
                     std::size_t n = kDefaultGridSize);

VirasoroElement virasoro_multiply(const VirasoroElement& v1, const VirasoroElement& v2);

// alpha(v.diffeo)(xi) + dt
double contact_form_eval(const VirasoroElement& v, const VectorFieldS1& xi, double dt);

enum class Side { Left, Right };

struct VirasoroTangent {
  VirasoroElement base;
  VectorFieldS1 xi;
  double dt = 0.0;
};

// Image of the tangent (xi, dt) at v under multiplication by w on the given side. The
// central component is differentiated by centered differences of step h.
VirasoroTangent translate_tangent(const VirasoroElement& v, const VectorFieldS1& xi, double dt,
                                  const VirasoroElement& w, Side side, double h = 1e-4);

}  // namespace circdiff
