#include "circdiff/virasoro.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "circdiff/errors.hpp"
#include "circdiff/geometry.hpp"

namespace circdiff {

namespace {

std::size_t exact_grid(std::size_t modes) {
  return std::bit_ceil(std::max<std::size_t>(64, 4 * modes + 16));
}

template <typename F>
double quadrature(std::size_t n, F&& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += f(PeriodicSamples::node(k, n));
  return kTwoPi * sum / static_cast<double>(n);
}

}  // namespace

OrbitCharge OrbitCharge::curved(double c) {
  if (!std::isfinite(c) || c == 0.0) throw InvalidInput("curved orbit needs a nonzero charge");
  return OrbitCharge(c);
}

double pairing(const QuadraticDifferential& q, const VectorFieldS1& xi) {
  const std::size_t n = q.size();
  if (!q.has_exact() || exact_grid(xi.modes()) <= n) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += q.samples()[k] * xi(q.samples().theta(k));
    return kTwoPi * sum / static_cast<double>(n);
  }
  return quadrature(exact_grid(xi.modes()), [&](double t) { return q(t) * xi(t); });
}

QuadraticDifferential coadjoint_linear(const CircleDiffeo& d, const QuadraticDifferential& q) {
  return q.pullback(d);
}

QuadraticDifferential coadjoint_affine(const CircleDiffeo& d, const QuadraticDifferential& q,
                                       double c, const ProjectiveStructure& structure) {
  const QuadraticDifferential lin = coadjoint_linear(d, q);
  if (c == 0.0) return lin;
  return lin + schwarzian_universal(d, structure, q.size()).scaled(c);
}

double gelfand_fuchs(const VectorFieldS1& xi1, const VectorFieldS1& xi2,
                     const ProjectiveStructure& structure) {
  const std::size_t n = exact_grid(xi1.modes() + xi2.modes());
  return -pairing(infinitesimal_schwarzian(xi1, structure, n), xi2);
}

double omega_c_algebraic(const CircleDiffeo& d, const VectorFieldS1& xi1, const VectorFieldS1& xi2,
                         double c, const ProjectiveStructure& structure, std::size_t n) {
  const VectorFieldS1 br = bracket(xi1, xi2);
  return c * (pairing(schwarzian_universal(d, structure, n), br) +
              gelfand_fuchs(xi1, xi2, structure));
}

double omega_c_geometric(const CircleDiffeo& d, const VectorFieldS1& xi1,
                         const VectorFieldS1& xi2, double c, const GeometricOmegaConfig& config) {
  const NullMetric g = NullMetric::pullback(NullMetric::curved(c), d);
  const double h = config.flow_step;
  const NullMetric g_plus = NullMetric::pullback(g, flow(xi2, h));
  const NullMetric g_minus = NullMetric::pullback(g, flow(xi2, -h));
  // i_{xi1 x xi1} (H dtheta1 dtheta2) = H/2 (xi1(theta1) dtheta2 + xi1(theta2) dtheta1),
  // which restricts to H/2 (xi1(theta1) + xi1(theta2)) dtheta on the diagonal.
  auto diagonal_density = [&](double theta) {
    return richardson_limit(
               [&](double e) {
                 const double lie = (g_plus.eval_centered(theta, 2.0 * e) -
                                     g_minus.eval_centered(theta, 2.0 * e)) /
                                    (2.0 * h);
                 return 0.5 * lie * (xi1(theta + e) + xi1(theta - e));
               },
               config.extrapolation)
        .value;
  };
  return 1.5 * quadrature(config.grid, diagonal_density);
}

double omega_0(const CircleDiffeo& d, const VectorFieldS1& xi1, const VectorFieldS1& xi2,
               std::size_t n) {
  const NullMetric pulled = NullMetric::pullback(NullMetric::flat(), d);
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = pulled.eval_centered(PeriodicSamples::node(k, n), 0.0);
  return pairing(QuadraticDifferential(PeriodicSamples(std::move(u))), bracket(xi1, xi2));
}

double omega_0_coadjoint(const CircleDiffeo& d, const VectorFieldS1& xi1,
                         const VectorFieldS1& xi2, std::size_t n) {
  return pairing(coadjoint_linear(d, QuadraticDifferential::constant(1.0, n)), bracket(xi1, xi2));
}

OrbitPoint momentum_map(const CircleDiffeo& d, const OrbitCharge& charge, std::size_t n) {
  if (charge.is_flat()) {
    return {QuadraticDifferential(n, [d](double t) {
              const double p = d.derivative(t, 1);
              return p * p;
            }),
            0.0};
  }
  return {schwarzian_modified(d, n).scaled(charge.value()), charge.value()};
}

double alpha_eval(const CircleDiffeo& d, const VectorFieldS1& xi, std::size_t n) {
  return 0.5 * quadrature(n, [&](double t) {
           const double a = d.derivative(t, 2) / d.derivative(t, 1);
           return a * (a * xi(t) + xi.derivative(t, 1));
         });
}

double alpha0_eval(const CircleDiffeo& d, const VectorFieldS1& xi, std::size_t n) {
  return -quadrature(n, [&](double t) {
    const double p = d.derivative(t, 1);
    return p * p * xi(t);
  });
}

DAlphaCheck d_alpha_check(const CircleDiffeo& d, const VectorFieldS1& xi1,
                          const VectorFieldS1& xi2, const ProjectiveStructure& structure,
                          double step) {
  const double k = structure.reference_schwarzian();
  auto form = [&](const CircleDiffeo& psi, const VectorFieldS1& eta) {
    return alpha_eval(psi, eta) + k * alpha0_eval(psi, eta);
  };
  // Family F(s1, s2) = d o flow(xi1, s1) o flow(xi2, s2). Along s2 the generator is xi2;
  // along s1 at (0, s2) it is the pullback of xi1 by flow(xi2, s2).
  auto left_at = [&](double h) {
    const double term1 = (form(compose(d, flow(xi1, h)), xi2) -
                          form(compose(d, flow(xi1, -h)), xi2)) /
                         (2.0 * h);
    const CircleDiffeo fp = flow(xi2, h);
    const CircleDiffeo fm = flow(xi2, -h);
    const double term2 =
        (form(compose(d, fp), pullback(xi1, fp)) - form(compose(d, fm), pullback(xi1, fm))) /
        (2.0 * h);
    return term1 - term2;
  };
  const double coarse = left_at(step);
  const double fine = left_at(0.5 * step);
  if (std::abs(coarse - fine) > 0.1 * std::abs(fine) + 1e-6) {
    throw IllConditioned("d alpha: finite differences unstable under step halving");
  }
  DAlphaCheck out;
  out.left = coarse;
  out.right = pairing(schwarzian_universal(d, structure), bracket(xi1, xi2)) +
              gelfand_fuchs(xi1, xi2, structure);
  return out;
}

double bott_thurston(const CircleDiffeo& d1, const CircleDiffeo& d2, std::size_t n) {
  return -0.5 * quadrature(n, [&](double t) {
           const double p2 = d2.derivative(t, 1);
           return std::log(d1.derivative(d2(t), 1) * p2) * d2.derivative(t, 2) / p2;
         });
}

VirasoroElement virasoro_multiply(const VirasoroElement& v1, const VirasoroElement& v2) {
  return {compose(v1.diffeo, v2.diffeo), v1.t + v2.t + bott_thurston(v1.diffeo, v2.diffeo)};
}

double contact_form_eval(const VirasoroElement& v, const VectorFieldS1& xi, double dt) {
  return alpha_eval(v.diffeo, xi) + dt;
}

VirasoroTangent translate_tangent(const VirasoroElement& v, const VectorFieldS1& xi, double dt,
                                  const VirasoroElement& w, Side side, double h) {
  const CircleDiffeo moved_plus = compose(v.diffeo, flow(xi, h));
  const CircleDiffeo moved_minus = compose(v.diffeo, flow(xi, -h));
  VirasoroTangent out;
  if (side == Side::Left) {
    out.base = virasoro_multiply(w, v);
    out.xi = xi;
    out.dt = dt + (bott_thurston(w.diffeo, moved_plus) - bott_thurston(w.diffeo, moved_minus)) /
                      (2.0 * h);
  } else {
    out.base = virasoro_multiply(v, w);
    out.xi = pullback(xi, w.diffeo);
    out.dt = dt + (bott_thurston(moved_plus, w.diffeo) - bott_thurston(moved_minus, w.diffeo)) /
                      (2.0 * h);
  }
  return out;
}

}  // namespace circdiff
