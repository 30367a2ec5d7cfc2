#include "circdiff/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>

#include "circdiff/errors.hpp"
#include "circdiff/geometry.hpp"
#include "circdiff/projective.hpp"
#include "circdiff/schwarzian.hpp"
#include "circdiff/virasoro.hpp"

namespace circdiff {

namespace {

CheckResult upper(std::string name, std::string identity, double measured, double bound) {
  return {std::move(name), std::move(identity), measured, bound, false,
          std::isfinite(measured) && measured <= bound};
}

CheckResult lower(std::string name, std::string identity, double measured, double bound) {
  return {std::move(name), std::move(identity), measured, bound, true,
          std::isfinite(measured) && measured >= bound};
}

const ProjectiveStructure kTorus = ProjectiveStructure::torus();
const ProjectiveStructure kLine = ProjectiveStructure::line();

// Off-diagonal pair with at least `margin` of angular separation.
std::string label(const char* prefix, double c) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s_c=%g", prefix, c);
  return buf;
}

std::pair<double, double> off_diagonal(RandomSource& rng, double margin) {
  while (true) {
    const double a = rng.uniform(0.0, kTwoPi);
    const double b = rng.uniform(0.0, kTwoPi);
    if (std::abs(std::remainder(a - b, kTwoPi)) >= margin) return {a, b};
  }
}

SuiteReport cocycles(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"cocycles", {}};
  const std::size_t n = cfg.grid;

  for (const ProjectiveStructure* s : {&kTorus, &kLine}) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const CircleDiffeo a = rng.diffeo();
      const CircleDiffeo b = rng.diffeo();
      const auto lhs = schwarzian_universal(compose(a, b), *s, n);
      const auto rhs = schwarzian_universal(a, *s, n).pullback(b) + schwarzian_universal(b, *s, n);
      worst = std::max(worst, sup_distance(lhs, rhs));
    }
    r.checks.push_back(upper("schwarzian_cocycle_" + std::string(s->name()),
                             "S(phi o psi) = psi^* S(phi) + S(psi)", worst, 1e-8));
  }

  double worst_e = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CircleDiffeo a = rng.diffeo();
    const CircleDiffeo b = rng.diffeo();
    const auto lhs = cocycle_E(compose(a, b), DensityChoice::UniformAngle, n);
    const auto rhs = cocycle_E(a, DensityChoice::UniformAngle, n).pullback(b) +
                     cocycle_E(b, DensityChoice::UniformAngle, n);
    worst_e = std::max(worst_e, sup_distance(lhs, rhs));
  }
  r.checks.push_back(upper("euclidean_cocycle", "E(phi o psi) = E(phi) o psi + E(psi)", worst_e, 1e-10));

  double worst_triple = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CircleDiffeo d = rng.diffeo();
    worst_triple = std::max(worst_triple,
                            sup_distance(schwarzian_from_triple(d, n), schwarzian_classical(d, n)));
  }
  r.checks.push_back(upper("triple_identity", "A' - A^2/2 = S(phi)", worst_triple, 1e-10));

  double worst_kernel = 0.0;
  for (const ProjectiveStructure* s : {&kTorus, &kLine}) {
    for (int i = 0; i < 100; ++i) {
      worst_kernel = std::max(worst_kernel,
                              schwarzian_universal(mobius_lift(rng.mobius(*s), *s), *s, n).sup_norm());
    }
  }
  r.checks.push_back(upper("mobius_kernel", "S(Mobius lift) = 0", worst_kernel, 1e-9));

  // Mobius lifts of the torus structure are isometries of every g_c.
  double worst_iso = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CircleDiffeo d = mobius_lift(rng.mobius(kTorus), kTorus);
    for (int j = 0; j < 5; ++j) {
      const auto [t1, t2] = off_diagonal(rng, 0.05);
      worst_iso = std::max(worst_iso, std::abs(conformal_factor(d, t1, t2) - 1.0));
    }
  }
  r.checks.push_back(upper("mobius_isometry", "f(Mobius lift) = 1", worst_iso, 1e-9));

  double worst_rot = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CircleDiffeo d = CircleDiffeo::rotation(rng.uniform(-kPi, kPi));
    for (int j = 0; j < 16; ++j) worst_rot = std::max(worst_rot, std::abs(flat_cocycle(d, kTwoPi * j / 16.0)));
  }
  r.checks.push_back(upper("rotation_flat_isometry", "phi'^2 - 1 = 0 for rotations", worst_rot, 1e-12));

  double worst_conf = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CircleDiffeo a = rng.diffeo();
    const CircleDiffeo b = rng.diffeo();
    const CircleDiffeo ab = compose(a, b);
    for (int j = 0; j < 10; ++j) {
      const auto [t1, t2] = off_diagonal(rng, 0.05);
      const double lhs = conformal_factor(ab, t1, t2);
      const double rhs = conformal_factor(a, b(t1), b(t2)) * conformal_factor(b, t1, t2);
      worst_conf = std::max(worst_conf, std::abs(lhs - rhs));
    }
  }
  r.checks.push_back(upper("conformal_factor_cocycle", "f(phi o psi) = (f(phi) o psi) f(psi)",
                           worst_conf, 1e-10));

  double worst_sc = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CircleDiffeo a = rng.diffeo();
    const CircleDiffeo b = rng.diffeo();
    const CircleDiffeo ab = compose(a, b);
    const double c = rng.uniform(0.5, 2.0);
    for (int j = 0; j < 8; ++j) {
      const double t = rng.uniform(0.0, kTwoPi);
      const double lhs = diagonal_restriction(ab, c, t, cfg.extrapolation).value;
      const double pb = b.derivative(t, 1);
      const double rhs = diagonal_restriction(a, c, b(t), cfg.extrapolation).value * pb * pb +
                         diagonal_restriction(b, c, t, cfg.extrapolation).value;
      worst_sc = std::max(worst_sc, std::abs(lhs - rhs));
    }
  }
  r.checks.push_back(upper("metric_cocycle", "S_c(phi o psi) = psi^* S_c(phi) + S_c(psi)", worst_sc, 1e-5));
  return r;
}

SuiteReport curvature(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"curvature", {}};
  for (double c : {1.0, -1.0, 2.0, -2.0, 0.5}) {
    const NullMetric g = NullMetric::curved(c);
    double worst = 0.0;
    double sum = 0.0, sum2 = 0.0;
    const int count = 200;
    for (int i = 0; i < count; ++i) {
      const auto [a, b] = off_diagonal(rng, kCurvatureMargin);
      const double k = gaussian_curvature(g, a, b);
      worst = std::max(worst, std::abs(k - 1.0 / c));
      sum += k;
      sum2 += k * k;
    }
    const double mean = sum / count;
    const double sd = std::sqrt(std::max(0.0, sum2 / count - mean * mean));
    r.checks.push_back(upper(label("curved", c), "K = 1/c", worst, 1e-6));
    r.checks.push_back(upper(label("curved_spread", c), "K constant", sd, 1e-6));
  }
  double worst_flat = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = off_diagonal(rng, kCurvatureMargin);
    worst_flat = std::max(worst_flat, std::abs(gaussian_curvature(NullMetric::flat(), a, b)));
  }
  r.checks.push_back(upper("flat", "K = 0 for g_0", worst_flat, 1e-8));

  double worst_pull = 0.0;
  for (int i = 0; i < 10; ++i) {
    const NullMetric g = NullMetric::pullback(NullMetric::curved(2.0), rng.diffeo());
    for (int j = 0; j < 10; ++j) {
      const auto [a, b] = off_diagonal(rng, 0.2);
      worst_pull = std::max(worst_pull, std::abs(gaussian_curvature(g, a, b) - 0.5));
    }
  }
  r.checks.push_back(upper("pullback", "K(phi^* g_2) = 1/2", worst_pull, 1e-5));

  double worst_constraint = 0.0, worst_push = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto [a, b] = off_diagonal(rng, 0.2);
    const double c = rng.uniform(0.5, 2.0);
    worst_constraint = std::max(worst_constraint, std::abs(hyperboloid_residual(embed(a, b, c)) - c));
    const InducedMetric m = induced_metric(a, b, c);
    const double f = metric_eval(NullMetric::curved(c), a, b);
    worst_push = std::max({worst_push, std::abs(2.0 * m.g12 - f) / std::abs(f),
                           std::abs(m.g11) / std::abs(f), std::abs(m.g22) / std::abs(f)});
  }
  r.checks.push_back(upper("embedding_constraint", "x^2 + y^2 - t^2 = c", worst_constraint, 1e-10));
  r.checks.push_back(upper("embedding_metric", "pushforward of dx^2 + dy^2 - dt^2 = g_c", worst_push, 1e-6));
  return r;
}

SuiteReport hessian(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"hessian", {}};
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CircleDiffeo d = rng.diffeo();
    for (int j = 0; j < 16; ++j) {
      const HessianCheck h = hessian_check(d, kTwoPi * j / 16.0, cfg.extrapolation);
      worst = std::max(worst, std::abs(h.hessian_value - h.schwarzian_value));
    }
  }
  r.checks.push_back(upper("transverse_hessian", "Hess f(phi) = S~(phi)/3 on the diagonal", worst, 1e-5));

  for (double c : {1.0, -1.0, 2.0}) {
    RandomSource local(cfg.seed + 1);
    double w = 0.0;
    for (int i = 0; i < 10; ++i) {
      const CircleDiffeo d = local.diffeo();
      const QuadraticDifferential s = schwarzian_modified(d, cfg.grid);
      for (int j = 0; j < 16; ++j) {
        const double t = kTwoPi * j / 16.0;
        w = std::max(w, std::abs(diagonal_restriction(d, c, t, cfg.extrapolation).value - c * s(t)));
      }
    }
    r.checks.push_back(upper(label("diagonal_restriction", c),
                             "3/2 (phi^* g_c - g_c) on the diagonal = c S~(phi)", w, 1e-5));
  }
  return r;
}

SuiteReport symplectic(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"symplectic", {}};

  double worst_gf = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const double v = gelfand_fuchs(VectorFieldS1::sin_mode(n), VectorFieldS1::cos_mode(n), kTorus);
    worst_gf = std::max(worst_gf, std::abs(v - (n * n * n - n) * kPi));
  }
  r.checks.push_back(upper("gelfand_fuchs_values", "GF(sin n, cos n) = (n^3 - n) pi", worst_gf, 1e-8));

  const std::vector<VectorFieldS1> sl2 = {VectorFieldS1::constant(1.0), VectorFieldS1::cos_mode(1),
                                          VectorFieldS1::sin_mode(1)};
  double worst_sl2 = 0.0;
  for (const auto& a : sl2) {
    for (int i = 0; i < 10; ++i) {
      worst_sl2 = std::max(worst_sl2, std::abs(gelfand_fuchs(a, rng.field(), kTorus)));
    }
  }
  r.checks.push_back(upper("gelfand_fuchs_sl2", "GF vanishes on sl(2,R)", worst_sl2, 1e-10));

  double worst_jacobi = 0.0;
  for (int i = 0; i < 20; ++i) {
    const VectorFieldS1 a = rng.field(), b = rng.field(), c = rng.field();
    const double v = gelfand_fuchs(bracket(a, b), c, kTorus) + gelfand_fuchs(bracket(b, c), a, kTorus) +
                     gelfand_fuchs(bracket(c, a), b, kTorus);
    worst_jacobi = std::max(worst_jacobi, std::abs(v));
  }
  double worst_ker = 0.0;
  for (const auto& a : sl2) {
    for (int i = 0; i < 10; ++i) {
      const double c = rng.uniform(0.5, 2.0);
      worst_ker = std::max(worst_ker, std::abs(omega_c_algebraic(CircleDiffeo::identity(), a, rng.field(), c,
                                                                 kTorus, cfg.grid)));
    }
  }
  r.checks.push_back(upper("omega_kernel_sl2", "omega_c(id)(xi1, .) = 0 for xi1 in sl(2,R)", worst_ker, 1e-9));

  r.checks.push_back(upper("gelfand_fuchs_cocycle", "GF([a,b],c) + cyclic = 0", worst_jacobi, 1e-9));

  double worst_omega = 0.0;
  GeometricOmegaConfig gcfg;
  gcfg.extrapolation = cfg.extrapolation;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    const VectorFieldS1 x1 = rng.field(2, 0.5), x2 = rng.field(2, 0.5);
    const double c = rng.uniform(0.5, 2.0) * (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const double alg = omega_c_algebraic(d, x1, x2, c, kTorus, cfg.grid);
    const double geo = omega_c_geometric(d, x1, x2, c, gcfg);
    worst_omega = std::max(worst_omega, std::abs(alg - geo) / std::max(1.0, std::abs(alg)));
  }
  r.checks.push_back(upper("omega_two_path", "3/2 int i L g = c(<S~, [xi1,xi2]> + GF)", worst_omega, 1e-3));

  double worst_o0 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    const VectorFieldS1 x1 = rng.field(), x2 = rng.field();
    worst_o0 = std::max(worst_o0, std::abs(omega_0(d, x1, x2, cfg.grid) - omega_0_coadjoint(d, x1, x2, cfg.grid)));
  }
  r.checks.push_back(upper("omega_0_two_path", "<g_0 on diagonal, [xi1,xi2]> = <coad(phi) dtheta^2, [xi1,xi2]>",
                           worst_o0, 1e-9));

  double worst_eq = 0.0, worst_eq0 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
    const double c = rng.uniform(0.5, 2.0);
    const OrbitPoint lhs = momentum_map(compose(a, b), OrbitCharge::curved(c), cfg.grid);
    const QuadraticDifferential rhs = coadjoint_affine(b, momentum_map(a, OrbitCharge::curved(c), cfg.grid).q, c, kTorus);
    worst_eq = std::max(worst_eq, sup_distance(lhs.q, rhs));
    const OrbitPoint l0 = momentum_map(compose(a, b), OrbitCharge::flat(), cfg.grid);
    const QuadraticDifferential r0 = coadjoint_linear(b, momentum_map(a, OrbitCharge::flat(), cfg.grid).q);
    worst_eq0 = std::max(worst_eq0, sup_distance(l0.q, r0));
  }
  r.checks.push_back(upper("momentum_equivariance", "J(phi o psi) = coad_c(psi) J(phi)", worst_eq, 1e-8));
  r.checks.push_back(upper("momentum_equivariance_flat", "J_0(phi o psi) = coad(psi) J_0(phi)", worst_eq0, 1e-8));

  double worst_da = 0.0;
  for (int i = 0; i < 5; ++i) {
    const CircleDiffeo d = rng.diffeo();
    const VectorFieldS1 x1 = rng.field(2, 0.5), x2 = rng.field(2, 0.5);
    for (const ProjectiveStructure* s : {&kTorus, &kLine}) {
      const DAlphaCheck v = d_alpha_check(d, x1, x2, *s);
      worst_da = std::max(worst_da, std::abs(v.left - v.right) / (1.0 + std::abs(v.right)));
    }
  }
  r.checks.push_back(upper("d_alpha", "d alpha = <S(phi), [xi1,xi2]> + GF", worst_da, 1e-4));
  return r;
}

SuiteReport bott_thurston_suite(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"bott-thurston", {}};
  const CircleDiffeo id = CircleDiffeo::identity();
  double worst_id = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    worst_id = std::max({worst_id, std::abs(bott_thurston(d, id, cfg.grid)),
                         std::abs(bott_thurston(id, d, cfg.grid))});
  }
  r.checks.push_back(upper("identity", "BT(phi, id) = BT(id, phi) = 0", worst_id, 1e-10));

  double worst_cocycle = 0.0, worst_assoc = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo(), c = rng.diffeo();
    const double lhs = bott_thurston(a, b, cfg.grid) + bott_thurston(compose(a, b), c, cfg.grid);
    const double rhs = bott_thurston(b, c, cfg.grid) + bott_thurston(a, compose(b, c), cfg.grid);
    worst_cocycle = std::max(worst_cocycle, std::abs(lhs - rhs));
    const VirasoroElement va{a, rng.uniform(-1, 1)}, vb{b, rng.uniform(-1, 1)}, vc{c, rng.uniform(-1, 1)};
    const VirasoroElement left = virasoro_multiply(virasoro_multiply(va, vb), vc);
    const VirasoroElement right = virasoro_multiply(va, virasoro_multiply(vb, vc));
    worst_assoc = std::max(worst_assoc, std::abs(left.t - right.t));
    for (int k = 0; k < 64; ++k) {
      const double t = kTwoPi * k / 64.0;
      worst_assoc = std::max(worst_assoc, std::abs(left.diffeo(t) - right.diffeo(t)));
    }
  }
  r.checks.push_back(upper("two_cocycle", "BT(a,b) + BT(ab,c) = BT(b,c) + BT(a,bc)", worst_cocycle, 1e-8));
  r.checks.push_back(upper("associativity", "(uv)w = u(vw) in the Virasoro group", worst_assoc, 1e-7));

  double worst_contact = 0.0;
  for (int i = 0; i < 10; ++i) {
    const VirasoroElement v{rng.diffeo(), rng.uniform(-1, 1)}, w{rng.diffeo(), rng.uniform(-1, 1)};
    const VectorFieldS1 xi = rng.field(2, 0.5);
    const double dt = rng.uniform(-1, 1);
    const VirasoroTangent moved = translate_tangent(v, xi, dt, w, Side::Right);
    worst_contact = std::max(worst_contact, std::abs(contact_form_eval(moved.base, moved.xi, moved.dt) -
                                                     contact_form_eval(v, xi, dt)));
  }
  r.checks.push_back(upper("contact_invariance", "alpha-hat invariant under right multiplication",
                           worst_contact, 1e-6));
  return r;
}

SuiteReport ghys(const SuiteConfig& cfg) {
  RandomSource rng(cfg.seed);
  SuiteReport r{"ghys", {}};
  double min_count = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const GhysResult g = ghys_zero_count(rng.diffeo(), cfg.grid);
    min_count = std::min(min_count, g.identically_zero ? std::numeric_limits<double>::infinity()
                                                       : static_cast<double>(g.count));
  }
  r.checks.push_back(lower("min_zero_count", "S~(phi) has at least four zeros", min_count, 4.0));
  return r;
}

using SuiteFn = std::function<SuiteReport(const SuiteConfig&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites = {
      {"cocycles", cocycles},   {"curvature", curvature},
      {"hessian", hessian},     {"symplectic", symplectic},
      {"bott-thurston", bott_thurston_suite}, {"ghys", ghys},
  };
  return suites;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cocycles", "curvature", "hessian",
                                                 "symplectic", "bott-thurston", "ghys"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  return it->second(config);
}

}  // namespace circdiff
