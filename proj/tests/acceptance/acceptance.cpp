// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "circdiff/errors.hpp"
#include "circdiff/geometry.hpp"
#include "circdiff/projective.hpp"
#include "circdiff/random.hpp"
#include "circdiff/schwarzian.hpp"
#include "circdiff/virasoro.hpp"

using namespace circdiff;

namespace {

const ProjectiveStructure kTorus = ProjectiveStructure::torus();
const ProjectiveStructure kLine = ProjectiveStructure::line();

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::pair<double, double> off_diagonal(RandomSource& rng, double margin) {
  const double a = rng.uniform(0, kTwoPi);
  return {a, a - rng.uniform(2 * margin, kTwoPi - 2 * margin)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome curvature() {
  const auto t0 = std::chrono::steady_clock::now();
  RandomSource rng(101);
  double worst = 0.0, worst_sd = 0.0;
  for (double c : {1.0, -1.0, 2.0, -2.0, 0.5}) {
    std::vector<double> k;
    for (int i = 0; i < 200; ++i) {
      const auto [a, b] = off_diagonal(rng, kCurvatureMargin);
      k.push_back(gaussian_curvature(NullMetric::curved(c), a, b));
      worst = std::max(worst, std::abs(k.back() - 1.0 / c));
    }
    double mean = 0.0, var = 0.0;
    for (double x : k) mean += x / k.size();
    for (double x : k) var += (x - mean) * (x - mean) / k.size();
    worst_sd = std::max(worst_sd, std::sqrt(var));
  }
  double worst_flat = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = off_diagonal(rng, kCurvatureMargin);
    worst_flat = std::max(worst_flat, std::abs(gaussian_curvature(NullMetric::flat(), a, b)));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-6 && worst_sd <= 1e-6 && worst_flat <= 1e-8 && secs < 5.0,
          fmt("|K - 1/c| max %.2e (sd %.2e), flat %.2e", worst, worst_sd, worst_flat) + fmt(", %.2f s", secs)};
}

Outcome kernels() {
  RandomSource rng(102);
  double s = 0.0, rot = 0.0, conf = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CircleDiffeo m = mobius_lift(rng.mobius(kTorus), kTorus);
    s = std::max(s, schwarzian_modified(m).sup_norm());
    for (int j = 0; j < 5; ++j) {
      const auto [a, b] = off_diagonal(rng, 0.05);
      conf = std::max(conf, std::abs(conformal_factor(m, a, b) - 1.0));
    }
    const CircleDiffeo r = CircleDiffeo::rotation(rng.uniform(-kPi, kPi));
    for (int j = 0; j < 16; ++j) rot = std::max(rot, std::abs(flat_cocycle(r, kTwoPi * j / 16)));
  }
  return {s <= 1e-9 && rot <= 1e-12 && conf <= 1e-9,
          fmt("S~(Mobius) %.2e, S_0(rotation) %.2e, |f - 1| %.2e", s, rot, conf)};
}

Outcome schwarzian_cocycle() {
  RandomSource rng(103);
  double worst = 0.0;
  for (const auto& st : {kTorus, kLine}) {
    for (int i = 0; i < 100; ++i) {
      const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
      const auto lhs = schwarzian_universal(compose(a, b), st);
      const auto rhs = schwarzian_universal(a, st).pullback(b) + schwarzian_universal(b, st);
      worst = std::max(worst, sup_distance(lhs, rhs));
    }
  }
  return {worst <= 1e-8, fmt("residual %.2e over 200 pairs", worst)};
}

Outcome hessian() {
  RandomSource rng(104);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CircleDiffeo d = rng.diffeo();
    for (int j = 0; j < 16; ++j) {
      const HessianCheck h = hessian_check(d, kTwoPi * j / 16);
      worst = std::max(worst, std::abs(h.hessian_value - h.schwarzian_value));
    }
  }
  return {worst <= 1e-5, fmt("|Hess f - S~/3| max %.2e", worst)};
}

Outcome cocycle_from_metric() {
  RandomSource rng(105);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const CircleDiffeo d = rng.diffeo();
    const QuadraticDifferential s = schwarzian_modified(d);
    for (double c : {1.0, -1.0, 2.0}) {
      for (int j = 0; j < 16; ++j) {
        const double t = kTwoPi * j / 16;
        worst = std::max(worst, std::abs(diagonal_restriction(d, c, t).value - c * s(t)));
      }
    }
  }
  return {worst <= 1e-5, fmt("|restriction - c S~| max %.2e", worst)};
}

Outcome gelfand_fuchs_values() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const double v = gelfand_fuchs(VectorFieldS1::sin_mode(n), VectorFieldS1::cos_mode(n), kTorus);
    worst = std::max(worst, std::abs(v - (n * n * n - n) * kPi));
  }
  RandomSource rng(106);
  double sl2 = 0.0;
  for (const auto& a : {VectorFieldS1::constant(1.0), VectorFieldS1::cos_mode(1), VectorFieldS1::sin_mode(1)}) {
    for (int i = 0; i < 20; ++i) {
      const VectorFieldS1 b = rng.field(4);
      sl2 = std::max({sl2, std::abs(gelfand_fuchs(a, b, kTorus)), std::abs(gelfand_fuchs(b, a, kTorus))});
    }
  }
  return {worst <= 1e-8 && sl2 <= 1e-10, fmt("|GF - (n^3 - n) pi| %.2e, sl(2) %.2e", worst, sl2)};
}

Outcome symplectic_two_path() {
  const auto t0 = std::chrono::steady_clock::now();
  RandomSource rng(107);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    const VectorFieldS1 a = rng.field(2, 0.5), b = rng.field(2, 0.5);
    const double c = rng.uniform(0.5, 2.0) * (rng.uniform(0, 1) < 0.5 ? -1.0 : 1.0);
    const double alg = omega_c_algebraic(d, a, b, c, kTorus);
    const double geo = omega_c_geometric(d, a, b, c);
    worst = std::max(worst, std::abs(alg - geo) / std::max(1.0, std::abs(alg)));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-3 && secs < 120.0, fmt("relative gap %.2e, %.2f s", worst, secs)};
}

Outcome flat_orbit() {
  RandomSource rng(108);
  double two_path = 0.0, equiv = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo(), e = rng.diffeo();
    const VectorFieldS1 a = rng.field(), b = rng.field();
    two_path = std::max(two_path, std::abs(omega_0(d, a, b) - omega_0_coadjoint(d, a, b)));
    const auto lhs = momentum_map(compose(d, e), OrbitCharge::flat()).q;
    const auto rhs = coadjoint_linear(e, momentum_map(d, OrbitCharge::flat()).q);
    equiv = std::max(equiv, sup_distance(lhs, rhs));
    const double c = rng.uniform(0.5, 2.0);
    const auto lc = momentum_map(compose(d, e), OrbitCharge::curved(c)).q;
    const auto rc = coadjoint_affine(e, momentum_map(d, OrbitCharge::curved(c)).q, c, kTorus);
    equiv = std::max(equiv, sup_distance(lc, rc));
  }
  return {two_path <= 1e-9 && equiv <= 1e-8, fmt("omega_0 two-path %.2e, equivariance %.2e", two_path, equiv)};
}

Outcome bott_thurston_checks() {
  RandomSource rng(109);
  const CircleDiffeo id = CircleDiffeo::identity();
  double ident = 0.0, cocycle = 0.0, assoc = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    ident = std::max({ident, std::abs(bott_thurston(d, id)), std::abs(bott_thurston(id, d))});
  }
  for (int i = 0; i < 50; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo(), c = rng.diffeo();
    cocycle = std::max(cocycle, std::abs(bott_thurston(a, b) + bott_thurston(compose(a, b), c) -
                                         bott_thurston(b, c) - bott_thurston(a, compose(b, c))));
    const VirasoroElement u{a, rng.uniform(-1, 1)}, v{b, rng.uniform(-1, 1)}, w{c, rng.uniform(-1, 1)};
    const VirasoroElement l = virasoro_multiply(virasoro_multiply(u, v), w);
    const VirasoroElement r = virasoro_multiply(u, virasoro_multiply(v, w));
    assoc = std::max(assoc, std::abs(l.t - r.t));
    for (int k = 0; k < 32; ++k) assoc = std::max(assoc, std::abs(l.diffeo(kTwoPi * k / 32) - r.diffeo(kTwoPi * k / 32)));
  }
  return {ident <= 1e-10 && cocycle <= 1e-8 && assoc <= 1e-7,
          fmt("identity %.2e, 2-cocycle %.2e, associativity %.2e", ident, cocycle, assoc)};
}

Outcome cartan() {
  RandomSource rng(110);
  double min_order = INFINITY;
  for (const auto& st : {kTorus, kLine}) {
    std::vector<std::pair<CircleDiffeo, double>> cases = {{CircleDiffeo(0.0, {0.0}, {0.3}), 0.0}};
    for (int i = 0; i < 5; ++i) cases.emplace_back(rng.diffeo(), rng.uniform(0, kTwoPi));
    for (const auto& [d, t] : cases) {
      const double ref = schwarzian_universal(d, st)(t);
      min_order = std::min(min_order, cartan_convergence(d, st, t, 0.05, 5, ref).order);
    }
  }
  return {min_order >= 1.0, fmt("minimum empirical order %.3f", min_order)};
}

Outcome ghys() {
  RandomSource rng(111);
  std::size_t min_count = 1000;
  int tested = 0;
  while (tested < 100) {
    const GhysResult g = ghys_zero_count(rng.diffeo());
    if (g.identically_zero) continue;
    min_count = std::min(min_count, g.count);
    ++tested;
  }
  return {min_count >= 4, fmt("minimum zero count %.0f over 100 diffeos", static_cast<double>(min_count))};
}

Outcome embedding() {
  RandomSource rng(112);
  double constraint = 0.0, push = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto [a, b] = off_diagonal(rng, 0.2);
    const double c = rng.uniform(0.5, 2.0);
    constraint = std::max(constraint, std::abs(hyperboloid_residual(embed(a, b, c)) - c));
    const InducedMetric m = induced_metric(a, b, c);
    const double f = metric_eval(NullMetric::curved(c), a, b);
    push = std::max({push, std::abs(2 * m.g12 - f) / f, std::abs(m.g11) / f, std::abs(m.g22) / f});
  }
  return {constraint <= 1e-10 && push <= 1e-6, fmt("constraint %.2e, pushforward relative %.2e", constraint, push)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"curvature of g_c is 1/c, flat is 0", curvature},
      {"isometry kernels", kernels},
      {"Schwarzian 1-cocycle", schwarzian_cocycle},
      {"transverse Hessian is S~/3", hessian},
      {"diagonal restriction is c S~", cocycle_from_metric},
      {"Gelfand-Fuchs values", gelfand_fuchs_values},
      {"omega_c geometric = algebraic", symplectic_two_path},
      {"flat orbit", flat_orbit},
      {"Bott-Thurston and Virasoro law", bott_thurston_checks},
      {"Cartan estimator order", cartan},
      {"four zeros of S~", ghys},
      {"hyperboloid embedding", embedding},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
