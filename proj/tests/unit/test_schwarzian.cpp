#include <gtest/gtest.h>

#include <cmath>

#include "circdiff/errors.hpp"
#include "circdiff/random.hpp"
#include "circdiff/schwarzian.hpp"
#include "oracles.hpp"

using namespace circdiff;

namespace {

const CircleDiffeo kB1(0.0, {0.0}, {0.3});
const CircleDiffeo kB2(0.0, {0.0, 0.0}, {0.0, 0.2});
const ProjectiveStructure kTorus = ProjectiveStructure::torus();
const ProjectiveStructure kLine = ProjectiveStructure::line();

double sup_of(const std::function<double(double)>& f, std::size_t n = 256) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(f(PeriodicSamples::node(k, n))));
  return m;
}

}  // namespace

TEST(CircleTensor, PullbackAndArithmetic) {
  const QuadraticDifferential q(64, [](double t) { return std::cos(t); });
  const QuadraticDifferential p = q.pullback(kB1);
  EXPECT_NEAR(p(0.4), std::cos(kB1(0.4)) * std::pow(kB1.derivative(0.4, 1), 2), 1e-15);
  const OneForm a(64, [](double t) { return std::sin(t); });
  EXPECT_NEAR(a.pullback(kB1)(0.4), std::sin(kB1(0.4)) * kB1.derivative(0.4, 1), 1e-15);
  EXPECT_NEAR((q + q.scaled(2.0))(1.0), 3 * std::cos(1.0), 1e-15);
  EXPECT_NEAR(sup_distance(q - q, QuadraticDifferential::zero(64)), 0.0, 0.0);
  // Sample-only tensors evaluate through the interpolant.
  const QuadraticDifferential s(PeriodicSamples::sample(32, [](double t) { return std::sin(3 * t); }));
  EXPECT_FALSE(s.has_exact());
  EXPECT_NEAR(s(0.123), std::sin(3 * 0.123), 1e-14);
  EXPECT_EQ(s.resampled(128).size(), 128u);
}

TEST(SchwarzianClassical, Examples) {
  EXPECT_EQ(schwarzian_classical(CircleDiffeo::identity()).sup_norm(), 0.0);
  EXPECT_EQ(schwarzian_classical(CircleDiffeo::rotation(1.1)).sup_norm(), 0.0);
  EXPECT_NEAR(schwarzian_classical(kB1)(0.0), -0.3 / 1.3, 1e-15);
  EXPECT_NEAR(schwarzian_classical(kB1)(0.0), -0.230769, 1e-6);
}

TEST(SchwarzianClassical, MatchesTermwiseOracle) {
  RandomSource rng(21);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo(6);
    const oracle::TrigLift o{d.shift(), d.cos_coeffs(), d.sin_coeffs()};
    const QuadraticDifferential s = schwarzian_classical(d);
    const QuadraticDifferential m = schwarzian_modified(d);
    for (double t : {0.0, 1.3, 2.7, 5.9}) {
      EXPECT_NEAR(s(t), o.schwarzian(t), 1e-12);
      EXPECT_NEAR(m(t), o.schwarzian_modified(t), 1e-12);
    }
  }
}

TEST(SchwarzianModified, RotationsAndMobiusLiftsVanish) {
  EXPECT_EQ(schwarzian_modified(CircleDiffeo::rotation(0.3)).sup_norm(), 0.0);
  RandomSource rng(22);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LE(schwarzian_modified(mobius_lift(rng.mobius(kTorus), kTorus)).sup_norm(), 1e-9);
  }
}

TEST(SchwarzianModified, LeadingOrderAlongFlowOfSinTwoTheta) {
  const VectorFieldS1 xi = VectorFieldS1::sin_mode(2);
  const double eps = 1e-4;
  const QuadraticDifferential plus = schwarzian_modified(flow(xi, eps));
  const QuadraticDifferential minus = schwarzian_modified(flow(xi, -eps));
  for (std::size_t k = 0; k < 32; ++k) {
    const double t = PeriodicSamples::node(k, 32);
    const double lead = -6.0 * std::cos(2 * t);
    // One-sided: the O(eps^2) term limits agreement to O(eps) relative.
    EXPECT_NEAR(plus(t) / eps, lead, 6.0 * 1e-3);
    // Centered: the even term cancels.
    EXPECT_NEAR((plus(t) - minus(t)) / (2 * eps), lead, 6.0 * 1e-6);
  }
}

TEST(SchwarzianUniversal, Examples) {
  RandomSource rng(23);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    EXPECT_LE(sup_distance(schwarzian_universal(d, kTorus), schwarzian_modified(d)), 1e-10);
    const oracle::TrigLift o{d.shift(), d.cos_coeffs(), d.sin_coeffs()};
    const double p = o.derivative(0.8, 1);
    EXPECT_NEAR(schwarzian_universal(d, kLine)(0.8), o.schwarzian(0.8) + 2.0 * (p * p - 1.0), 1e-12);
  }
  EXPECT_EQ(schwarzian_universal(CircleDiffeo::identity(), kLine).sup_norm(), 0.0);
  EXPECT_EQ(schwarzian_universal(CircleDiffeo::rotation(2.0), kTorus).sup_norm(), 0.0);
}

TEST(SchwarzianUniversal, OneCocycleForBothStructures) {
  RandomSource rng(24);
  for (const auto& s : {kTorus, kLine}) {
    for (int i = 0; i < 20; ++i) {
      const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
      const auto lhs = schwarzian_universal(compose(a, b), s);
      const auto rhs = schwarzian_universal(a, s).pullback(b) + schwarzian_universal(b, s);
      EXPECT_LE(sup_distance(lhs, rhs), 1e-8);
    }
  }
}

TEST(SchwarzianUniversal, KernelIsPSL2) {
  RandomSource rng(25);
  for (const auto& s : {kTorus, kLine}) {
    for (int i = 0; i < 20; ++i) EXPECT_LE(schwarzian_universal(mobius_lift(rng.mobius(s), s), s).sup_norm(), 1e-9);
  }
}

TEST(CocycleE, Examples) {
  EXPECT_EQ(cocycle_E(CircleDiffeo::identity()).sup_norm(), 0.0);
  EXPECT_EQ(cocycle_E(CircleDiffeo::rotation(0.5)).sup_norm(), 0.0);
  EXPECT_NEAR(cocycle_E(kB1)(0.0), std::log(1.3), 1e-15);
}

TEST(CocycleE, IsOneCocycle) {
  RandomSource rng(26);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
    const auto lhs = cocycle_E(compose(a, b));
    const auto rhs = cocycle_E(a).pullback(b) + cocycle_E(b);
    EXPECT_LE(sup_distance(lhs, rhs), 1e-10);
  }
}

TEST(CocycleA, Examples) {
  EXPECT_EQ(cocycle_A(CircleDiffeo::identity()).sup_norm(), 0.0);
  EXPECT_EQ(cocycle_A(CircleDiffeo::rotation(-0.5)).sup_norm(), 0.0);
  EXPECT_NEAR(cocycle_A(kB1)(kPi / 2), -0.3, 1e-15);
}

TEST(SchwarzianFromTriple, AgreesWithClassical) {
  EXPECT_LE(schwarzian_from_triple(CircleDiffeo::identity()).sup_norm(), 1e-15);
  EXPECT_NEAR(schwarzian_from_triple(kB1)(0.0), -0.3 / 1.3, 1e-12);
  RandomSource rng(27);
  for (int i = 0; i < 100; ++i) {
    const CircleDiffeo d = rng.diffeo();
    EXPECT_LE(sup_distance(schwarzian_from_triple(d), schwarzian_classical(d)), 1e-10);
  }
}

TEST(InfinitesimalSchwarzian, Examples) {
  EXPECT_LE(infinitesimal_schwarzian(VectorFieldS1::sin_mode(1), kTorus).sup_norm(), 1e-15);
  EXPECT_LE(infinitesimal_schwarzian(VectorFieldS1::constant(2.0), kTorus).sup_norm(), 1e-15);
  const auto s = infinitesimal_schwarzian(VectorFieldS1::sin_mode(2), kTorus);
  EXPECT_LE(sup_of([&](double t) { return s(t) + 6 * std::cos(2 * t); }), 1e-13);
  // The line structure has sl(2) spanned by 1, cos 2 theta, sin 2 theta.
  EXPECT_LE(infinitesimal_schwarzian(VectorFieldS1::cos_mode(2), kLine).sup_norm(), 1e-13);
}

TEST(InfinitesimalSchwarzian, LinearizationRemainderIsBounded) {
  RandomSource rng(28);
  for (const auto& s : {kTorus, kLine}) {
    for (int i = 0; i < 5; ++i) {
      const VectorFieldS1 xi = rng.field(3, 0.5);
      const auto lin = infinitesimal_schwarzian(xi, s);
      std::vector<double> r;
      for (double eps : {1e-2, 5e-3, 2.5e-3}) {
        const auto full = schwarzian_universal(flow(xi, eps), s);
        r.push_back(sup_distance(full, lin.scaled(eps)) / (eps * eps));
      }
      const double hi = *std::max_element(r.begin(), r.end());
      const double lo = *std::min_element(r.begin(), r.end());
      EXPECT_LT(hi, 1e4);
      EXPECT_LT(hi / lo, 1.2);  // settles to the eps^2 coefficient
    }
  }
}

TEST(OsculatingMobius, IdentityAndSelfOsculation) {
  EXPECT_LE(osculating_mobius(CircleDiffeo::identity(), kTorus, 0.7).distance(MobiusElement()), 1e-12);
  RandomSource rng(29);
  for (const auto& s : {kTorus, kLine}) {
    for (int i = 0; i < 10; ++i) {
      const MobiusElement m = rng.mobius(s);
      const MobiusElement h = osculating_mobius(mobius_lift(m, s), s, rng.uniform(0, kTwoPi));
      EXPECT_LE(h.distance(m), 1e-8);
    }
  }
}

TEST(OsculatingMobius, MatchesToSecondOrderAndThirdOrderIsSchwarzian) {
  RandomSource rng(30);
  for (const auto& s : {kTorus, kLine}) {
    for (int i = 0; i < 5; ++i) {
      const CircleDiffeo d = rng.diffeo();
      const double t0 = rng.uniform(0, kTwoPi);
      const MobiusElement h = osculating_mobius(d, s, t0);
      const MobiusElement hinv = h.inverse();
      // chi = h^-1 o phi read on the circle, lifted next to the identity.
      auto chi = [&](double t) {
        const double v = mobius_circle_action(hinv, s, d(t));
        return t + std::remainder(v - t, s.image_period());
      };
      const double step = 1e-3;
      EXPECT_NEAR(chi(t0), t0, 1e-12);
      EXPECT_NEAR(oracle::d1(chi, t0, step), 1.0, 1e-6);
      EXPECT_NEAR((chi(t0 + step) - 2 * chi(t0) + chi(t0 - step)) / (step * step), 0.0, 1e-6);
      // Richardson-corrected third difference, O(h^4).
      const double third = (4 * oracle::d3(chi, t0, 5e-3) - oracle::d3(chi, t0, 1e-2)) / 3;
      EXPECT_NEAR(third, schwarzian_universal(d, s)(t0), 1e-5);
    }
  }
}

TEST(Ghys, Examples) {
  const GhysResult b2 = ghys_zero_count(kB2);
  EXPECT_FALSE(b2.identically_zero);
  EXPECT_GE(b2.count, 4u);
  RandomSource rng(31);
  EXPECT_TRUE(ghys_zero_count(mobius_lift(rng.mobius(kTorus), kTorus)).identically_zero);
  EXPECT_TRUE(ghys_zero_count(CircleDiffeo::identity()).identically_zero);
}

TEST(Ghys, FlowOfSinThreeThetaIsStableUnderRefinement) {
  const CircleDiffeo d = flow(VectorFieldS1::sin_mode(3), 0.1);
  const GhysResult coarse = ghys_zero_count(d, 256);
  const GhysResult fine = ghys_zero_count(d, 512);
  ASSERT_GE(coarse.count, 4u);
  ASSERT_EQ(coarse.count, fine.count);
  for (std::size_t k = 0; k < coarse.count; ++k) EXPECT_NEAR(coarse.zeros[k], fine.zeros[k], 1e-6);
}

TEST(Ghys, RandomDiffeosHaveAtLeastFourZeros) {
  RandomSource rng(32);
  for (int i = 0; i < 100; ++i) {
    const GhysResult g = ghys_zero_count(rng.diffeo(5));
    if (!g.identically_zero) EXPECT_GE(g.count, 4u);
    EXPECT_EQ(g.count % 2, 0u);
  }
}
