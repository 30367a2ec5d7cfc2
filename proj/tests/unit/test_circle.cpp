#include <gtest/gtest.h>

#include <cmath>

#include "circdiff/circle.hpp"
#include "circdiff/errors.hpp"
#include "circdiff/random.hpp"
#include "oracles.hpp"

using namespace circdiff;

namespace {

const CircleDiffeo kB1(0.0, {0.0}, {0.3});  // theta + 0.3 sin theta

double sup_distance(const CircleDiffeo& a, const CircleDiffeo& b, std::size_t n = 256) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = PeriodicSamples::node(k, n);
    m = std::max(m, std::abs(a(t) - b(t)));
  }
  return m;
}

// Distance of lifts that may differ by a multiple of `period`.
double sup_distance_mod(const CircleDiffeo& a, const CircleDiffeo& b, double period) {
  double m = 0.0;
  for (std::size_t k = 0; k < 256; ++k) {
    const double t = PeriodicSamples::node(k, 256);
    m = std::max(m, std::abs(std::remainder(a(t) - b(t), period)));
  }
  return m;
}

}  // namespace

TEST(CircleDiffeo, EvalExamples) {
  EXPECT_DOUBLE_EQ(CircleDiffeo::identity()(1.3), 1.3);
  EXPECT_DOUBLE_EQ(CircleDiffeo::rotation(0.4)(1.3), 1.7);
  EXPECT_DOUBLE_EQ(kB1(0.0), 0.0);
}

TEST(CircleDiffeo, DerivativeExamples) {
  EXPECT_DOUBLE_EQ(CircleDiffeo::identity().derivative(0.9, 1), 1.0);
  EXPECT_DOUBLE_EQ(kB1.derivative(0.0, 1), 1.3);
  EXPECT_DOUBLE_EQ(kB1.derivative(0.0, 3), -0.3);
  EXPECT_THROW(kB1.derivative(0.0, 4), InvalidInput);
}

TEST(CircleDiffeo, DerivativesMatchTermwiseOracle) {
  RandomSource rng(1);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo(5);
    const oracle::TrigLift o{d.shift(), d.cos_coeffs(), d.sin_coeffs()};
    for (double t : {0.0, 0.7, 2.9, 5.5}) {
      EXPECT_NEAR(d(t), o(t), 1e-14);
      for (int order = 1; order <= 3; ++order) EXPECT_NEAR(d.derivative(t, order), o.derivative(t, order), 1e-12);
      const Jet3 j = d.jet(t);
      EXPECT_NEAR(j.d3, o.derivative(t, 3), 1e-12);
    }
  }
}

TEST(CircleDiffeo, RejectsNonMonotoneAndNearDegenerateLifts) {
  EXPECT_THROW(CircleDiffeo(0.0, {1.5}, {0.0}), InvalidDiffeo);
  // phi' = 1 + cos theta touches zero at pi.
  EXPECT_THROW(CircleDiffeo(0.0, {0.0}, {1.0}), InvalidDiffeo);
  // A narrow dip between grid nodes is still caught.
  std::vector<double> a(40, 0.0), b(40, 0.0);
  b[39] = 1.0 / 40.0 + 1e-4;
  EXPECT_THROW(CircleDiffeo(0.0, a, b), InvalidDiffeo);
  EXPECT_NO_THROW(CircleDiffeo(0.0, {0.0}, {0.99}));
}

TEST(CircleDiffeo, LiftIsEquivariant) {
  RandomSource rng(2);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    for (double t : {-3.0, 0.0, 1.1, 4.0}) EXPECT_NEAR(d(t + kTwoPi) - d(t), kTwoPi, 4e-15 * (1 + std::abs(t)));
  }
}

TEST(CircleDiffeo, LiftDifferenceMatchesDirectDifference) {
  RandomSource rng(3);
  const CircleDiffeo d = rng.diffeo();
  EXPECT_NEAR(d.lift_difference(1.0, 0.5), d(1.25) - d(0.75), 1e-14);
  // For tiny gaps the difference is phi' * gap to relative precision.
  const double g = 1e-9;
  EXPECT_NEAR(d.lift_difference(1.0, g) / g, d.derivative(1.0, 1), 1e-12);
}

TEST(Compose, RightIdentityAndRotations) {
  RandomSource rng(4);
  const CircleDiffeo d = rng.diffeo();
  const CircleDiffeo di = compose(d, CircleDiffeo::identity());
  EXPECT_NEAR(di.shift(), d.shift(), 1e-12);
  auto coeff = [](const std::vector<double>& v, std::size_t k) { return k < v.size() ? v[k] : 0.0; };
  for (std::size_t k = 0; k < std::max(d.modes(), di.modes()); ++k) {
    EXPECT_NEAR(coeff(di.cos_coeffs(), k), coeff(d.cos_coeffs(), k), 1e-12);
    EXPECT_NEAR(coeff(di.sin_coeffs(), k), coeff(d.sin_coeffs(), k), 1e-12);
  }
  const CircleDiffeo r = compose(CircleDiffeo::rotation(0.3), CircleDiffeo::rotation(0.5));
  EXPECT_TRUE(r.is_rotation());
  EXPECT_NEAR(r.shift(), 0.8, 1e-15);
}

TEST(Compose, MatchesPointwiseComposition) {
  RandomSource rng(5);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
    const CircleDiffeo ab = compose(a, b);
    for (double t : {0.1, 1.7, 3.3, 6.0}) EXPECT_NEAR(ab(t), a(b(t)), 1e-10);
  }
}

TEST(Compose, IsAssociative) {
  RandomSource rng(6);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo a = rng.diffeo(), b = rng.diffeo(), c = rng.diffeo();
    EXPECT_LE(sup_distance(compose(compose(a, b), c), compose(a, compose(b, c))), 1e-8);
  }
}

TEST(Inverse, Examples) {
  EXPECT_LE(sup_distance(inverse(CircleDiffeo::identity()), CircleDiffeo::identity()), 1e-15);
  EXPECT_NEAR(inverse(CircleDiffeo::rotation(0.7)).shift(), -0.7, 1e-15);
  EXPECT_LE(sup_distance(compose(inverse(kB1), kB1), CircleDiffeo::identity()), 1e-9);
  EXPECT_LE(sup_distance(compose(kB1, inverse(kB1)), CircleDiffeo::identity()), 1e-9);
}

TEST(Inverse, RandomRoundTrips) {
  RandomSource rng(7);
  for (int i = 0; i < 20; ++i) {
    const CircleDiffeo d = rng.diffeo();
    EXPECT_LE(sup_distance(compose(d, inverse(d)), CircleDiffeo::identity()), 1e-9);
  }
}

TEST(Flow, ZeroTimeAndConstantField) {
  RandomSource rng(8);
  EXPECT_LE(sup_distance(flow(rng.field(), 0.0), CircleDiffeo::identity()), 1e-15);
  EXPECT_LE(sup_distance(flow(VectorFieldS1::constant(1.0), 0.6), CircleDiffeo::rotation(0.6)), 1e-12);
}

TEST(Flow, SineFieldMatchesSeparableSolution) {
  // theta' = sin theta  =>  tan(theta/2) = e^s tan(theta0/2)
  const VectorFieldS1 xi = VectorFieldS1::sin_mode(1);
  for (double s : {-0.8, 0.3, 1.0}) {
    const CircleDiffeo f = flow(xi, s);
    for (double t0 : {kPi / 2, 0.4, 2.5, -2.0}) {
      const double exact = 2.0 * std::atan(std::exp(s) * std::tan(t0 / 2.0));
      EXPECT_NEAR(f(t0), exact, 1e-10) << "s=" << s << " theta0=" << t0;
    }
  }
}

TEST(Flow, OneParameterGroup) {
  RandomSource rng(9);
  for (int i = 0; i < 10; ++i) {
    const VectorFieldS1 xi = rng.field(3, 0.3);
    const double s = rng.uniform(-0.5, 0.5), t = rng.uniform(-0.5, 0.5);
    EXPECT_LE(sup_distance(flow(xi, s + t), compose(flow(xi, s), flow(xi, t))), 1e-8);
  }
}

TEST(Flow, StabilityGuard) {
  const VectorFieldS1 xi = VectorFieldS1::sin_mode(5);  // max |xi'| = 5
  EXPECT_THROW(flow(xi, 1.2), IllConditioned);
  EXPECT_NO_THROW(flow(xi, 0.1));
}

TEST(Bracket, Examples) {
  RandomSource rng(10);
  const VectorFieldS1 xi = rng.field();
  const VectorFieldS1 z = bracket(xi, xi);
  for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(z(t), 0.0, 1e-13);

  const VectorFieldS1 c = bracket(VectorFieldS1::constant(1.0), VectorFieldS1::sin_mode(1));
  const VectorFieldS1 m = bracket(VectorFieldS1::sin_mode(1), VectorFieldS1::cos_mode(1));
  for (double t : {0.0, 1.0, 4.0}) {
    EXPECT_NEAR(c(t), std::cos(t), 1e-14);
    EXPECT_NEAR(m(t), -1.0, 1e-14);
  }
}

TEST(Bracket, PointwiseFormulaAndJacobi) {
  RandomSource rng(11);
  for (int i = 0; i < 20; ++i) {
    const VectorFieldS1 a = rng.field(), b = rng.field(), c = rng.field();
    const VectorFieldS1 ab = bracket(a, b);
    for (double t : {0.3, 2.0, 5.1}) {
      EXPECT_NEAR(ab(t), a(t) * b.derivative(t, 1) - b(t) * a.derivative(t, 1), 1e-12);
    }
    const VectorFieldS1 j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    for (std::size_t k = 0; k < 64; ++k) EXPECT_NEAR(j(PeriodicSamples::node(k, 64)), 0.0, 1e-9);
  }
}

TEST(Pullback, TransformsAsVectorField) {
  RandomSource rng(12);
  const CircleDiffeo d = rng.diffeo();
  const VectorFieldS1 xi = rng.field();
  const VectorFieldS1 p = pullback(xi, d);
  for (double t : {0.2, 3.0}) EXPECT_NEAR(p(t), xi(d(t)) / d.derivative(t, 1), 1e-10);
}

TEST(Mobius, NormalizedToUnitDeterminant) {
  const MobiusElement m(2.0, 1.0, 1.0, 3.0);
  EXPECT_NEAR(m.a() * m.d() - m.b() * m.c(), 1.0, 1e-12);
  EXPECT_THROW(MobiusElement(1.0, 0.0, 0.0, -1.0), InvalidInput);
  EXPECT_LE((m * m.inverse()).distance(MobiusElement()), 1e-14);
  EXPECT_LE(MobiusElement(-2.0, -1.0, -1.0, -3.0).distance(m), 1e-15);
}

TEST(MobiusLift, IdentityMatrixGivesIdentity) {
  for (const auto& s : {ProjectiveStructure::torus(), ProjectiveStructure::line()}) {
    EXPECT_LE(sup_distance_mod(mobius_lift(MobiusElement(), s), CircleDiffeo::identity(), s.image_period()), 1e-14);
  }
}

TEST(MobiusLift, RigidRotationOfTorusChart) {
  // In the chart 2 tan(theta/2) the rigid rotation by alpha is conjugate to the plain
  // rotation matrix by alpha/2: [[cos, 2 sin], [-sin/2, cos]] of alpha/2.
  const double alpha = 0.9;
  const MobiusElement m(std::cos(alpha / 2), 2 * std::sin(alpha / 2), -std::sin(alpha / 2) / 2, std::cos(alpha / 2));
  const auto torus = ProjectiveStructure::torus();
  EXPECT_LE(m.distance(rigid_rotation(torus, alpha)), 1e-15);
  for (std::size_t k = 0; k < 32; ++k) {
    const double t = PeriodicSamples::node(k, 32);
    // Check against the homogeneous action directly.
    const ProjectivePoint img = m.apply(torus.develop(t));
    const ProjectivePoint rot = torus.develop(t + alpha);
    EXPECT_NEAR(img.x() * rot.y() - img.y() * rot.x(), 0.0, 1e-14);
    EXPECT_NEAR(std::remainder(mobius_circle_action(m, torus, t) - (t + alpha), kTwoPi), 0.0, 1e-13);
  }
  EXPECT_LE(sup_distance_mod(mobius_lift(m, torus), CircleDiffeo::rotation(alpha), kTwoPi), 1e-12);
}

TEST(MobiusLift, HyperbolicElementFixesZeroAndPi) {
  const double s = 0.3;
  const MobiusElement m(std::exp(s), 0.0, 0.0, std::exp(-s));
  const CircleDiffeo d = mobius_lift(m, ProjectiveStructure::torus());
  EXPECT_NEAR(std::remainder(d(0.0), kTwoPi), 0.0, 1e-12);
  EXPECT_NEAR(std::remainder(d(kPi) - kPi, kTwoPi), 0.0, 1e-12);
  EXPECT_NEAR(d.derivative(0.0, 1), std::exp(2 * s), 1e-10);
}

TEST(MobiusLift, IsHomomorphismModuloDeckPeriod) {
  RandomSource rng(13);
  for (const auto& s : {ProjectiveStructure::torus(), ProjectiveStructure::line()}) {
    for (int i = 0; i < 10; ++i) {
      const MobiusElement m1 = rng.mobius(s), m2 = rng.mobius(s);
      EXPECT_LE(sup_distance_mod(mobius_lift(m1 * m2, s), compose(mobius_lift(m1, s), mobius_lift(m2, s)),
                                 s.image_period()),
                1e-8);
    }
  }
}

TEST(RandomSource, IsDeterministicAndValid) {
  RandomSource a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const CircleDiffeo da = a.diffeo(), db = b.diffeo();
    EXPECT_EQ(da.cos_coeffs(), db.cos_coeffs());
    EXPECT_GE(da.min_derivative(), 0.2 - 1e-12);
  }
}
