#pragma once

#include <cmath>

namespace circdiff {

// Value and first three derivatives of a scalar function at a point.
struct Jet3 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static constexpr Jet3 variable(double x) { return {x, 1.0, 0.0, 0.0}; }
  static constexpr Jet3 constant(double x) { return {x, 0.0, 0.0, 0.0}; }
};

// h(g(x)) given h and its first three derivatives evaluated at g(x).
constexpr Jet3 chain(double h0, double h1, double h2, double h3, const Jet3& g) {
  return {h0, h1 * g.d1, h2 * g.d1 * g.d1 + h1 * g.d2,
          h3 * g.d1 * g.d1 * g.d1 + 3.0 * h2 * g.d1 * g.d2 + h1 * g.d3};
}

// outer(inner(x)) where outer_at_inner is the jet of outer at inner.v.
constexpr Jet3 chain(const Jet3& outer_at_inner, const Jet3& inner) {
  return chain(outer_at_inner.v, outer_at_inner.d1, outer_at_inner.d2, outer_at_inner.d3,
               inner);
}

constexpr Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
constexpr Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
constexpr Jet3 operator*(double s, const Jet3& a) {
  return {s * a.v, s * a.d1, s * a.d2, s * a.d3};
}
constexpr Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
          a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

inline Jet3 reciprocal(const Jet3& g) {
  const double r = 1.0 / g.v;
  return chain(r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r, g);
}

inline Jet3 operator/(const Jet3& a, const Jet3& b) { return a * reciprocal(b); }

inline Jet3 sin(const Jet3& g) {
  const double s = std::sin(g.v);
  const double c = std::cos(g.v);
  return chain(s, c, -s, -c, g);
}

inline Jet3 cos(const Jet3& g) {
  const double s = std::sin(g.v);
  const double c = std::cos(g.v);
  return chain(c, -s, -c, s, g);
}

}  // namespace circdiff
