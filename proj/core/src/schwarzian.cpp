#include "circdiff/schwarzian.hpp"

#include <cmath>

namespace circdiff {

namespace {

double classical_at(const CircleDiffeo& d, double t) {
  const Jet3 j = d.jet(t);
  const double r = j.d2 / j.d1;
  return j.d3 / j.d1 - 1.5 * r * r;
}

}  // namespace

QuadraticDifferential schwarzian_classical(const CircleDiffeo& d, std::size_t n) {
  return QuadraticDifferential(n, [d](double t) { return classical_at(d, t); });
}

QuadraticDifferential schwarzian_modified(const CircleDiffeo& d, std::size_t n) {
  return QuadraticDifferential(n, [d](double t) {
    const double p = d.derivative(t, 1);
    return classical_at(d, t) + 0.5 * (p * p - 1.0);
  });
}

QuadraticDifferential schwarzian_universal(const CircleDiffeo& d,
                                           const ProjectiveStructure& structure, std::size_t n) {
  const double k = structure.reference_schwarzian();
  return QuadraticDifferential(n, [d, k](double t) {
    const double p = d.derivative(t, 1);
    return classical_at(d, t) + k * (p * p - 1.0);
  });
}

PeriodicFunction cocycle_E(const CircleDiffeo& d, DensityChoice, std::size_t n) {
  return PeriodicFunction(n, [d](double t) { return std::log(d.derivative(t, 1)); });
}

OneForm cocycle_A(const CircleDiffeo& d, std::size_t n) {
  return OneForm(n, [d](double t) { return d.derivative(t, 2) / d.derivative(t, 1); });
}

QuadraticDifferential schwarzian_from_triple(const CircleDiffeo& d, std::size_t n) {
  const OneForm a = cocycle_A(d, n);
  const PeriodicSamples da = spectral_derivative(a.samples(), 1);
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = da[k] - 0.5 * a.samples()[k] * a.samples()[k];
  return QuadraticDifferential(PeriodicSamples(std::move(u)));
}

QuadraticDifferential infinitesimal_schwarzian(const VectorFieldS1& xi,
                                               const ProjectiveStructure& structure,
                                               std::size_t n) {
  const double k2 = 2.0 * structure.reference_schwarzian();
  return QuadraticDifferential(
      n, [xi, k2](double t) { return xi.derivative(t, 3) + k2 * xi.derivative(t, 1); });
}

MobiusElement osculating_mobius(const CircleDiffeo& d, const ProjectiveStructure& structure,
                                double theta0) {
  // Rotate both charts so that the base point and its image sit at t = 0; there the
  // problem is g(u(theta)) = w(theta) with g fixing 0, solved from the 2-jets.
  const ProjectivePoint p = structure.develop(theta0);
  const ProjectivePoint q = structure.develop(d(theta0));
  const MobiusElement rp(p.x(), -p.y(), p.y(), p.x());
  const MobiusElement rq(q.x(), -q.y(), q.y(), q.x());

  auto rotated_chart = [](const MobiusElement& r, const std::pair<Jet3, Jet3>& xy) {
    const Jet3 y = r.a() * xy.second + r.b() * xy.first;
    const Jet3 x = r.c() * xy.second + r.d() * xy.first;
    return y / x;
  };
  const Jet3 u = rotated_chart(rp, structure.develop_jet(Jet3::variable(theta0)));
  const Jet3 w = rotated_chart(rq, structure.develop_jet(d.jet(Jet3::variable(theta0))));

  if (!(u.d1 > 0.0) || !(w.d1 > 0.0)) {
    throw IllConditioned("osculating homography: singular 2-jet system");
  }
  const double g1 = w.d1 / u.d1;
  const double g2 = (w.d2 - g1 * u.d2) / (u.d1 * u.d1);
  const MobiusElement k(g1, 0.0, -g2 / (2.0 * g1), 1.0);
  return rq.inverse() * k * rp;
}

GhysResult ghys_zero_count(const CircleDiffeo& d, std::size_t n) {
  const QuadraticDifferential s = schwarzian_modified(d, n);
  GhysResult out;
  if (s.sup_norm() < 1e-11) {
    out.identically_zero = true;
    return out;
  }
  const ZeroSet z = count_sign_changes(s.samples(), 1e-12);
  out.count = z.count;
  out.zeros = z.zeros;
  return out;
}

}  // namespace circdiff
