#include "hbl/conformal_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbl/errors.hpp"

namespace hbl {

ContinuumMetrics ContinuumMetrics::of_polyline(std::span<const Complex> vertices) {
  if (vertices.empty()) throw InvalidArgument("continuum polyline has no vertices");
  ContinuumMetrics m;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      m.diameter = std::max(m.diameter, std::abs(vertices[i] - vertices[j]));

  m.distance_to_origin = std::abs(vertices[0]);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Complex a = vertices[i];
    const Complex d = vertices[i + 1] - a;
    const double len2 = std::norm(d);
    double t = len2 > 0.0 ? -(a.real() * d.real() + a.imag() * d.imag()) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    m.distance_to_origin = std::min(m.distance_to_origin, std::abs(a + t * d));
  }
  return m;
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("agm needs positive arguments");
  for (int it = 0; it < 64; ++it) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * a) break;
  }
  return 0.5 * (a + b);
}

double elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("elliptic modulus must lie in [0, 1)");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  return kPi / (2.0 * agm(1.0, kp));
}

CapacityResult annulus_modulus(double inner_radius, double outer_radius) {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius) || !std::isfinite(outer_radius))
    throw InvalidArgument("annulus needs 0 < R < R'");
  return {kTwoPi / std::log(outer_radius / inner_radius), CapacityMethod::closed_form, 0.0};
}

namespace {

// mu from the pair (r, sqrt(1 - r^2)); K(k) = pi / (2 agm(1, k')), so the
// K ratio is a ratio of two means.
double mu_from_pair(double r, double rp) { return 0.5 * kPi * agm(1.0, rp) / agm(1.0, r); }

}  // namespace

double grotzsch_mu(double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("grotzsch_mu needs 0 < r < 1");
  return mu_from_pair(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

CapacityResult gamma2(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw InvalidArgument("gamma2 needs s > 1");
  const double mu = mu_from_pair(1.0 / s, std::sqrt((s - 1.0) * (s + 1.0)) / s);
  return {kTwoPi / mu, CapacityMethod::elliptic, 0.0};
}

CapacityResult tau2(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("tau2 needs t > 0");
  // gamma2(sqrt(t + 1)) with 1/s and sqrt(1 - 1/s^2) formed without cancellation
  const double mu = mu_from_pair(1.0 / std::sqrt(1.0 + t), std::sqrt(t / (1.0 + t)));
  return {2.0 * kTwoPi / mu, CapacityMethod::elliptic, 0.0};
}

double lemma_b_bound(const ContinuumMetrics& c) {
  if (!(c.diameter > 0.0) || c.diameter > 1.0)
    throw InvalidArgument("continuum diameter must satisfy 0 < d(C) <= 1");
  if (!(c.distance_to_origin > 0.0))
    throw InvalidArgument("continuum must stay away from the origin");
  return 0.25 * tau2(c.distance_to_origin / c.diameter).value;
}

std::pair<double, double> qc_modulus_bounds(double K, double modulus) {
  if (!(K >= 1.0)) throw InvalidArgument("distortion K must be at least 1");
  if (!(modulus >= 0.0)) throw InvalidArgument("modulus must be nonnegative");
  return {modulus / K, K * modulus};
}

}  // namespace hbl
