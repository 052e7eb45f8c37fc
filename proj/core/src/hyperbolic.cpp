#include "hbl/hyperbolic.hpp"

#include <cmath>

#include "hbl/errors.hpp"

namespace hbl {

namespace {

// arccosh(1 + t) for t >= 0 without cancellation near t = 0.
double acosh1p(double t) { return std::log1p(t + std::sqrt(t * (t + 2.0))); }

void require_halfplane(Complex z, const char* name) {
  if (!is_finite(z) || !(z.imag() > 0.0))
    throw InvalidArgument(std::string(name) + " = " + to_string(z) +
                          " is not in the upper half-plane");
}

void require_disk(Complex w, const char* name) {
  if (!is_finite(w) || !(std::abs(w) < 1.0))
    throw InvalidArgument(std::string(name) + " = " + to_string(w) + " is not in the unit disk");
}

}  // namespace

double dist_halfplane(Complex z1, Complex z2) {
  require_halfplane(z1, "z1");
  require_halfplane(z2, "z2");
  return acosh1p(std::norm(z1 - z2) / (2.0 * z1.imag() * z2.imag()));
}

double dist_disk(Complex w1, Complex w2) {
  require_disk(w1, "w1");
  require_disk(w2, "w2");
  const double q = std::abs(w1 - w2) / std::abs(1.0 - std::conj(w1) * w2);
  return 2.0 * std::atanh(std::min(q, 1.0));
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(a * d - b * c) == 0.0) throw InvalidArgument("Mobius map is degenerate (ad - bc = 0)");
}

Complex MobiusMap::operator()(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
  return {a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_, c_ * in.a_ + d_ * in.c_,
          c_ * in.b_ + d_ * in.d_};
}

MobiusMap mobius_disk_to_halfplane(Complex b) {
  require_halfplane(b, "b");
  return {-std::conj(b), b, Complex{-1.0, 0.0}, Complex{1.0, 0.0}};
}

MobiusMap disk_automorphism(Complex c) {
  require_disk(c, "c");
  return {1.0, c, std::conj(c), 1.0};
}

EuclideanCircle hyperbolic_disk_euclidean(const HyperbolicDisk& d) {
  if (!(d.radius > 0.0) || !std::isfinite(d.radius))
    throw InvalidArgument("hyperbolic radius must be positive");
  if (d.domain == Domain::half_plane) {
    require_halfplane(d.center, "center");
    const double y = d.center.imag();
    return {{d.center.real(), y * std::cosh(d.radius)}, y * std::sinh(d.radius)};
  }
  require_disk(d.center, "center");
  // image of {|w| < t} under the automorphism sending 0 to the center
  const double t = std::tanh(0.5 * d.radius);
  const double c2 = std::norm(d.center);
  const double den = 1.0 - t * t * c2;
  return {d.center * ((1.0 - t * t) / den), t * (1.0 - c2) / den};
}

RadiusBoundCheck claim41_check(Complex b, double constant) {
  require_halfplane(b, "b");
  if (!(constant > 0.0)) throw InvalidArgument("radius constant must be positive");
  RadiusBoundCheck r;
  r.radius_bound = std::log(constant / b.imag());
  r.distance = dist_halfplane(Complex{0.0, 1.0}, b);
  r.contains_i = r.distance < r.radius_bound;
  return r;
}

}  // namespace hbl
