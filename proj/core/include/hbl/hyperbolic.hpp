#pragma once

#include "hbl/complex.hpp"

namespace hbl {

// Hyperbolic distance in the upper half-plane (curvature -1):
// cosh rho = 1 + |z1 - z2|^2 / (2 Im z1 Im z2).
double dist_halfplane(Complex z1, Complex z2);

// Hyperbolic distance in the unit disk: 2 artanh |w1 - w2| / |1 - conj(w1) w2|.
double dist_disk(Complex w1, Complex w2);

// z -> (a z + b) / (c z + d).
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  Complex operator()(Complex z) const;
  MobiusMap inverse() const;
  MobiusMap compose(const MobiusMap& inner) const;  // this o inner

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }

 private:
  Complex a_, b_, c_, d_;
};

// phi(w) = (b - conj(b) w) / (1 - w): maps the disk onto the half-plane with phi(0) = b.
MobiusMap mobius_disk_to_halfplane(Complex b);

// Disk automorphism w -> (w + c) / (1 + conj(c) w), sending 0 to c.
MobiusMap disk_automorphism(Complex c);

struct HyperbolicDisk {
  Complex center;
  double radius = 0.0;  // hyperbolic
  Domain domain = Domain::disk;
};

struct EuclideanCircle {
  Complex center;
  double radius = 0.0;
};

// The Euclidean circle bounding a hyperbolic disk.
EuclideanCircle hyperbolic_disk_euclidean(const HyperbolicDisk& d);

struct RadiusBoundCheck {
  double radius_bound = 0.0;  // log(constant / Im b)
  double distance = 0.0;      // rho_H(i, b)
  bool contains_i = false;    // distance < radius_bound
};

// Whether i lies in the hyperbolic disk about b of radius log(constant / Im b).
// constant = 10 is the base statement; 4 + eps gives the refined variant.
RadiusBoundCheck claim41_check(Complex b, double constant = 10.0);

}  // namespace hbl
