#pragma once

#include <span>
#include <utility>

#include "hbl/complex.hpp"

namespace hbl {

enum class CapacityMethod { closed_form, elliptic, grid_oracle };

struct CapacityResult {
  double value = 0.0;
  CapacityMethod method = CapacityMethod::closed_form;
  double error_estimate = 0.0;
};

// d(C) over the vertices, d(0, C) over the segments of a polyline continuum.
struct ContinuumMetrics {
  double diameter = 0.0;
  double distance_to_origin = 0.0;

  static ContinuumMetrics of_polyline(std::span<const Complex> vertices);
};

// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

// Complete elliptic integral of the first kind K(k), 0 <= k < 1.
double elliptic_k(double k);

// Modulus of the annulus family: 2 pi / log(R'/R).
CapacityResult annulus_modulus(double inner_radius, double outer_radius);

// Groetzsch modulus function mu(r) = (pi/2) K(sqrt(1-r^2)) / K(r), 0 < r < 1.
double grotzsch_mu(double r);

// Capacity of the Groetzsch ring with complement {|z| <= 1} and [s, inf], s > 1.
CapacityResult gamma2(double s);

// Capacity of the Teichmueller ring with complement [-1, 0] and [t, inf], t > 0.
CapacityResult tau2(double t);

// Lower bound (1/4) tau2(d(0,C)/d(C)) for the family joining the closed disk
// of radius 1/2 to C inside the unit disk. Needs 0 < d(C) <= 1, d(0,C) > 0.
double lemma_b_bound(const ContinuumMetrics& c);

// (M/K, K M): the distortion window of a K-quasiconformal map on modulus M.
std::pair<double, double> qc_modulus_bounds(double K, double modulus);

}  // namespace hbl
