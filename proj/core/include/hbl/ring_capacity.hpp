#pragma once

#include <variant>

#include "hbl/conformal_invariants.hpp"

namespace hbl {

// Closed disk {|z| <= radius} about the origin.
struct InnerDisk {
  double radius = 1.0;
};

// Complement {|z| >= radius}.
struct OuterCircle {
  double radius = 2.0;
};

// Ray {r e^{i angle} : r >= start}; the grid stops at truncation_radius.
struct OuterRay {
  double start = 2.0;
  double angle = 0.0;
  double truncation_radius = 1000.0;
};

struct RingDomainSpec {
  InnerDisk inner;
  std::variant<OuterCircle, OuterRay> outer;
  int grid_resolution = 256;  // angular cells; >= 32
};

struct RingCapacityResult : CapacityResult {
  double coarse_value = 0.0;        // same problem at half resolution
  double truncation_radius = 0.0;   // outer edge of the computational grid
  // Ray only: capacity with the truncation circle held at 1. The zero-flux
  // value is a lower and this an upper bound for the untruncated ring.
  double truncation_upper = 0.0;
  int iterations = 0;               // CG iterations on the fine grid
  double residual = 0.0;            // relative residual reached on the fine grid
};

struct RingSolverOptions {
  double residual_tolerance = 1e-10;
  int max_iterations = 100000;
};

// Capacity of the ring between the two components as the discrete Dirichlet
// energy of the potential that is 0 on the inner and 1 on the outer component.
//
// The Laplace problem is posed on a uniform grid in (log r, theta); both the
// equation and the energy are conformally invariant, so the inner circle and
// any centered outer circle are grid-aligned. A truncated ray carries a
// natural (zero-flux) condition on the truncation circle. The error estimate
// compares against the same problem at half resolution.
RingCapacityResult ring_capacity_numeric(const RingDomainSpec& spec,
                                         const RingSolverOptions& options = {});

}  // namespace hbl
