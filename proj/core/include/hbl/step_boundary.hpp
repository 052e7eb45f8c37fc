#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hbl/complex.hpp"

namespace hbl {

// Piecewise-constant function on the unit circle.
//
// Arc k is (t_k, t_{k+1}) with t_n = t_0 + 2*pi, and carries the value w_k.
// Every t_k is a genuine jump: adjacent values (cyclically) differ.
class StepBoundaryFunction {
 public:
  StepBoundaryFunction(std::vector<double> jump_points, std::vector<Complex> values);

  // Equal arcs starting at angle 0 with values at the n-th roots of unity;
  // n = 3 gives the triangle map onto the inscribed equilateral triangle.
  static StepBoundaryFunction regular_polygon(std::size_t n);

  std::size_t size() const noexcept { return jumps_.size(); }
  std::span<const double> jump_points() const noexcept { return jumps_; }
  std::span<const Complex> values() const noexcept { return values_; }

  // Angular length of arc k.
  double arc_length(std::size_t k) const noexcept;

  // Value on the arc containing angle t (any real t). At a jump point the
  // value of the arc that starts there is returned.
  Complex value_at(double t) const noexcept;

  // One-sided boundary limits at angle t: (limit from below, limit from above).
  std::pair<Complex, Complex> one_sided_limits(double t, double angle_tol = 1e-12) const noexcept;

  // Unit vector e^{i t_k}.
  Complex jump_unit(std::size_t k) const noexcept;

 private:
  std::vector<double> jumps_;
  std::vector<Complex> values_;
};

// Reduces an angle into [0, 2*pi).
double wrap_angle(double t) noexcept;

}  // namespace hbl
