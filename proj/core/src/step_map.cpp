#include <algorithm>
#include <cmath>

#include "hbl/errors.hpp"
#include "hbl/harmonic_map.hpp"
#include "hbl/step_boundary.hpp"

namespace hbl {

double wrap_angle(double t) noexcept {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

StepBoundaryFunction::StepBoundaryFunction(std::vector<double> jump_points,
                                           std::vector<Complex> values)
    : jumps_(std::move(jump_points)), values_(std::move(values)) {
  const std::size_t n = jumps_.size();
  if (n < 2) throw InvalidArgument("step boundary function needs at least two arcs");
  if (values_.size() != n)
    throw InvalidArgument("step boundary function needs one value per jump point");
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(jumps_[k]) || jumps_[k] < 0.0 || jumps_[k] >= kTwoPi)
      throw InvalidArgument("jump points must lie in [0, 2pi)");
    if (k > 0 && !(jumps_[k] > jumps_[k - 1]))
      throw InvalidArgument("jump points must be strictly increasing");
    if (!is_finite(values_[k])) throw InvalidArgument("arc values must be finite");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (values_[k] == values_[(k + n - 1) % n])
      throw InvalidArgument("adjacent arc values must differ at jump point " + std::to_string(k));
  }
}

StepBoundaryFunction StepBoundaryFunction::regular_polygon(std::size_t n) {
  std::vector<double> t(n);
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    t[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = std::polar(1.0, t[k]);
  }
  return {std::move(t), std::move(w)};
}

double StepBoundaryFunction::arc_length(std::size_t k) const noexcept {
  const std::size_t n = jumps_.size();
  const double next = (k + 1 < n) ? jumps_[k + 1] : jumps_[0] + kTwoPi;
  return next - jumps_[k];
}

Complex StepBoundaryFunction::value_at(double t) const noexcept {
  const double a = wrap_angle(t);
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), a);
  if (it == jumps_.begin()) return values_.back();
  return values_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

std::pair<Complex, Complex> StepBoundaryFunction::one_sided_limits(double t,
                                                                   double angle_tol) const noexcept {
  const double a = wrap_angle(t);
  const std::size_t n = jumps_.size();
  for (std::size_t k = 0; k < n; ++k) {
    double d = std::abs(a - jumps_[k]);
    d = std::min(d, kTwoPi - d);
    if (d <= angle_tol) return {values_[(k + n - 1) % n], values_[k]};
  }
  const Complex v = value_at(a);
  return {v, v};
}

Complex StepBoundaryFunction::jump_unit(std::size_t k) const noexcept {
  return std::polar(1.0, jumps_[k]);
}

HarmonicMap poisson_step_map(const StepBoundaryFunction& b) {
  HarmonicMap f(AnalyticFunction::step_map_part(b, StepPartRole::analytic),
                AnalyticFunction::step_map_part(b, StepPartRole::coanalytic), Domain::disk,
                std::vector<Complex>(b.values().begin(), b.values().end()));
  f.steps_ = b;
  return f;
}

}  // namespace hbl
