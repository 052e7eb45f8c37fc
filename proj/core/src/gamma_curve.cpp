#include "hbl/gamma_curve.hpp"

#include <algorithm>
#include <cmath>

#include "hbl/errors.hpp"

namespace hbl {

GammaCurve::GammaCurve(double zeta_angle, double m) : theta0_(zeta_angle), m_(m) {
  if (!std::isfinite(zeta_angle)) throw InvalidArgument("zeta angle must be finite");
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("curve parameter m must be positive");
}

double GammaCurve::max_offset() const noexcept { return std::min(kPi, 1.0 / m_); }

GammaCurve::Point GammaCurve::at_offset(double s) const {
  const double a = std::abs(s);
  if (!(a > 0.0) || a > max_offset() * (1.0 + 1e-15))
    throw InvalidArgument("theta is outside the curve's parameter range 0 < |theta - theta0| <= min(pi, 1/m)");
  const double r = std::max(0.0, 1.0 - m_ * a);
  return {std::polar(r, theta0_ + s), std::sqrt(m_ * m_ + r * r)};
}

GammaCurve::Point GammaCurve::at(double theta) const { return at_offset(theta - theta0_); }

double GammaCurve::one_minus_abs2(double s) const noexcept {
  const double x = std::min(1.0, m_ * std::abs(s));
  return x * (2.0 - x);
}

}  // namespace hbl
