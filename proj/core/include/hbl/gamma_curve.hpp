#pragma once

#include "hbl/complex.hpp"

namespace hbl {

// theta -> (1 - m |theta - theta0|) e^{i theta}, 0 < |theta - theta0| <= min(pi, 1/m):
// two branches that spiral out of the disk toward zeta = e^{i theta0}.
class GammaCurve {
 public:
  GammaCurve(double zeta_angle, double m);

  double zeta_angle() const noexcept { return theta0_; }
  double m() const noexcept { return m_; }
  Complex zeta() const noexcept { return std::polar(1.0, theta0_); }
  // min(pi, 1/m)
  double max_offset() const noexcept;

  struct Point {
    Complex z;
    double speed;  // |dz/dtheta| = sqrt(m^2 + (1 - m|theta - theta0|)^2)
  };

  // Throws InvalidArgument when theta is outside the parameter range.
  Point at(double theta) const;

  // Same point addressed by signed offset s = theta - theta0; 1 - |z|^2 is
  // returned without cancellation as m|s| (2 - m|s|).
  Point at_offset(double s) const;
  double one_minus_abs2(double s) const noexcept;

 private:
  double theta0_;
  double m_;
};

inline GammaCurve::Point gamma_point(const GammaCurve& c, double theta) { return c.at(theta); }

}  // namespace hbl
