#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace hbl {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// "a+bi" with round-trip precision; used in error messages.
std::string to_string(Complex z);

// Planar domains the library works with.
enum class Domain { disk, half_plane };

// Base point of a domain: 0 for the disk, i for the upper half-plane.
inline Complex base_point(Domain d) noexcept {
  return d == Domain::disk ? Complex{0.0, 0.0} : Complex{0.0, 1.0};
}

// Euclidean distance from z to the boundary of d (negative outside).
inline double boundary_distance(Domain d, Complex z) noexcept {
  return d == Domain::disk ? 1.0 - std::abs(z) : z.imag();
}

}  // namespace hbl
