#include "hbl/local_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbl/errors.hpp"

namespace hbl {

namespace {

struct Sampled {
  double radius;
  std::vector<Complex> coeffs;  // c_j for j = -n..n stored at j + n
  double scale;
};

double default_radius(const HarmonicMap& f, Complex center) {
  return std::min(0.1, 0.5 * boundary_distance(f.domain(), center));
}

// DFT of t -> f(center + r e^{it}) - shift on N = 4 n equispaced samples.
Sampled sample_modes(const HarmonicMap& f, Complex center, const LocalFourierOptions& opt,
                     Complex shift) {
  if (opt.n_modes < 1) throw InvalidArgument("n_modes must be positive");
  if (!f.is_interior(center))
    throw DomainError("expansion center " + to_string(center) + " is not interior");
  const double r = opt.radius.value_or(default_radius(f, center));
  if (!(r > 0.0)) throw InvalidArgument("sampling radius must be positive");
  if (!(r < boundary_distance(f.domain(), center)))
    throw DomainError("sampling circle of radius " + std::to_string(r) + " about " +
                      to_string(center) + " leaves the domain");

  const int n = opt.n_modes;
  const int N = 4 * n;
  std::vector<Complex> samples(static_cast<std::size_t>(N));
  double scale = 0.0;
  for (int s = 0; s < N; ++s) {
    const double t = kTwoPi * s / N;
    samples[static_cast<std::size_t>(s)] = eval_map(f, center + std::polar(r, t)) - shift;
    scale = std::max(scale, std::abs(samples[static_cast<std::size_t>(s)]));
  }
  Sampled out{r, std::vector<Complex>(static_cast<std::size_t>(2 * n + 1)), scale};
  for (int j = -n; j <= n; ++j) {
    Complex acc{};
    for (int s = 0; s < N; ++s) {
      // exponent index reduced mod N keeps the twiddle exact at multiples of pi/2
      const int e = ((j * s) % N + N) % N;
      acc += samples[static_cast<std::size_t>(s)] * std::polar(1.0, -kTwoPi * e / N);
    }
    out.coeffs[static_cast<std::size_t>(j + n)] = acc / static_cast<double>(N);
  }
  return out;
}

}  // namespace

LocalExpansion local_fourier(const HarmonicMap& f, Complex center,
                             const LocalFourierOptions& options) {
  const Sampled s = sample_modes(f, center, options, Complex{});
  const int n = options.n_modes;
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * s.scale;
  LocalExpansion e;
  e.center = center;
  e.radius = s.radius;
  e.sample_scale = s.scale;
  e.analytic.assign(static_cast<std::size_t>(n + 1), Complex{});
  e.coanalytic.assign(static_cast<std::size_t>(n + 1), Complex{});
  double rk = 1.0;
  for (int k = 0; k <= n; ++k) {
    const Complex cp = s.coeffs[static_cast<std::size_t>(n + k)];
    const Complex cm = s.coeffs[static_cast<std::size_t>(n - k)];
    if (k == 0) {
      e.analytic[0] = cp;
    } else {
      if (std::abs(cp) > floor) e.analytic[static_cast<std::size_t>(k)] = cp / rk;
      if (std::abs(cm) > floor) e.coanalytic[static_cast<std::size_t>(k)] = std::conj(cm) / rk;
    }
    rk *= s.radius;
  }
  return e;
}

MultiplicityResult multiplicity(const HarmonicMap& f, Complex zero_point, double tolerance,
                                const LocalFourierOptions& options) {
  if (!(tolerance > 0.0)) throw InvalidArgument("multiplicity tolerance must be positive");
  const Complex value = eval_map(f, zero_point);
  const Sampled s = sample_modes(f, zero_point, options, value);
  const int n = options.n_modes;
  if (!(s.scale > 0.0))
    throw NumericalError("map is locally constant or the sampling radius is too small at " +
                         to_string(zero_point));

  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * s.scale;
  MultiplicityResult r;
  r.tolerance_used = tolerance;
  r.radius = s.radius;
  r.analytic_coefficients.assign(static_cast<std::size_t>(n + 1), Complex{});
  r.coanalytic_coefficients.assign(static_cast<std::size_t>(n + 1), Complex{});
  double rk = s.radius;
  for (int k = 1; k <= n; ++k) {
    const Complex cp = s.coeffs[static_cast<std::size_t>(n + k)];
    const Complex cm = s.coeffs[static_cast<std::size_t>(n - k)];
    if (std::abs(cp) > floor) r.analytic_coefficients[static_cast<std::size_t>(k)] = cp / rk;
    if (std::abs(cm) > floor) r.coanalytic_coefficients[static_cast<std::size_t>(k)] = std::conj(cm) / rk;
    if (!r.analytic_order && std::abs(cp) / s.scale > tolerance) r.analytic_order = k;
    if (!r.coanalytic_order && std::abs(cm) / s.scale > tolerance) r.coanalytic_order = k;
    rk *= s.radius;
  }
  if (!r.analytic_order && !r.coanalytic_order)
    throw NumericalError("all local coefficients are below tolerance at " +
                         to_string(zero_point) + ": locally constant or radius too small");
  if (r.analytic_order) {
    r.order = *r.analytic_order;
    r.sense_reversing_zero = r.coanalytic_order && *r.coanalytic_order < *r.analytic_order;
  } else {
    r.order = *r.coanalytic_order;
    r.sense_reversing_zero = true;
  }
  return r;
}

}  // namespace hbl
