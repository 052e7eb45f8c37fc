#pragma once

#include <optional>
#include <vector>

#include "hbl/harmonic_map.hpp"

namespace hbl {

// Coefficients of f(center + t) = sum_k a_k t^k + conj(sum_{k>=1} b_k t^k).
struct LocalExpansion {
  Complex center;
  double radius = 0.0;               // sampling circle radius
  std::vector<Complex> analytic;     // a_0 .. a_n
  std::vector<Complex> coanalytic;   // b_0 .. b_n, b_0 = 0
  double sample_scale = 0.0;         // max |f| on the sampling circle
};

struct LocalFourierOptions {
  std::optional<double> radius;      // default min(0.1, half distance to boundary)
  int n_modes = 32;
};

// Samples f on a circle about center and reads off both expansions by a
// discrete Fourier transform. Coefficients whose scaled size t^k |a_k| sits
// below the round-off floor of the samples are reported as exactly zero.
LocalExpansion local_fourier(const HarmonicMap& f, Complex center,
                             const LocalFourierOptions& options = {});

struct MultiplicityResult {
  int order = 0;                         // mu(z0, f)
  std::optional<int> analytic_order;     // first k >= 1 with a_k resolved
  std::optional<int> coanalytic_order;   // first k >= 1 with b_k resolved
  bool sense_reversing_zero = false;     // coanalytic order below analytic order
  std::vector<Complex> analytic_coefficients;
  std::vector<Complex> coanalytic_coefficients;
  double tolerance_used = 0.0;           // on |a_k| t^k / max|f - f(z0)|
  double radius = 0.0;
};

// Order of the zero of f - f(zero_point) at zero_point under the n <= m
// convention. The threshold is applied to coefficients scaled by the
// sampling radius and normalized by the largest sample.
MultiplicityResult multiplicity(const HarmonicMap& f, Complex zero_point, double tolerance = 1e-7,
                                const LocalFourierOptions& options = {});

}  // namespace hbl
