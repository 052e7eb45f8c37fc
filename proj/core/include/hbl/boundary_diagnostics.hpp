#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbl/analytic_function.hpp"
#include "hbl/gamma_curve.hpp"
#include "hbl/harmonic_map.hpp"

namespace hbl {

// ---------------------------------------------------------------------------
// L(m) along Gamma_{zeta,m}
// ---------------------------------------------------------------------------

// Integral of (1 - |a|^2)/(1 - |z|^2) |dz| over both branches of the curve
// restricted to delta <= |theta - theta0| <= min(pi, 1/m). The quadrature
// runs in u = log|theta - theta0|, where the integrand stays bounded.
double lm_integral(const AnalyticFunction& a, const GammaCurve& curve, double delta,
                   double abs_tol = 1e-9);

enum class DivergenceClass { convergent, divergent, inconclusive };

const char* to_string(DivergenceClass c) noexcept;

struct DivergenceVerdict {
  DivergenceClass cls = DivergenceClass::inconclusive;
  // convergent: extrapolated limit; otherwise growth per unit log(1/delta)
  // of a single branch (half the fitted slope).
  double limit_or_rate = 0.0;
  double slope = 0.0;           // fitted d value / d log(1/delta), both branches
  double fit_residual = 0.0;    // rms residual of that fit
  double tail_estimate = 0.0;   // geometric remainder beyond the last cutoff
};

struct LmEstimate {
  double m = 0.0;
  double zeta_angle = 0.0;
  std::vector<std::pair<double, double>> partial_values;  // (delta, value)
  DivergenceVerdict verdict;
  std::string conclusion;
};

struct LmOptions {
  double slope_threshold = 1e-3;
  double cauchy_tolerance = 1e-6;
  double fit_tolerance = 1e-2;  // rms residual relative to the fitted rise
  int fit_points = 4;           // trailing cutoffs used by the slope fit
  double abs_tol = 1e-9;
};

// 1e-1, 1e-2, ..., 1e-7.
std::vector<double> default_delta_schedule();

LmEstimate lm_classify(const AnalyticFunction& a, double zeta_angle, double m,
                       std::span<const double> schedule, const LmOptions& options = {});

// ---------------------------------------------------------------------------
// Radial behaviour of (1 - r)|h'(r zeta)|
// ---------------------------------------------------------------------------

enum class BlwVerdict { tends_to_zero, tends_to_positive, inconclusive };

const char* to_string(BlwVerdict v) noexcept;

struct BlwTrend {
  std::vector<double> radii;
  std::vector<double> values;
  BlwVerdict verdict = BlwVerdict::inconclusive;
  double c_estimate = 0.0;
};

struct BlwOptions {
  double zero_tolerance = 1e-3;
  double stabilization = 0.05;
  int window = 5;
};

// Thirteen radii 1 - 10^{-1 - k/4}, k = 0..12 (last is 1 - 1e-4).
std::vector<double> default_blw_radii();

BlwTrend blw_radial(const HarmonicMap& f, double zeta_angle, std::span<const double> radii,
                    const BlwOptions& options = {});

// ---------------------------------------------------------------------------
// Area of f(D)
// ---------------------------------------------------------------------------

struct AreaResult {
  double area = 0.0;
  double coarse_area = 0.0;     // same rule at half resolution
  double error_estimate = 0.0;
  long negative_cells = 0;      // nodes with negative Jacobian (sense reversal)
};

// Integral of |h'|^2 - |g'|^2 over the disk: midpoint rule in theta with
// `resolution` nodes, Gauss-Legendre in r with resolution/2 nodes.
AreaResult area_integral(const HarmonicMap& f, int resolution);

// ---------------------------------------------------------------------------
// Area bound against the L(m) integral
// ---------------------------------------------------------------------------

struct Thm54Options {
  std::vector<double> delta_schedule = default_delta_schedule();
  LmOptions lm;
  int area_resolution = 512;
  int disk_radial_samples = 64;
  int disk_angular_samples = 256;
  double sector_half_angle = kPi / 4.0;
};

struct Thm54Report {
  double area = 0.0;
  double H = 0.0;
  double integral_L = 0.0;           // trapezoid over the m grid (+inf if divergent)
  double rhs = 0.0;                  // pi H^2 / 0.15 * integral_L
  bool inequality_holds = false;     // area < rhs
  bool divergent_short_circuit = false;
  std::vector<LmEstimate> per_m;
  std::string conclusion;
};

// H is the sampled maximum of (1 - |z|)|h'(z)| over the disk of radius
// 1 - compact_margin together with a Stolz sector at zeta. Divergent L(m) at
// any grid point makes the right-hand side infinite. Inconclusive cells
// contribute their deepest partial value, a lower bound.
Thm54Report thm54_check(const HarmonicMap& f, double zeta_angle, std::span<const double> m_grid,
                        double compact_margin, const Thm54Options& options = {});

// ---------------------------------------------------------------------------
// Majorization (necessary condition |a| <= |F| only)
// ---------------------------------------------------------------------------

struct MajorizationCheck {
  bool necessary_ok = false;
  double worst_ratio = 0.0;
  Complex worst_point;
  std::string label = "necessary condition only";
};

MajorizationCheck majorization_check(const AnalyticFunction& a, const AnalyticFunction& F,
                                     std::span<const Complex> samples);

// ---------------------------------------------------------------------------
// Cluster set sampling
// ---------------------------------------------------------------------------

enum class Approach { radial, tangential_fan };

const char* to_string(Approach a) noexcept;

struct ClusterSample {
  std::vector<Complex> points;     // every sampled image point, path by path
  std::vector<Complex> endpoints;  // image of the last point of each path
  // (f*(zeta-), f*(zeta+)) when the map carries step boundary data
  std::optional<std::pair<Complex, Complex>> reference_segment;
  std::optional<double> max_distance;   // endpoints -> reference segment
  std::optional<double> coverage_gap;   // reference segment -> endpoints
};

// Radial: n samples along the radius to zeta. Tangential fan: n paths
// zeta (1 - rho e^{i psi}) with psi spread over (-pi/2, pi/2). Sampling stops
// at |z| = 1 - 1e-4.
ClusterSample cluster_sample(const HarmonicMap& f, double zeta_angle, Approach approach, int n);

}  // namespace hbl
