#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbl/complex.hpp"
#include "hbl/conformal_invariants.hpp"
#include "hbl/harmonic_map.hpp"

namespace hbl {

// (C_j, r_j, M_j): a polyline continuum inside the disk of radius r_j on
// which |f - alpha| < M_j. M_j is stored as log(1/M_j) so that bounds far
// below the smallest double stay representable.
class KoebeSequenceItem {
 public:
  KoebeSequenceItem(std::vector<Complex> continuum, double r, double M);
  static KoebeSequenceItem with_log_bound(std::vector<Complex> continuum, double r,
                                          double log_inv_M);

  std::span<const Complex> continuum() const noexcept { return continuum_; }
  double r() const noexcept { return r_; }
  double log_inv_M() const noexcept { return log_inv_M_; }
  const ContinuumMetrics& metrics() const noexcept { return metrics_; }

 private:
  KoebeSequenceItem() = default;
  void validate();

  std::vector<Complex> continuum_;
  double r_ = 0.0;
  double log_inv_M_ = 0.0;
  ContinuumMetrics metrics_;
};

enum class Trend { unbounded, bounded, undetermined };

const char* to_string(Trend t) noexcept;

struct KoebeItemReport {
  double q = 0.0;               // tau2(1/d) log(1/M) (1-r)/(1+r)
  double modulus_lower = 0.0;   // (1/4) tau2(1/d)
  double modulus_upper = 0.0;   // 2 pi / ((1/2) log(1/M)), +inf when M >= 1
  double K = 0.0;               // (1+r)/(1-r)
  double diameter = 0.0;
};

struct KoebeReport {
  std::vector<KoebeItemReport> items;
  Trend trend = Trend::undetermined;
  double certificate = 0.0;     // threshold the trend is judged against
  double sup_q = 0.0;
  std::optional<double> w;      // d(f(closed disk 1/2), alpha), when supplied
  std::string conclusion;
};

struct KoebeOptions {
  double certificate = 16.0 * kPi;
};

// Per-item quantities and the modulus chain. Items with d(C_j) > 1/4 are
// rejected: the chain assumes 0 < d(C_j) <= 1/4.
KoebeReport koebe_quantity(std::span<const KoebeSequenceItem> items,
                           const KoebeOptions& options = {});

// Adds w = min |f(z) - alpha| over |z| <= 1/2 (sampled on a polar grid).
double koebe_w(const HarmonicMap& f, Complex alpha, int radial_samples = 64,
               int angular_samples = 256);

struct SecondFormItem {
  double value = 0.0;          // log(1/M) (1-r)/(1+r) / log(1/d)
  bool inequality_holds = false;  // tau2(1/d) log(1/M) >= (pi/2) log(1/M) / log(1/d)
  bool degenerate = false;     // log(1/d) at round-off level
};

std::vector<SecondFormItem> koebe_quantity_second_form(std::span<const KoebeSequenceItem> items);

// Zeros b_k in the upper half-plane with multiplicities mu_k.
struct ZeroSequence {
  std::vector<Complex> points;
  std::vector<int> multiplicities;
  double constant = 10.0;

  void validate() const;
};

struct VanishingOptions {
  double zero_tolerance = 1e-3;  // last-quartile maximum must fall below this
};

struct VanishingReport {
  std::vector<double> terms;     // ((c - Im b_k)/(c + Im b_k))^mu_k
  bool tends_to_zero = false;
  double last_quartile_max = 0.0;
  bool eventually_decreasing = false;
  std::string conclusion;
};

VanishingReport vanishing_criterion(const ZeroSequence& seq, const VanishingOptions& options = {});

struct SchwarzCheck {
  double worst_ratio = 0.0;
  Complex worst_point;
  bool holds = false;            // worst_ratio <= 1 + 1e-9
};

// max over samples of |f(z)| / ((4/pi) arctan |z|^mu) for f into the disk with f(0) = 0.
SchwarzCheck schwarz_bound_check(const HarmonicMap& f, int mu, std::span<const Complex> samples);

}  // namespace hbl
