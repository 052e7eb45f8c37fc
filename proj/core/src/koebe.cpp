#include "hbl/koebe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbl/errors.hpp"

namespace hbl {

KoebeSequenceItem::KoebeSequenceItem(std::vector<Complex> continuum, double r, double M)
    : continuum_(std::move(continuum)), r_(r) {
  if (!(M > 0.0) || !std::isfinite(M)) throw InvalidArgument("smallness bound M must be positive");
  log_inv_M_ = -std::log(M);
  validate();
}

KoebeSequenceItem KoebeSequenceItem::with_log_bound(std::vector<Complex> continuum, double r,
                                                    double log_inv_M) {
  if (!std::isfinite(log_inv_M)) throw InvalidArgument("log(1/M) must be finite");
  KoebeSequenceItem item;
  item.continuum_ = std::move(continuum);
  item.r_ = r;
  item.log_inv_M_ = log_inv_M;
  item.validate();
  return item;
}

void KoebeSequenceItem::validate() {
  if (!(r_ > 0.0 && r_ < 1.0)) throw InvalidArgument("containment radius r must lie in (0, 1)");
  for (Complex v : continuum_) {
    if (!is_finite(v)) throw InvalidArgument("continuum vertices must be finite");
    if (!(std::abs(v) < r_))
      throw InvalidArgument("continuum vertex " + hbl::to_string(v) + " is not inside the disk of radius r");
  }
  metrics_ = ContinuumMetrics::of_polyline(continuum_);
  if (!(metrics_.diameter > 0.0)) throw InvalidArgument("continuum is degenerate (zero diameter)");
}

const char* to_string(Trend t) noexcept {
  switch (t) {
    case Trend::unbounded: return "unbounded";
    case Trend::bounded: return "bounded";
    case Trend::undetermined: return "undetermined";
  }
  return "undetermined";
}

KoebeReport koebe_quantity(std::span<const KoebeSequenceItem> items, const KoebeOptions& options) {
  if (items.empty()) throw InvalidArgument("Koebe sequence is empty");
  KoebeReport rep;
  rep.certificate = options.certificate;
  rep.items.reserve(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) {
    const auto& it = items[j];
    const double d = it.metrics().diameter;
    if (d > 0.25)
      throw InvalidArgument("item " + std::to_string(j) + ": continuum diameter " +
                            std::to_string(d) + " exceeds 1/4; subdivide the continuum");
    KoebeItemReport r;
    r.diameter = d;
    const double t = tau2(1.0 / d).value;
    const double L = it.log_inv_M();
    r.K = (1.0 + it.r()) / (1.0 - it.r());
    r.q = t * L / r.K;
    r.modulus_lower = 0.25 * t;
    r.modulus_upper = L > 0.0 ? kTwoPi / (0.5 * L) : std::numeric_limits<double>::infinity();
    rep.items.push_back(r);
  }

  const std::size_t n = rep.items.size();
  double sup = -std::numeric_limits<double>::infinity();
  for (const auto& r : rep.items) sup = std::max(sup, r.q);
  rep.sup_q = sup;

  // growth over the last third: its maximum beats everything before it
  const std::size_t split = (2 * n) / 3;
  bool growing = false;
  if (n >= 3 && split >= 1) {
    double head = -std::numeric_limits<double>::infinity();
    double tail = head;
    for (std::size_t j = 0; j < split; ++j) head = std::max(head, rep.items[j].q);
    for (std::size_t j = split; j < n; ++j) tail = std::max(tail, rep.items[j].q);
    growing = tail > head;
  }
  if (sup > options.certificate && growing) {
    rep.trend = Trend::unbounded;
    rep.conclusion = "limsup hypothesis indicated; f identically alpha forced by the Koebe-type theorem";
  } else if (sup <= options.certificate) {
    rep.trend = Trend::bounded;
    rep.conclusion = "every q_j is within the certificate; no conclusion forced";
  } else {
    rep.trend = Trend::undetermined;
    rep.conclusion = "certificate exceeded but growth has stalled; no conclusion forced";
  }
  return rep;
}

double koebe_w(const HarmonicMap& f, Complex alpha, int radial_samples, int angular_samples) {
  if (f.domain() != Domain::disk) throw InvalidArgument("koebe_w needs a map on the unit disk");
  if (radial_samples < 1 || angular_samples < 1) throw InvalidArgument("sample counts must be positive");
  double w = std::abs(eval_map(f, 0.0) - alpha);
  for (int i = 1; i <= radial_samples; ++i) {
    const double r = 0.5 * i / radial_samples;
    for (int j = 0; j < angular_samples; ++j)
      w = std::min(w, std::abs(eval_map(f, std::polar(r, kTwoPi * j / angular_samples)) - alpha));
  }
  return w;
}

std::vector<SecondFormItem> koebe_quantity_second_form(std::span<const KoebeSequenceItem> items) {
  std::vector<SecondFormItem> out;
  out.reserve(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) {
    const auto& it = items[j];
    const double d = it.metrics().diameter;
    if (!(d < 1.0))
      throw InvalidArgument("item " + std::to_string(j) + ": second form needs d(C) < 1");
    const double log_inv_d = -std::log(d);
    const double L = it.log_inv_M();
    const double K = (1.0 + it.r()) / (1.0 - it.r());
    SecondFormItem s;
    s.degenerate = log_inv_d < 1e-8;
    s.value = L / (K * log_inv_d);
    s.inequality_holds = tau2(1.0 / d).value * L >= 0.5 * kPi * L / log_inv_d;
    out.push_back(s);
  }
  return out;
}

void ZeroSequence::validate() const {
  if (points.size() != multiplicities.size())
    throw InvalidArgument("zero sequence needs one multiplicity per point");
  if (!(constant > 0.0) || !std::isfinite(constant)) throw InvalidArgument("constant c must be positive");
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!is_finite(points[k]) || !(points[k].imag() > 0.0))
      throw InvalidArgument("zero " + std::to_string(k) + " is not in the upper half-plane");
    if (multiplicities[k] < 1) throw InvalidArgument("multiplicities must be at least 1");
  }
}

VanishingReport vanishing_criterion(const ZeroSequence& seq, const VanishingOptions& options) {
  seq.validate();
  VanishingReport rep;
  const std::size_t n = seq.points.size();
  rep.terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double y = seq.points[k].imag();
    const double base = (seq.constant - y) / (seq.constant + y);
    rep.terms.push_back(std::pow(base, seq.multiplicities[k]));
  }

  if (n >= 4) {
    const std::size_t start = (3 * n) / 4;
    rep.last_quartile_max = 0.0;
    for (std::size_t k = start; k < n; ++k)
      rep.last_quartile_max = std::max(rep.last_quartile_max, std::abs(rep.terms[k]));
    // 3-point moving median of |t_k|, checked non-increasing over the last quartile
    auto med = [&](std::size_t k) {
      double a = std::abs(rep.terms[k - 1]), b = std::abs(rep.terms[k]), c = std::abs(rep.terms[k + 1]);
      return std::max(std::min(a, b), std::min(std::max(a, b), c));
    };
    const std::size_t lo = std::max<std::size_t>(start, 1);
    const std::size_t hi = n - 2;
    rep.eventually_decreasing = true;
    for (std::size_t k = lo; k < hi; ++k)
      if (med(k + 1) > med(k)) rep.eventually_decreasing = false;
    rep.tends_to_zero = rep.last_quartile_max < options.zero_tolerance && rep.eventually_decreasing;
  }
  rep.conclusion = rep.tends_to_zero ? "hypothesis satisfied => f identically 0 forced"
                                     : "hypothesis not established; no conclusion forced";
  return rep;
}

SchwarzCheck schwarz_bound_check(const HarmonicMap& f, int mu, std::span<const Complex> samples) {
  if (mu < 1) throw InvalidArgument("multiplicity must be at least 1");
  if (f.domain() != Domain::disk) throw InvalidArgument("Schwarz bound needs a map on the unit disk");
  if (std::abs(eval_map(f, 0.0)) > 1e-10) throw InvalidArgument("map must satisfy f(0) = 0");
  SchwarzCheck c;
  for (Complex z : samples) {
    const double fz = std::abs(eval_map(f, z));
    if (!(fz < 1.0))
      throw InvalidArgument("map leaves the unit disk at " + hbl::to_string(z));
    const double rz = std::abs(z);
    if (rz == 0.0) continue;
    const double bound = (4.0 / kPi) * std::atan(std::pow(rz, mu));
    const double ratio = fz / bound;
    if (ratio > c.worst_ratio) {
      c.worst_ratio = ratio;
      c.worst_point = z;
    }
  }
  c.holds = c.worst_ratio <= 1.0 + 1e-9;
  return c;
}

}  // namespace hbl
