#include "hbl/harmonic_map.hpp"

#include <cmath>
#include <limits>

#include "hbl/errors.hpp"

namespace hbl {

namespace {

constexpr double kNormalizationTol = 1e-9;

void require_interior(const HarmonicMap& f, Complex z) {
  if (!f.is_interior(z)) {
    throw DomainError("point " + to_string(z) + " is not interior to the " +
                      (f.domain() == Domain::disk ? "unit disk" : "upper half-plane") +
                      " (boundary distance " +
                      std::to_string(boundary_distance(f.domain(), z)) + ")");
  }
}

}  // namespace

HarmonicMap::HarmonicMap(AnalyticFunction h, AnalyticFunction g, Domain domain,
                         std::optional<std::vector<Complex>> image_polygon)
    : h_(std::move(h)), g_(std::move(g)), domain_(domain), polygon_(std::move(image_polygon)) {
  const Complex base = base_point(domain_);
  const Complex g0 = g_.value(base);
  if (std::abs(g0) > kNormalizationTol)
    throw InvalidArgument("co-analytic part must vanish at the base point, got g = " +
                          to_string(g0));
}

HarmonicMap HarmonicMap::normalized(AnalyticFunction h, AnalyticFunction g, Domain domain) {
  const Complex g0 = g.value(base_point(domain));
  if (g0 == Complex{}) return HarmonicMap(std::move(h), std::move(g), domain);
  const auto shift = AnalyticFunction::constant(g0);
  return HarmonicMap(h + AnalyticFunction::constant(std::conj(g0)), g - shift, domain);
}

HarmonicMap HarmonicMap::scaled(Complex c) const {
  HarmonicMap out(c * h_, std::conj(c) * g_, domain_);
  if (polygon_) {
    std::vector<Complex> p = *polygon_;
    for (Complex& v : p) v *= c;
    out.polygon_ = std::move(p);
  }
  if (steps_) {
    std::vector<Complex> w(steps_->values().begin(), steps_->values().end());
    for (Complex& v : w) v *= c;
    if (c != Complex{})
      out.steps_ = StepBoundaryFunction(
          std::vector<double>(steps_->jump_points().begin(), steps_->jump_points().end()),
          std::move(w));
  }
  return out;
}

AnalyticFunction HarmonicMap::dilatation_function() const {
  return AnalyticFunction::dilatation_of(h_, g_);
}

bool HarmonicMap::is_interior(Complex z) const noexcept {
  return is_finite(z) && boundary_distance(domain_, z) > 0.0;
}

Complex eval_map(const HarmonicMap& f, Complex z) {
  require_interior(f, z);
  return f.h().value(z) + std::conj(f.g().value(z));
}

Partials partials(const HarmonicMap& f, Complex z) {
  require_interior(f, z);
  return {f.h().derivative(z), f.g().derivative(z)};
}

DilatationReport dilatation(const HarmonicMap& f, Complex z) {
  const auto [hp, gp] = partials(f, z);
  const double scale = std::max(1.0, std::abs(gp));
  if (std::abs(hp) <= 64.0 * std::numeric_limits<double>::epsilon() * scale)
    throw DegeneratePoint("degenerate point " + to_string(z) + ": h' vanishes numerically");
  DilatationReport r;
  r.a_f = gp / hp;
  r.nu_f = std::conj(gp) / hp;
  const double k = std::abs(r.a_f);
  r.D_f = k < 1.0 ? (1.0 + k) / (1.0 - k) : std::numeric_limits<double>::infinity();
  r.jacobian = (std::abs(hp) - std::abs(gp)) * (std::abs(hp) + std::abs(gp));
  return r;
}

}  // namespace hbl
