#pragma once

#include <optional>
#include <vector>

#include "hbl/analytic_function.hpp"
#include "hbl/complex.hpp"
#include "hbl/step_boundary.hpp"

namespace hbl {

// f = h + conj(g) on the unit disk or the upper half-plane, normalized so
// that g vanishes at the domain's base point.
class HarmonicMap {
 public:
  HarmonicMap(AnalyticFunction h, AnalyticFunction g, Domain domain = Domain::disk,
              std::optional<std::vector<Complex>> image_polygon = std::nullopt);

  // Builds h + conj(g) after moving g(base point) into the analytic part.
  static HarmonicMap normalized(AnalyticFunction h, AnalyticFunction g,
                                Domain domain = Domain::disk);

  const AnalyticFunction& h() const noexcept { return h_; }
  const AnalyticFunction& g() const noexcept { return g_; }
  Domain domain() const noexcept { return domain_; }
  const std::optional<std::vector<Complex>>& image_polygon() const noexcept { return polygon_; }
  // Step data the map was built from, when it is a Poisson step map.
  const std::optional<StepBoundaryFunction>& boundary_data() const noexcept { return steps_; }

  // c * f, i.e. h -> c h and g -> conj(c) g.
  HarmonicMap scaled(Complex c) const;

  // The second complex dilatation g'/h' as an analytic function.
  AnalyticFunction dilatation_function() const;

  bool is_interior(Complex z) const noexcept;

 private:
  friend HarmonicMap poisson_step_map(const StepBoundaryFunction& b);

  AnalyticFunction h_;
  AnalyticFunction g_;
  Domain domain_;
  std::optional<std::vector<Complex>> polygon_;
  std::optional<StepBoundaryFunction> steps_;
};

struct Partials {
  Complex h_prime;  // f_z
  Complex g_prime;  // conj(f_zbar)
};

struct DilatationReport {
  Complex a_f;      // g'/h'
  Complex nu_f;     // conj(g')/h'
  double D_f;       // (1+|a_f|)/(1-|a_f|), +inf when |a_f| >= 1
  double jacobian;  // |h'|^2 - |g'|^2
};

// h(z) + conj(g(z)). Throws DomainError for points not interior to f's domain.
Complex eval_map(const HarmonicMap& f, Complex z);

Partials partials(const HarmonicMap& f, Complex z);

// Throws DegeneratePoint when |h'(z)| is at round-off level.
DilatationReport dilatation(const HarmonicMap& f, Complex z);

// Poisson extension of b in closed form: f = sum_k w_k omega_k with omega_k
// the harmonic measure of arc k. The image polygon is the list of arc values.
HarmonicMap poisson_step_map(const StepBoundaryFunction& b);

}  // namespace hbl
