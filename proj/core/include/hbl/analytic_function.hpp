#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "hbl/complex.hpp"
#include "hbl/step_boundary.hpp"

namespace hbl {

// Highest derivative order that can be requested from taylor().
inline constexpr int kMaxJetOrder = 6;

// Normalized Taylor coefficients f^(k)(z)/k!, k = 0..order.
struct Jet {
  std::array<Complex, kMaxJetOrder + 1> c{};
  int order = 0;

  Complex value() const noexcept { return c[0]; }
  Complex derivative() const noexcept { return c[1]; }
};

enum class StepPartRole { analytic, coanalytic };

// An immutable, evaluable analytic function.
//
// Instances are cheap handles to a shared expression tree, so copies are
// O(1) and concurrent evaluation is safe. Every node provides its value and
// derivatives through truncated Taylor arithmetic, which keeps products,
// quotients and dilatations exact up to rounding.
class AnalyticFunction {
 public:
  enum class Kind {
    power_series,
    polynomial,
    scaled_identity,
    finite_blaschke,
    step_map_part,
    sum,
    product,
    quotient,
    precomposed,
    dilatation
  };

  // sum_k coefficients[k] (z - center)^k, evaluable for |z - center| < 0.99 radius.
  static AnalyticFunction power_series(Complex center, std::vector<Complex> coefficients,
                                       double radius);
  // sum_k coefficients[k] z^k.
  static AnalyticFunction polynomial(std::vector<Complex> coefficients);
  static AnalyticFunction constant(Complex c);
  // z -> alpha z.
  static AnalyticFunction scaled_identity(Complex alpha);
  // rotation * prod_k (z - a_k) / (1 - conj(a_k) z), |a_k| < 1, |rotation| = 1.
  static AnalyticFunction finite_blaschke(std::vector<Complex> zeros, Complex rotation);
  // Closed-form analytic or co-analytic part of the Poisson extension of b.
  static AnalyticFunction step_map_part(const StepBoundaryFunction& b, StepPartRole role);
  // g'/h', the second complex dilatation of h + conj(g).
  static AnalyticFunction dilatation_of(const AnalyticFunction& h, const AnalyticFunction& g);

  // z -> f(alpha z).
  AnalyticFunction precomposed(Complex alpha) const;

  Complex operator()(Complex z) const { return value(z); }
  Complex value(Complex z) const;
  Complex derivative(Complex z) const;
  Jet taylor(Complex z, int order) const;

  // True when z is inside the declared domain of evaluation.
  bool contains(Complex z) const;

  Kind kind() const;

  friend AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator/(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator*(Complex c, const AnalyticFunction& f);

  struct Node;

 private:
  explicit AnalyticFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace hbl
