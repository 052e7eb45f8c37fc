#include "doctest.h"
#include "oracles.hpp"

#include "hbl/analytic_function.hpp"
#include "hbl/errors.hpp"
#include "hbl/harmonic_map.hpp"

using namespace hbl;
using hbl::test::C;
using hbl::test::Gen;

namespace {

// Horner with a running derivative, written out for the test.
std::pair<C, C> horner(const std::vector<C>& a, C z) {
  C p{}, dp{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("polynomial values, derivatives and jets") {
  const std::vector<C> a{{1, 0}, {0, 2}, {-3, 1}, {0.5, 0}};
  const auto p = AnalyticFunction::polynomial(a);
  Gen gen(1);
  for (int i = 0; i < 20; ++i) {
    const C z = gen.in_disk(2.0);
    const auto [v, d] = horner(a, z);
    CHECK(std::abs(p(z) - v) < 1e-12);
    CHECK(std::abs(p.derivative(z) - d) < 1e-12);
  }
  // jet at 0 reproduces the coefficients
  const Jet j = p.taylor(0.0, 4);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(j.c[k] - a[k]) < 1e-15);
  CHECK(std::abs(j.c[4]) < 1e-15);
  CHECK_THROWS_AS(p.taylor(0.0, kMaxJetOrder + 1), InvalidArgument);
}

TEST_CASE("arithmetic on functions") {
  const auto z = AnalyticFunction::scaled_identity(1.0);
  const auto one = AnalyticFunction::constant(1.0);
  const auto f = (z * z + one) / (one - C{0.5, 0} * z);
  Gen gen(2);
  for (int i = 0; i < 20; ++i) {
    const C w = gen.in_disk(0.9);
    const C num = w * w + 1.0, den = 1.0 - 0.5 * w;
    CHECK(std::abs(f(w) - num / den) < 1e-13);
    const C ref = (2.0 * w * den + 0.5 * num) / (den * den);
    CHECK(std::abs(f.derivative(w) - ref) < 1e-12);
    CHECK(std::abs((f - f)(w)) < 1e-15);
    CHECK(std::abs(f.precomposed(C{0, 1})(w) - f(C{0, 1} * w)) < 1e-13);
  }
}

TEST_CASE("power series about a center") {
  // 1/(1 - (z - c)/2) = sum ((z - c)/2)^k, radius 2
  std::vector<C> a;
  for (int k = 0; k < 60; ++k) a.push_back(std::pow(0.5, k));
  const C c{0.1, 0.2};
  const auto s = AnalyticFunction::power_series(c, a, 2.0);
  CHECK(std::abs(s(c + 0.3) - 1.0 / (1.0 - 0.15)) < 1e-14);
  CHECK(s.contains(c + 1.0));
  CHECK_FALSE(s.contains(c + 2.5));
  CHECK_THROWS_AS(s(c + 2.5), DomainError);
}

TEST_CASE("finite Blaschke products are inner") {
  const auto b = AnalyticFunction::finite_blaschke({{0.3, 0.1}, {-0.5, 0.4}}, std::polar(1.0, 0.7));
  CHECK(std::abs(b(C{0.3, 0.1})) < 1e-15);
  Gen gen(3);
  for (int i = 0; i < 20; ++i) {
    const C w = gen.in_disk(0.999);
    CHECK(std::abs(b(w)) <= 1.0 + 1e-12);
  }
  CHECK(std::abs(std::abs(b(std::polar(0.9999999, 1.0))) - 1.0) < 1e-6);
  CHECK_THROWS_AS(AnalyticFunction::finite_blaschke({{1.2, 0}}, 1.0), InvalidArgument);
  CHECK_THROWS_AS(AnalyticFunction::finite_blaschke({}, 2.0), InvalidArgument);
}

TEST_CASE("dilatation reports") {
  // h = z, g = z^2 / 4: a_f = z / 2
  const auto f = HarmonicMap(AnalyticFunction::scaled_identity(1.0),
                             AnalyticFunction::polynomial({0.0, 0.0, 0.25}));
  const C z{0.4, -0.2};
  const auto d = dilatation(f, z);
  CHECK(std::abs(d.a_f - z / 2.0) < 1e-15);
  CHECK(std::abs(d.nu_f - std::conj(z / 2.0)) < 1e-15);
  const double a = std::abs(z) / 2;
  CHECK(d.D_f == doctest::Approx((1 + a) / (1 - a)));
  CHECK(d.jacobian == doctest::Approx(1.0 - a * a));
  CHECK(std::abs(f.dilatation_function()(z) - z / 2.0) < 1e-15);

  const auto flat = HarmonicMap(AnalyticFunction::polynomial({0.0, 0.0, 1.0}),
                                AnalyticFunction::constant(0.0));
  CHECK_THROWS_AS(dilatation(flat, 0.0), DegeneratePoint);
}

TEST_CASE("normalization moves g(base) into h") {
  const auto f = HarmonicMap::normalized(AnalyticFunction::scaled_identity(1.0),
                                         AnalyticFunction::polynomial({{0.3, 0.4}, 0.2}));
  CHECK(std::abs(f.g()(0.0)) < 1e-15);
  const C z{0.1, 0.5};
  CHECK(std::abs(eval_map(f, z) - (z + std::conj(C{0.3, 0.4} + 0.2 * z))) < 1e-15);
}

}
