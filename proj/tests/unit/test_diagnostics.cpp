#include "doctest.h"
#include "oracles.hpp"

#include "hbl/boundary_diagnostics.hpp"
#include "hbl/errors.hpp"

#include <functional>

using namespace hbl;
using hbl::test::C;
using hbl::test::Gen;
using hbl::test::pi;

namespace {

// Both branches of the curve integral by fixed-panel Gauss-Legendre in
// u = log s; deliberately unrelated to the adaptive rule in the library.
double lm_reference(const std::function<C(C)>& a, double theta0, double m, double delta) {
  using boost::math::quadrature::gauss;
  const double smax = std::min(pi, 1.0 / m);
  auto branch = [&](double sign) {
    auto f = [&](double u) {
      const double s = std::exp(u);
      const double rho = 1.0 - m * s;
      const C z = std::polar(rho, theta0 + sign * s);
      const double speed = std::sqrt(m * m + rho * rho);
      return (1.0 - std::norm(a(z))) / (1.0 - rho * rho) * speed * s;
    };
    const double lo = std::log(delta), hi = std::log(smax);
    const int panels = 400;
    const double w = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) sum += gauss<double, 20>::integrate(f, lo + p * w, lo + (p + 1) * w);
    return sum;
  };
  return branch(1.0) + branch(-1.0);
}

HarmonicMap poly(std::vector<C> h, std::vector<C> g) {
  return HarmonicMap(AnalyticFunction::polynomial(std::move(h)), AnalyticFunction::polynomial(std::move(g)));
}

const HarmonicMap& triangle() {
  static const HarmonicMap f = poisson_step_map(StepBoundaryFunction::regular_polygon(3));
  return f;
}

}  // namespace

TEST_SUITE("gamma_curve") {

TEST_CASE("points, speed and the cancellation-free 1 - |z|^2") {
  Gen gen(51);
  for (int i = 0; i < 50; ++i) {
    const double m = gen.uniform(0.01, 1.0 / pi);
    const double t0 = gen.uniform(-pi, pi);
    const GammaCurve c(t0, m);
    CHECK(c.max_offset() == doctest::Approx(std::min(pi, 1.0 / m)));
    const double s = gen.uniform(-c.max_offset(), c.max_offset());
    if (s == 0.0) continue;
    const auto p = c.at_offset(s);
    const double rho = 1.0 - m * std::abs(s);
    CHECK(std::abs(p.z - std::polar(rho, t0 + s)) < 1e-14);
    CHECK(p.speed == doctest::Approx(std::sqrt(m * m + rho * rho)).epsilon(1e-14));
    // m < 1/pi keeps the speed above 0.3 for offsets up to pi
    CHECK(p.speed > 0.3);
    CHECK(c.one_minus_abs2(s) == doctest::Approx(1.0 - rho * rho).epsilon(1e-12));
    CHECK(std::abs(c.at(t0 + s).z - p.z) < 1e-14);
  }
  const GammaCurve c(0.0, 0.2);
  CHECK(c.one_minus_abs2(1e-300) > 0.0);
  CHECK_THROWS_AS(c.at_offset(0.0), InvalidArgument);
  CHECK_THROWS_AS(c.at_offset(4.0), InvalidArgument);
  CHECK_THROWS_AS(GammaCurve(0.0, 0.0), InvalidArgument);
}

}

TEST_SUITE("lm") {

TEST_CASE("lm_integral against the fixed-panel reference") {
  for (double alpha : {0.0, 0.5, 0.9, 1.0}) {
    const auto a = AnalyticFunction::scaled_identity(alpha);
    for (double m : {0.1, 0.3}) {
      const double t0 = 0.7;
      for (double delta : {1e-1, 1e-3}) {
        const double ref = lm_reference([&](C z) { return alpha * z; }, t0, m, delta);
        CHECK(lm_integral(a, GammaCurve(t0, m), delta) == doctest::Approx(ref).epsilon(1e-9));
      }
    }
  }
  // the triangle dilatation is a rotation of z
  const auto a = triangle().dilatation_function();
  const C c = a(0.5) / 0.5;
  const double ref = lm_reference([&](C z) { return c * z; }, pi, 0.2, 1e-2);
  CHECK(lm_integral(a, GammaCurve(pi, 0.2), 1e-2) == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("lm_integral domain checks") {
  const auto big = AnalyticFunction::scaled_identity(1.5);
  CHECK_THROWS_AS(lm_integral(big, GammaCurve(0.0, 0.2), 1e-2), DomainError);
  const auto zero = AnalyticFunction::constant(0.0);
  CHECK_THROWS_AS(lm_integral(zero, GammaCurve(0.0, 0.2), 0.0), InvalidArgument);
  CHECK_THROWS_AS(lm_integral(zero, GammaCurve(0.0, 0.2), 10.0), InvalidArgument);
}

TEST_CASE("partial values are monotone and rotation equivariant") {
  Gen gen(52);
  const auto sched = default_delta_schedule();
  for (int trial = 0; trial < 4; ++trial) {
    const C alpha = gen.in_disk(1.0);
    const double m = gen.uniform(0.05, 0.3);
    const double t0 = gen.uniform(0.0, 2 * pi);
    const double phi = gen.uniform(0.0, 2 * pi);
    const auto a = AnalyticFunction::scaled_identity(alpha);
    const auto est = lm_classify(a, t0, m, sched);
    for (std::size_t k = 1; k < est.partial_values.size(); ++k)
      CHECK(est.partial_values[k].second >= est.partial_values[k - 1].second);
    // a(e^{-i phi} z) at zeta e^{i phi} sees the same values as a at zeta
    const auto turned = lm_classify(a.precomposed(std::polar(1.0, -phi)), t0 + phi, m, sched);
    for (std::size_t k = 0; k < est.partial_values.size(); ++k)
      CHECK(turned.partial_values[k].second == doctest::Approx(est.partial_values[k].second).epsilon(1e-9));
    CHECK(turned.verdict.cls == est.verdict.cls);
  }
}

TEST_CASE("verdicts on the linear dilatations") {
  const auto sched = default_delta_schedule();
  CHECK(lm_classify(AnalyticFunction::scaled_identity(0.5), 0.0, 0.2, sched).verdict.cls ==
        DivergenceClass::divergent);
  const auto conv = lm_classify(AnalyticFunction::scaled_identity(1.0), 0.0, 0.2, sched);
  CHECK(conv.verdict.cls == DivergenceClass::convergent);
  CHECK(conv.verdict.limit_or_rate >= conv.partial_values.back().second);
  const auto zero = lm_classify(AnalyticFunction::constant(0.0), 0.0, 0.2, sched);
  CHECK(zero.verdict.cls == DivergenceClass::divergent);
  CHECK(zero.verdict.limit_or_rate == doctest::Approx(1.0 / (2 * 0.2)).epsilon(0.1));
  CHECK(std::string(to_string(DivergenceClass::inconclusive)) == "inconclusive");

  const std::vector<double> short_sched{1e-1, 1e-2};
  CHECK_THROWS_AS(lm_classify(AnalyticFunction::constant(0.0), 0.0, 0.2, short_sched), InvalidArgument);
  const std::vector<double> unsorted{1e-1, 1e-3, 1e-2};
  CHECK_THROWS_AS(lm_classify(AnalyticFunction::constant(0.0), 0.0, 0.2, unsorted), InvalidArgument);
}

}

TEST_SUITE("boundary") {

TEST_CASE("radial trend of (1 - r)|h'| on the triangle map") {
  const auto radii = default_blw_radii();
  CHECK(radii.size() == 13);
  CHECK(radii.back() == doctest::Approx(1.0 - 1e-4));
  const auto at_jump = blw_radial(triangle(), 0.0, radii);
  CHECK(at_jump.verdict == BlwVerdict::tends_to_positive);
  CHECK(at_jump.c_estimate > 0.0);
  const auto mid_arc = blw_radial(triangle(), pi, radii);
  CHECK(mid_arc.verdict == BlwVerdict::tends_to_zero);
  const std::vector<double> shallow{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(blw_radial(triangle(), 0.0, shallow), InvalidArgument);
}

TEST_CASE("area against the coefficient formula") {
  Gen gen(53);
  for (int trial = 0; trial < 5; ++trial) {
    const int deg = gen.integer(1, 5);
    std::vector<C> h(deg + 1), g(deg + 1);
    h[0] = gen.in_disk(1.0);
    h[1] = 1.0;
    for (int k = 2; k <= deg; ++k) h[k] = gen.in_disk(0.5 / (k * k));
    g[0] = 0.0;
    for (int k = 1; k <= deg; ++k) g[k] = gen.in_disk(0.3 / (k * k));
    const auto r = area_integral(poly(h, g), 128);
    CHECK(r.area == doctest::Approx(hbl::test::polynomial_area(h, g)).epsilon(1e-10));
    CHECK(r.negative_cells == 0);
  }
  // sense reversal is counted
  CHECK(area_integral(poly({0, 0.2}, {0, 1}), 64).negative_cells > 0);
  CHECK_THROWS_AS(area_integral(poly({0, 1}, {0}), 2), InvalidArgument);
}

TEST_CASE("majorization necessary condition") {
  Gen gen(54);
  std::vector<C> samples;
  for (int i = 0; i < 200; ++i) samples.push_back(gen.in_disk(0.99));
  const auto F = AnalyticFunction::polynomial({0, 0.5, 0.3});
  const auto phi = AnalyticFunction::finite_blaschke({{0.2, 0.1}}, 1.0);
  const auto ok = majorization_check(phi * F, F, samples);
  CHECK(ok.necessary_ok);
  CHECK(ok.worst_ratio <= 1.0);
  CHECK(ok.label == "necessary condition only");
  const auto bad = majorization_check(C{1.5, 0} * F, F, samples);
  CHECK_FALSE(bad.necessary_ok);
  CHECK(bad.worst_ratio == doctest::Approx(1.5));
}

TEST_CASE("cluster samples on the triangle map") {
  const auto& f = triangle();
  const auto jump = cluster_sample(f, 0.0, Approach::tangential_fan, 20);
  REQUIRE(jump.reference_segment);
  REQUIRE(jump.max_distance);
  CHECK(*jump.max_distance < 1e-2);
  // endpoints spread along the connecting segment
  CHECK(*jump.coverage_gap < 0.5);
  for (C p : jump.endpoints) {
    const double d = hbl::test::segment_distance(p, jump.reference_segment->first, jump.reference_segment->second);
    CHECK(d <= *jump.max_distance + 1e-15);
  }
  const auto vertex = cluster_sample(f, pi, Approach::tangential_fan, 20);
  CHECK(*vertex.max_distance < 1e-2);
  for (C p : vertex.endpoints) CHECK(std::abs(p - std::polar(1.0, 2 * pi / 3)) < 1e-2);
  const auto radial = cluster_sample(f, pi, Approach::radial, 20);
  CHECK(radial.points.size() == 20);
  CHECK(std::string(to_string(Approach::tangential_fan)) == "tangential-fan");
}

TEST_CASE("area bound for a polynomial pair") {
  // h = z, g = z^2 / 4: a_f = z / 2, so every L(m) diverges
  const auto f = poly({0, 1}, {0, 0, 0.25});
  const std::vector<double> ms{0.1, 0.2};
  Thm54Options opt;
  opt.area_resolution = 64;
  const auto r = thm54_check(f, 0.0, ms, 0.05, opt);
  CHECK(r.divergent_short_circuit);
  CHECK(r.inequality_holds);
  CHECK(std::isinf(r.rhs));
  CHECK(r.area == doctest::Approx(hbl::test::polynomial_area({0, 1}, {0, 0, 0.25})).epsilon(1e-8));
  const std::vector<double> too_big{0.1, 0.5};
  CHECK_THROWS_AS(thm54_check(f, 0.0, too_big, 0.05, opt), InvalidArgument);
}

}
