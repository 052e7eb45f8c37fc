#include "doctest.h"
#include "oracles.hpp"

#include "hbl/conformal_invariants.hpp"
#include "hbl/errors.hpp"
#include "hbl/koebe.hpp"

using namespace hbl;
using hbl::test::C;
using hbl::test::Gen;
using hbl::test::pi;

namespace {

std::vector<KoebeSequenceItem> geometric(int n) {
  std::vector<KoebeSequenceItem> items;
  for (int j = 1; j <= n; ++j)
    items.push_back(KoebeSequenceItem::with_log_bound({{0.1, 0}, {0.35, 0}}, 1.0 - std::ldexp(1.0, -j),
                                                      std::pow(8.0, j)));
  return items;
}

std::vector<KoebeSequenceItem> constant_bound(int n) {
  std::vector<KoebeSequenceItem> items;
  for (int j = 1; j <= n; ++j)
    items.push_back(KoebeSequenceItem({{0.1, 0}, {0.35, 0}}, 1.0 - std::ldexp(1.0, -j), std::exp(-1.0)));
  return items;
}

HarmonicMap poly(std::vector<C> h, std::vector<C> g, double scale = 1.0) {
  for (auto& c : h) c *= scale;
  for (auto& c : g) c *= scale;
  return HarmonicMap(AnalyticFunction::polynomial(std::move(h)), AnalyticFunction::polynomial(std::move(g)));
}

}  // namespace

TEST_SUITE("koebe") {

TEST_CASE("item validation") {
  CHECK_THROWS_AS(KoebeSequenceItem({{0.1, 0}, {0.2, 0}}, 1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(KoebeSequenceItem({{0.1, 0}, {0.2, 0}}, 0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(KoebeSequenceItem({{0.1, 0}, {0.9, 0}}, 0.5, 0.5), InvalidArgument);
  CHECK_THROWS_AS(KoebeSequenceItem({{0.1, 0}, {0.1, 0}}, 0.5, 0.5), InvalidArgument);
  const KoebeSequenceItem it({{0.1, 0}, {0.2, 0}}, 0.5, std::exp(-3.0));
  CHECK(it.log_inv_M() == doctest::Approx(3.0));
  // d(C) > 1/4 is outside the proof's assumptions
  const std::vector<KoebeSequenceItem> wide{KoebeSequenceItem({{0.1, 0}, {0.5, 0}}, 0.9, 0.5)};
  CHECK_THROWS_AS(koebe_quantity(wide), InvalidArgument);
}

TEST_CASE("trend on the two fixtures") {
  const auto g = geometric(20);
  const auto rg = koebe_quantity(g);
  CHECK(rg.trend == Trend::unbounded);
  CHECK(std::string(to_string(rg.trend)) == "unbounded");
  // q_j = tau2(4) 8^j 2^-j / (2 - 2^-j)
  const double t = tau2(4.0).value;
  for (int j = 1; j <= 20; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    CHECK(rg.items[j - 1].q == doctest::Approx(t * std::pow(8.0, j) * (1 - r) / (1 + r)).epsilon(1e-12));
  }
  const auto rc = koebe_quantity(constant_bound(20));
  CHECK(rc.trend == Trend::bounded);
  CHECK(rc.sup_q < 16 * pi);
}

TEST_CASE("certificate identity") {
  // modulus_lower <= K modulus_upper exactly when q <= 16 pi
  Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.uniform(0.01, 0.5);
    const double len = gen.uniform(0.01, 0.25);
    const double r = gen.uniform(a + len + 0.01, 0.9999);
    const std::vector<KoebeSequenceItem> items{
        KoebeSequenceItem::with_log_bound({{a, 0}, {a + len, 0}}, r, std::exp(gen.uniform(-3.0, 8.0)))};
    const auto it = koebe_quantity(items).items[0];
    const double q = it.q;
    if (std::abs(q - 16 * pi) < 1e-9 * q) continue;
    CHECK((it.modulus_lower <= it.K * it.modulus_upper) == (q <= 16 * pi));
  }
}

TEST_CASE("rotating every continuum leaves the report unchanged") {
  Gen gen(42);
  const auto base = geometric(12);
  const C rot = std::polar(1.0, gen.uniform(0.0, 2 * pi));
  std::vector<KoebeSequenceItem> turned;
  for (const auto& it : base) {
    std::vector<C> c(it.continuum().begin(), it.continuum().end());
    for (auto& v : c) v *= rot;
    turned.push_back(KoebeSequenceItem::with_log_bound(c, it.r(), it.log_inv_M()));
  }
  const auto a = koebe_quantity(base), b = koebe_quantity(turned);
  CHECK(a.trend == b.trend);
  for (std::size_t j = 0; j < a.items.size(); ++j)
    CHECK(a.items[j].q == doctest::Approx(b.items[j].q).epsilon(1e-12));
}

TEST_CASE("second form") {
  // d = 0.1, M = e^-10, r = 0.9: value 10 / log 10 * (0.1 / 1.9)
  const std::vector<KoebeSequenceItem> one{
      KoebeSequenceItem::with_log_bound({{0.1, 0}, {0.2, 0}}, 0.9, 10.0)};
  const auto s = koebe_quantity_second_form(one);
  CHECK(s[0].value == doctest::Approx(10.0 / std::log(10.0) * (0.1 / 1.9)).epsilon(1e-12));
  CHECK(s[0].inequality_holds);
  for (double d : {0.1, 0.01, 0.001})
    CHECK(tau2(1.0 / d).value >= (pi / 2) / std::log(1.0 / d));
  const std::vector<KoebeSequenceItem> almost_one{
      KoebeSequenceItem::with_log_bound({{-0.4999999999999, 0}, {0.5, 0}}, 0.9, 10.0)};
  CHECK(koebe_quantity_second_form(almost_one)[0].degenerate);
}

TEST_CASE("koebe_w") {
  const auto f = poly({0, 1}, {0});
  CHECK(koebe_w(f, C{0.8, 0}) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(koebe_w(f, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("vanishing criterion") {
  ZeroSequence growing, simple, on_line;
  for (int k = 1; k <= 60; ++k) {
    growing.points.push_back(C{0, 1.0 / k});
    growing.multiplicities.push_back(k * k);
    simple.points.push_back(C{0, 1.0 / k});
    simple.multiplicities.push_back(1);
    on_line.points.push_back(C{0.1 * k, 10.0});
    on_line.multiplicities.push_back(k);
  }
  const auto a = vanishing_criterion(growing);
  CHECK(a.tends_to_zero);
  for (int k = 1; k <= 60; ++k)
    CHECK(a.terms[k - 1] == doctest::Approx(std::pow((10.0 - 1.0 / k) / (10.0 + 1.0 / k), k * k)).epsilon(1e-12));
  CHECK_FALSE(vanishing_criterion(simple).tends_to_zero);
  for (double t : vanishing_criterion(on_line).terms) CHECK(t == 0.0);

  // the refined constant 4 + eps only makes the terms smaller
  ZeroSequence refined = growing;
  refined.constant = 4.1;
  const auto b = vanishing_criterion(refined);
  for (std::size_t k = 0; k < b.terms.size(); ++k) CHECK(b.terms[k] <= a.terms[k]);

  ZeroSequence bad = growing;
  bad.multiplicities[3] = 0;
  CHECK_THROWS_AS(vanishing_criterion(bad), InvalidArgument);
}

TEST_CASE("vanishing criterion is monotone in proportional multiplicity increases") {
  Gen gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    ZeroSequence s;
    for (int k = 1; k <= 40; ++k) {
      s.points.push_back(C{gen.uniform(-1, 1), gen.uniform(0.01, 2.0) / k});
      s.multiplicities.push_back(gen.integer(1, 3) * k * k);
    }
    ZeroSequence t = s;
    const int factor = gen.integer(2, 4);
    for (auto& m : t.multiplicities) m *= factor;
    const auto a = vanishing_criterion(s), b = vanishing_criterion(t);
    CHECK(b.last_quartile_max <= a.last_quartile_max);
    if (a.tends_to_zero) CHECK(b.tends_to_zero);
  }
}

TEST_CASE("Schwarz-type bound") {
  Gen gen(44);
  std::vector<C> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(gen.in_disk(0.999));
  const std::vector<C> half{C{0.5, 0}};
  const auto id = schwarz_bound_check(poly({0, 1}, {0}), 1, half);
  CHECK(id.worst_ratio == doctest::Approx(0.5 / ((4 / pi) * std::atan(0.5))).epsilon(1e-12));
  CHECK(id.holds);
  CHECK(schwarz_bound_check(poly({0, 0, 1}, {0}), 2, samples).worst_ratio <= 1 + 1e-9);
  CHECK(schwarz_bound_check(poly({0, 0, 0, 1}, {0, 0, 0, 0, 0.5}, 1 / 1.5), 3, samples).worst_ratio <= 1 + 1e-9);
  CHECK(schwarz_bound_check(poly({0, 1}, {0, 0, 0.3}, 0.7), 1, samples).holds);
  // wrong multiplicity is caught
  const auto neg = schwarz_bound_check(poly({0, 1}, {0}), 2, samples);
  CHECK(neg.worst_ratio > 1.0);
  CHECK_FALSE(neg.holds);
  // not into the disk
  CHECK_THROWS_AS(schwarz_bound_check(poly({0, 2}, {0}), 1, samples), InvalidArgument);
}

}
