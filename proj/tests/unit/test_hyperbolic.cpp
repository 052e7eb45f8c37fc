#include "doctest.h"
#include "oracles.hpp"

#include "hbl/errors.hpp"
#include "hbl/hyperbolic.hpp"

using namespace hbl;
using hbl::test::C;
using hbl::test::Gen;

TEST_SUITE("hyperbolic") {

TEST_CASE("closed values") {
  CHECK(std::abs(dist_halfplane(C{0, 1}, C{0, 2}) - std::log(2.0)) < 1e-12);
  CHECK(std::abs(dist_disk(0.0, 0.5) - std::log(3.0)) < 1e-12);
  CHECK(dist_halfplane(C{0.3, 0.7}, C{0.3, 0.7}) == 0.0);
  CHECK_THROWS_AS(dist_halfplane(C{0, 1}, C{0, -1}), InvalidArgument);
  CHECK_THROWS_AS(dist_disk(0.0, 1.0), InvalidArgument);
}

TEST_CASE("agreement with an independent formula, including nearby points") {
  Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    const C a = gen.upper_half_plane(5.0, 1e-3, 5.0);
    const C b = gen.upper_half_plane(5.0, 1e-3, 5.0);
    CHECK(dist_halfplane(a, b) == doctest::Approx(hbl::test::halfplane_distance_reference(a, b)).epsilon(1e-10));
    const C c = a + C{1e-9, -1e-9} * a.imag();
    CHECK(dist_halfplane(a, c) == doctest::Approx(hbl::test::halfplane_distance_reference(a, c)).epsilon(1e-6));
  }
}

TEST_CASE("metric axioms on random triples") {
  Gen gen(32);
  for (int i = 0; i < 100; ++i) {
    const C a = gen.upper_half_plane(3.0, 0.01, 3.0);
    const C b = gen.upper_half_plane(3.0, 0.01, 3.0);
    const C c = gen.upper_half_plane(3.0, 0.01, 3.0);
    CHECK(std::abs(dist_halfplane(a, b) - dist_halfplane(b, a)) < 1e-12);
    CHECK(dist_halfplane(a, c) <= dist_halfplane(a, b) + dist_halfplane(b, c) + 1e-12);
    const C u = gen.in_disk(0.99), v = gen.in_disk(0.99), w = gen.in_disk(0.99);
    CHECK(std::abs(dist_disk(u, v) - dist_disk(v, u)) < 1e-12);
    CHECK(dist_disk(u, w) <= dist_disk(u, v) + dist_disk(v, w) + 1e-12);
  }
}

TEST_CASE("isometry invariance") {
  Gen gen(33);
  for (int i = 0; i < 100; ++i) {
    const C a = gen.upper_half_plane(3.0, 0.05, 3.0);
    const C b = gen.upper_half_plane(3.0, 0.05, 3.0);
    const double d = dist_halfplane(a, b);
    const double shift = gen.uniform(-10.0, 10.0);
    const double lambda = gen.uniform(0.1, 10.0);
    CHECK(std::abs(dist_halfplane(a + shift, b + shift) - d) < 1e-12 * std::max(1.0, d));
    CHECK(std::abs(dist_halfplane(lambda * a, lambda * b) - d) < 1e-12 * std::max(1.0, d));
    // disk <-> half-plane transport through the Cayley map
    const C u = gen.in_disk(0.9), v = gen.in_disk(0.9);
    CHECK(std::abs(dist_halfplane(hbl::test::cayley(u), hbl::test::cayley(v)) - dist_disk(u, v)) < 1e-12);
    // disk automorphisms
    const auto m = disk_automorphism(gen.in_disk(0.8));
    CHECK(std::abs(dist_disk(m(u), m(v)) - dist_disk(u, v)) < 1e-11);
  }
}

TEST_CASE("Mobius maps") {
  const C b{0.4, 1.3};
  const auto phi = mobius_disk_to_halfplane(b);
  CHECK(std::abs(phi(0.0) - b) < 1e-15);
  Gen gen(34);
  for (int i = 0; i < 20; ++i) {
    const C w = gen.in_disk(0.95);
    CHECK(phi(w).imag() > 0.0);
    CHECK(std::abs(phi.inverse()(phi(w)) - w) < 1e-12);
    CHECK(std::abs(phi.compose(phi.inverse())(w) - w) < 1e-12);
  }
  CHECK_THROWS_AS(MobiusMap(1.0, 2.0, 2.0, 4.0), InvalidArgument);
}

TEST_CASE("hyperbolic disks as Euclidean circles") {
  Gen gen(35);
  for (int i = 0; i < 20; ++i) {
    const HyperbolicDisk hd{gen.upper_half_plane(2.0, 0.1, 3.0), gen.uniform(0.1, 3.0), Domain::half_plane};
    const auto e = hyperbolic_disk_euclidean(hd);
    for (int k = 0; k < 8; ++k) {
      const C p = e.center + std::polar(e.radius, k * 0.785);
      CHECK(dist_halfplane(hd.center, p) == doctest::Approx(hd.radius).epsilon(1e-9));
    }
    const HyperbolicDisk dd{gen.in_disk(0.7), gen.uniform(0.1, 3.0), Domain::disk};
    const auto f = hyperbolic_disk_euclidean(dd);
    for (int k = 0; k < 8; ++k) {
      const C p = f.center + std::polar(f.radius, k * 0.785);
      CHECK(dist_disk(dd.center, p) == doctest::Approx(dd.radius).epsilon(1e-9));
    }
  }
}

TEST_CASE("claim41_check") {
  const auto half = claim41_check(C{0, 0.5});
  CHECK(half.distance == doctest::Approx(std::log(2.0)));
  CHECK(half.radius_bound == doctest::Approx(std::log(20.0)));
  CHECK(half.contains_i);
  const auto near = claim41_check(C{0.01, 0.01});
  CHECK(near.distance == doctest::Approx(4.605).epsilon(1e-3));
  CHECK(near.contains_i);
  CHECK_THROWS_AS(claim41_check(C{0, -1}), InvalidArgument);
  // far from i along the axis the bound fails
  CHECK_FALSE(claim41_check(C{0, 50}).contains_i);
}

}
