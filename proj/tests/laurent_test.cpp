#include <doctest.h>

#include <random>

#include "skein/laurent.hpp"
#include "skein/poly_text.hpp"
#include "test_util.hpp"

using namespace skein;
using testutil::code_of;

TEST_CASE("one-variable basics") {
  Laurent1 z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_one());
  CHECK(Laurent1::one().is_one());
  CHECK(Laurent1::term(3, -2).coeff(-2) == 3);
  CHECK(Laurent1::term(3, -2).coeff(0) == 0);
  // zero coefficients never enter the term map
  CHECK(Laurent1::term(0, 5).is_zero());
  CHECK(Laurent1::term(2, 1, mod_ring(2)).is_zero());
}

TEST_CASE("one-variable arithmetic over Z and F_2") {
  Ring f2 = mod_ring(2);
  Laurent1 p = parse_poly1("a^2 + a^4", f2);
  Laurent1 q = parse_poly1("a^-2 + a^2", f2);
  CHECK(format_poly(p + q) == "a^-2 + a^4");
  CHECK(format_poly(p * q) == "1 + a^2 + a^4 + a^6");
  // trefoil times its mirror
  CHECK(format_poly(p * p.mirror()) == "a^-2 + a^2");

  Laurent1 t = Laurent1::term(1, 2);
  CHECK((t + (-t)).is_zero());
  CHECK((t - t).is_zero());
}

TEST_CASE("mixed rings are rejected") {
  Laurent1 p = parse_poly1("a^2", mod_ring(2));
  Laurent1 q = parse_poly1("a^2", mod_ring(3));
  CHECK(code_of([&] { (void)(p + q); }) == errc::mixed_ring);
  CHECK(code_of([&] { (void)(p * q); }) == errc::mixed_ring);
  CHECK(code_of([&] { (void)(p - parse_poly1("1")); }) == errc::mixed_ring);
}

TEST_CASE("degree stats and mirror") {
  Laurent1 p = parse_poly1("a^-2 + 1 + a^4");
  DegreeStats st = p.degree_stats();
  CHECK(st.mindeg == -2);
  CHECK(st.maxdeg == 4);
  CHECK(st.span == 6);
  CHECK(format_poly(p.mirror()) == "a^-4 + 1 + a^2");
  CHECK(p.mirror().mirror() == p);
  CHECK(code_of([] { Laurent1().degree_stats(); }) == errc::zero_polynomial);
}

TEST_CASE("shift multiplies by a power") {
  Laurent1 p = parse_poly1("1 + a^2");
  CHECK(format_poly(p.shifted(4)) == "a^4 + a^6");
  CHECK(format_poly(p.shifted(-2)) == "a^-2 + 1");
  CHECK(p.shifted(3).shifted(-3) == p);
}

TEST_CASE("reduce_mod folds coefficients") {
  Laurent1 p = parse_poly1("8*a^4 - 3*a^6");
  CHECK(format_poly(p.reduce_mod(2)) == "a^6");
  CHECK(format_poly(p.reduce_mod(5)) == "3*a^4 + 2*a^6");
  CHECK(code_of([&] { p.reduce_mod(4); }) == errc::not_prime);
  // reducing twice by the same prime is idempotent
  CHECK(p.reduce_mod(3) == p.reduce_mod(3).reduce_mod(3));
}

TEST_CASE("divrem against the knot divisor") {
  Ring f2 = mod_ring(2);
  Laurent1 d = parse_poly1("a^-2 + 1 + a^2", f2);

  // trefoil: P itself leaves remainder P, P - 1 divides exactly
  Laurent1 p = parse_poly1("a^2 + a^4", f2);
  auto [q0, r0] = Laurent1::divrem(p, d);
  CHECK(q0.is_zero());
  CHECK(r0 == p);
  CHECK_FALSE(Laurent1::divisible(p, d));

  Laurent1 pm1 = p - Laurent1::one(f2);
  auto [q1, r1] = Laurent1::divrem(pm1, d);
  CHECK(r1.is_zero());
  CHECK(format_poly(q1) == "a^2");
  CHECK(Laurent1::divisible(pm1, d));

  // figure-eight
  Laurent1 e = parse_poly1("a^-2 + a^2", f2) - Laurent1::one(f2);
  CHECK(Laurent1::divisible(e, d));
}

TEST_CASE("divrem reconstruction property") {
  std::mt19937_64 rng(20260819);
  for (Ring ring : {mod_ring(5), mod_ring(2), integers}) {
    for (int i = 0; i < 200; ++i) {
      Laurent1 p = testutil::random_poly1(rng, ring);
      Laurent1 d = testutil::random_poly1(rng, ring);
      if (d.is_zero()) {
        CHECK(code_of([&] { Laurent1::divrem(p, d); }) == errc::zero_divisor);
        continue;
      }
      if (!ring.modular()) {
        // force a unit leading coefficient over Z
        d.add_term(d.degree_stats().maxdeg + 1, 1);
      }
      auto [q, r] = Laurent1::divrem(p, d);
      CHECK(q * d + r == p);
      if (!r.is_zero()) {
        CHECK(r.degree_stats().span < d.degree_stats().span);
      }
    }
  }
}

TEST_CASE("divrem rejects a non-unit lead over Z") {
  Laurent1 d = parse_poly1("2*a^2");
  CHECK(code_of([&] { Laurent1::divrem(parse_poly1("a^4"), d); }) ==
        errc::non_invertible_lead);
}

TEST_CASE("two-variable basics and delta") {
  CHECK(format_poly(Laurent2::delta()) == "a^-1*z^-1 - a^1*z^-1");
  CHECK(Laurent2::delta_power(0).coeff(0, 0) == 1);
  CHECK(Laurent2::delta_power(2) == Laurent2::delta() * Laurent2::delta());
  Laurent2 p = parse_poly2("2*a^2 + a^2*z^2 - a^4");
  CHECK(p.coeff(2, 2) == 1);
  CHECK(p.coeff(4, 0) == -1);
  CHECK(format_poly(p.shifted(1, 1)) == "2*a^3*z^1 + a^3*z^3 - a^5*z^1");
}

TEST_CASE("two-variable mirrors") {
  Laurent2 p = parse_poly2("2*a^2 + a^2*z^2 - a^4");
  CHECK(format_poly(p.mirror_a()) == "-a^-4 + 2*a^-2 + a^-2*z^2");
  // knots carry even z-powers only, so both mirror rules agree
  CHECK(p.mirror_a() == p.mirror_link());
  // links can differ: delta has z^-1
  Laurent2 d = Laurent2::delta();
  CHECK(d.mirror_link() == d);
  CHECK(d.mirror_a() == -d.mirror_link());
  CHECK(p.mirror_link().mirror_link() == p);
}

TEST_CASE("eval_z over Z and mod p") {
  Laurent2 p = parse_poly2("2*a^2 + a^2*z^2 - a^4"); // T(2,3)
  CHECK(format_poly(p.eval_z(1)) == "3*a^2 - a^4");
  CHECK(format_poly(p.eval_z(0)) == "2*a^2 - a^4");
  CHECK(format_poly(p.eval_z(1, 2)) == "a^2 + a^4");
  CHECK(format_poly(p.eval_z(4, 3)) == "2*a^4");

  // delta needs z invertible
  Laurent2 d = Laurent2::delta();
  CHECK(format_poly(d.eval_z(1)) == "a^-1 - a^1");
  CHECK(code_of([&] { d.eval_z(0); }) == errc::z_singular);
  CHECK(code_of([&] { d.eval_z(0, 5); }) == errc::z_singular);
  CHECK(code_of([&] { d.eval_z(2); }) == errc::non_integral);
  CHECK(format_poly(d.eval_z(2, 5)) == "3*a^-1 + 2*a^1");
  // z^-1 with an even numerator clears exactly over Z
  Laurent2 e = Laurent2::term(6, 1, -1);
  CHECK(format_poly(e.eval_z(2)) == "3*a^1");
  CHECK(format_poly(e.eval_z(-2)) == "-3*a^1");
}

TEST_CASE("eval_z commutes with reduction") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent2 p = testutil::random_poly2(rng, integers, 6, 0); // z-exps >= 0
    for (std::uint32_t prime : {2u, 3u, 5u}) {
      for (long long n = -4; n <= 4; ++n) {
        CHECK(p.eval_z(n).reduce_mod(prime) == p.eval_z(n, prime));
      }
    }
  }
}

TEST_CASE("subst_z_delta") {
  Laurent2 p = parse_poly2("2*a^2 + a^2*z^2 - a^4"); // T(2,3)
  CHECK(p.subst_z_delta().is_one());
  CHECK(Laurent2::one().subst_z_delta().is_one());
  CHECK(code_of([] { Laurent2::delta().subst_z_delta(); }) == errc::negative_z_power);
}

TEST_CASE("annihilator division") {
  Laurent2 ann = parse_poly2("-a^-2 + 2 + z^2 - a^2");
  CHECK(format_poly(ann) == "-a^-2 + 2 + z^2 - a^2");
  auto q = ann.div_by_annihilator();
  REQUIRE(q.has_value());
  CHECK(q->coeff(0, 0) == 1);

  CHECK(Laurent2().div_by_annihilator().has_value());
  CHECK_FALSE(Laurent2::term(1, 2, 2).div_by_annihilator().has_value());
  CHECK_FALSE(Laurent2::one().div_by_annihilator().has_value());

  // quotient exactness on random multiples
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    Laurent2 m = testutil::random_poly2(rng, integers);
    auto q2 = (m * ann).div_by_annihilator();
    REQUIRE(q2.has_value());
    CHECK(*q2 * ann == m * ann);
  }
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(424242);
  for (Ring ring : {integers, mod_ring(2), mod_ring(7)}) {
    for (int i = 0; i < 150; ++i) {
      Laurent1 p = testutil::random_poly1(rng, ring);
      Laurent1 q = testutil::random_poly1(rng, ring);
      Laurent1 r = testutil::random_poly1(rng, ring);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p.mirror() * q.mirror() == (p * q).mirror());
      CHECK(p + Laurent1(ring) == p);
      CHECK((p * Laurent1::one(ring)) == p);
    }
  }
}

TEST_CASE("two-variable ring laws") {
  std::mt19937_64 rng(53);
  for (Ring ring : {integers, mod_ring(3)}) {
    for (int i = 0; i < 100; ++i) {
      Laurent2 p = testutil::random_poly2(rng, ring);
      Laurent2 q = testutil::random_poly2(rng, ring);
      Laurent2 r = testutil::random_poly2(rng, ring);
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * q == q * p);
      CHECK(p.mirror_link() * q.mirror_link() == (p * q).mirror_link());
      CHECK(p.mirror_a() * q.mirror_a() == (p * q).mirror_a());
    }
  }
}
