#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "skein/fib.hpp"
#include "skein/poly_text.hpp"
#include "skein/torus.hpp"
#include "test_util.hpp"

using namespace skein;
using testutil::code_of;

namespace {

// Pisano period computed the pedestrian way, independent of fib().
std::uint64_t pisano(std::uint32_t p) {
  std::uint32_t a = 0, b = 1;
  std::uint64_t n = 0;
  do {
    std::uint32_t t = (a + b) % p;
    a = b;
    b = t;
    ++n;
  } while (!(a == 0 && b == 1));
  return n;
}

std::vector<std::uint32_t> primes_upto(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

} // namespace

TEST_CASE("fibonacci values") {
  const long expect[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (std::size_t i = 0; i < std::size(expect); ++i) CHECK(fib(i) == expect[i]);
  CHECK(fib(62) == Int("4052739537881"));
  for (std::size_t n = 2; n <= 80; ++n) {
    CHECK(fib(n) == fib(n - 1) + fib(n - 2));
    if (n >= 3) CHECK(fib(n) > fib(n - 1)); // F_2 = F_1
  }
}

TEST_CASE("legendre symbol mod 5") {
  CHECK(legendre5(2) == -1);
  CHECK(legendre5(3) == -1);
  CHECK(legendre5(5) == 0);
  CHECK(legendre5(7) == -1);
  CHECK(legendre5(11) == 1);
  CHECK(legendre5(13) == -1);
  CHECK(legendre5(19) == 1);
  CHECK(legendre5(29) == 1);
  CHECK(legendre5(31) == 1);
  CHECK(code_of([] { legendre5(4); }) == errc::not_prime);
}

TEST_CASE("fibonacci divisibility index") {
  auto r2 = fib_divisibility_check(2);
  CHECK(r2.index == 3);
  CHECK(r2.residue == 0);
  auto r7 = fib_divisibility_check(7);
  CHECK(r7.index == 8);
  CHECK(r7.residue == 0);
  CHECK(fib_divisibility_check(5).index == 5);
  CHECK(fib_divisibility_check(11).index == 10);
  for (std::uint32_t p : primes_upto(200)) {
    CHECK(fib_divisibility_check(p).residue == 0);
  }
}

TEST_CASE("torus polynomial frozen values") {
  CHECK(format_poly(torus_poly(0)) == "a^-1*z^-1 - a^1*z^-1");
  CHECK(format_poly(torus_poly(1)) == "1");
  CHECK(format_poly(torus_poly(2)) == "a^1*z^-1 + a^1*z^1 - a^3*z^-1");
  CHECK(format_poly(torus_poly(3)) == "2*a^2 + a^2*z^2 - a^4");
  CHECK(format_poly(torus_poly(5)) ==
        "3*a^4 + 4*a^4*z^2 + a^4*z^4 - 2*a^6 - a^6*z^2");
  CHECK(format_poly(torus_poly(-1)) == "1");
  CHECK(format_poly(torus_poly(-2)) == "a^-3*z^-1 - a^-1*z^-1 - a^-1*z^1");
  CHECK(format_poly(torus_poly(-3)) == "-a^-4 + 2*a^-2 + a^-2*z^2");
}

TEST_CASE("torus recursion invariant") {
  for (long long n = -8; n <= 12; ++n) {
    CHECK(torus_poly(n + 2) ==
          torus_poly(n).shifted(2, 0) + torus_poly(n + 1).shifted(1, 1));
  }
}

TEST_CASE("torus mirrors") {
  for (long long n : {1, 3, 5, 7, 9}) {
    CHECK(torus_poly(-n) == torus_poly(n).mirror_a());
    CHECK(torus_poly(-n) == torus_poly(n).mirror_link());
  }
  for (long long n : {2, 4, 6}) {
    CHECK(torus_poly(-n) == torus_poly(n).mirror_link());
  }
  // the knot-only rule is wrong on even n
  CHECK(torus_poly(-2) != torus_poly(2).mirror_a());
}

TEST_CASE("state recursion orbits") {
  TorusState s = torus_initial_state(2, 1);
  CHECK(s.quad == std::array<std::uint32_t, 4>{1, 1, 1, 0});
  s = state_step(s);
  CHECK(s.quad == std::array<std::uint32_t, 4>{0, 1, 1, 1});
  CHECK(s.k == 1);
  s = state_step(s);
  CHECK(s.quad == std::array<std::uint32_t, 4>{1, 0, 0, 1});
  s = state_step(s);
  CHECK(s.quad == torus_initial_state(2, 1).quad);

  TorusState t = torus_initial_state(3, 1);
  CHECK(t.quad == std::array<std::uint32_t, 4>{1, 2, 1, 0});
  t = state_step(t);
  CHECK(t.quad == std::array<std::uint32_t, 4>{2, 2, 0, 2});
  t = state_step(t);
  CHECK(t.quad == std::array<std::uint32_t, 4>{2, 1, 2, 0});
  t = state_step(t);
  CHECK(t.quad == std::array<std::uint32_t, 4>{1, 1, 0, 1});
  t = state_step(t);
  CHECK(t.quad == torus_initial_state(3, 1).quad);

  TorusState u = torus_initial_state(101, 1);
  CHECK(u.quad == std::array<std::uint32_t, 4>{1, 100, 1, 0});
  u = state_step(u);
  CHECK(u.quad == std::array<std::uint32_t, 4>{2, 100, 3, 100});
}

TEST_CASE("state quadruples track the full polynomials") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint64_t n = 1; n < p; ++n) {
      TorusState s = torus_initial_state(p, n);
      for (unsigned k = 0; k <= 10; ++k) {
        Laurent1 even(mod_ring(p));
        even.add_term(2 * static_cast<int>(k) - 1, Int(s.quad[0]));
        even.add_term(2 * static_cast<int>(k) + 1, Int(s.quad[1]));
        CHECK(torus_poly(2 * k).eval_z(static_cast<long long>(n), p) == even);

        Laurent1 odd(mod_ring(p));
        odd.add_term(2 * static_cast<int>(k), Int(s.quad[2]));
        odd.add_term(2 * static_cast<int>(k) + 2, Int(s.quad[3]));
        CHECK(torus_poly(2 * k + 1).eval_z(static_cast<long long>(n), p) == odd);

        s = state_step(s);
      }
    }
  }
}

TEST_CASE("periods") {
  CHECK(torus_period(2, 1) == 3);
  CHECK(torus_period(3, 1) == 4);
  CHECK(torus_period(5, 1) == 10);
  CHECK(torus_period(7, 1) == 8);
  CHECK(torus_period(2, 3) == 3);  // N reduces mod p
  CHECK(torus_period(11, 4) == torus_period(11, 15));
  CHECK(code_of([] { torus_period(6, 1); }) == errc::not_prime);
  CHECK(code_of([] { torus_period(3, 6); }) == errc::zero_evaluation);
  CHECK(code_of([] { torus_initial_state(2, 4); }) == errc::zero_evaluation);
}

TEST_CASE("period at N = 1 halves the Pisano period") {
  for (std::uint32_t p : primes_upto(50)) {
    std::uint64_t pi = pisano(p);
    std::uint64_t expect = pi % 2 == 0 ? pi / 2 : pi;
    CHECK(torus_period(p, 1) == expect);
  }
}

TEST_CASE("trivializing exponent") {
  CHECK(trivializing_exponent(2, 1) == 6);
  CHECK(trivializing_exponent(3, 1) == 8);
  CHECK(trivializing_exponent(5, 1) == 20);
  CHECK(trivializing_exponent(3, 3) == 6); // p | N goes through z = 0
  CHECK(trivializing_exponent(2, 4) == 4);
  CHECK(trivializing_exponent(2, 0) == 4);

  // the defining property, including repeats M, 2M, 3M
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint64_t n = 1; n < p; ++n) {
      std::uint64_t m = trivializing_exponent(p, n);
      for (std::uint64_t l = 1; l * m <= 24; ++l) {
        Laurent1 expect = Laurent1::term(1, static_cast<int>(l * m), mod_ring(p));
        CHECK(torus_poly(static_cast<long long>(l * m + 1))
                  .eval_z(static_cast<long long>(n), p) == expect);
      }
    }
  }
}

TEST_CASE("closed form at z = 1") {
  CHECK(closed_form_z1(0) == std::pair<Int, Int>{1, 0});
  CHECK(closed_form_z1(1) == std::pair<Int, Int>{3, -1});
  CHECK(closed_form_z1(2) == std::pair<Int, Int>{8, -3});
  for (unsigned k = 0; k <= 15; ++k) {
    auto [hi, lo] = closed_form_z1(k);
    CHECK(hi == fib(2 * k + 2));
    CHECK(lo == -fib(2 * k));
    Laurent1 expect;
    expect.add_term(2 * static_cast<int>(k), hi);
    expect.add_term(2 * static_cast<int>(k) + 2, lo);
    CHECK(torus_poly(2 * k + 1).eval_z(1) == expect);
  }
}

TEST_CASE("closed form at z = 0") {
  CHECK(format_poly(closed_form_z0(1)) == "1");
  CHECK(format_poly(closed_form_z0(2)) == "2*a^2 - a^4");
  CHECK(format_poly(closed_form_z0(3)) == "3*a^4 - 2*a^6");
  for (unsigned k = 1; k <= 12; ++k) {
    CHECK(torus_poly(2 * k - 1).eval_z(0) == closed_form_z0(k));
  }
  CHECK(code_of([] { closed_form_z0(0); }) == errc::assertion_failed);
}
