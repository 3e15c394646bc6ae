#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skein {

// Exact integer coefficients.  Fibonacci growth and repeated skein products
// overflow 64 bits quickly (F_200 ~ 2.8e41), so everything coefficient-sized
// goes through GMP.
using Int = mpz_class;

// mpz_class has no long long constructor on every platform; import the
// magnitude explicitly.
inline Int make_int(long long v) {
  unsigned long long mag =
      v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  Int r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof mag, 0, 0, &mag);
  return v < 0 ? Int(-r) : r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Least nonnegative residue.
inline std::uint32_t residue(const Int& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace skein
