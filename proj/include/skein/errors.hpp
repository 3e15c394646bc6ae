#pragma once

#include <stdexcept>
#include <string>

namespace skein {

enum class errc {
  mixed_ring,          // operands live in different coefficient rings
  not_prime,           // modulus is not a prime
  zero_polynomial,     // degree statistics of the zero polynomial
  zero_divisor,        // division by the zero polynomial
  non_invertible_lead, // divisor's leading coefficient is not a unit
  z_singular,          // z = 0 substituted into a polynomial with z^-1 terms
  negative_z_power,    // z -> a^-1 - a substitution needs z-exponents >= 0
  non_integral,        // z = N substitution over Z does not clear denominators
  zero_evaluation,     // torus state recursion needs N != 0 mod p
  syntax,              // malformed polynomial / braid / expression / CSV text
  non_ascending,       // polynomial terms not in strictly ascending order
  unknown_knot,        // named factor missing from the knot table
  unsupported_eval,    // table polynomials only support (p, N) = (2, 1)
  named_factor_present,// braid words exist only for torus-factor expressions
  class_size_exceeded, // braid move class larger than the configured cap
  irreducible_word,    // no skein progress possible on any class member
  invariant_violation, // dataset row breaks a stated invariant
  unrealized_candidate,// classification left a candidate without a knot
  assertion_failed,    // internal cross-check failed; indicates a bug
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace skein
