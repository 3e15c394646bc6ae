#pragma once

#include <cstdint>

#include "skein/errors.hpp"

namespace skein {

// Coefficient ring of a polynomial: the integers when modulus == 0,
// otherwise Z/p for a prime p.  Kept as a value so polynomials over
// different rings can coexist and mixed-ring arithmetic can be rejected.
struct Ring {
  std::uint32_t modulus = 0;

  bool modular() const noexcept { return modulus != 0; }
  friend bool operator==(const Ring&, const Ring&) = default;
};

inline constexpr Ring integers{};

bool is_prime(std::uint32_t n) noexcept;

// Throws not_prime unless p is prime.
Ring mod_ring(std::uint32_t p);

void require_prime(std::uint32_t p);

// Inverse of x mod p; pre: p prime, x not divisible by p.
std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p);

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

} // namespace skein
