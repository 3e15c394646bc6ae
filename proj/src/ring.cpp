#include "skein/ring.hpp"

#include <string>

namespace skein {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) fail(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
}

Ring mod_ring(std::uint32_t p) {
  require_prime(p);
  return Ring{p};
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  // Extended Euclid on (x, p); p prime and p does not divide x.
  std::int64_t r0 = x % p, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  std::int64_t inv = s0 % p;
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

} // namespace skein
