#pragma once

#include <cstddef>
#include <cstdint>

#include "skein/bigint.hpp"

namespace skein {

// Exact Fibonacci numbers, F_0 = 0, F_1 = 1, grown on demand.  Returns a
// copy: the process-wide cache behind fib() is mutex-guarded and may
// reallocate.
Int fib(std::size_t n);

// Legendre symbol (p|5): +1 for p = +-1 mod 5, -1 for p = +-2 mod 5, 0 for 5.
// Throws not_prime.
int legendre5(std::uint32_t p);

struct FibDivisibility {
  std::size_t index; // p - (p|5)
  std::uint32_t residue; // F_index mod p, always 0
};

// Index n = p - (p|5) with F_n = 0 mod p; the divisibility is re-checked and
// a failure throws assertion_failed (it would mean a Fibonacci bug).
FibDivisibility fib_divisibility_check(std::uint32_t p);

} // namespace skein
