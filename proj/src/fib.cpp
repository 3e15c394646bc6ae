#include "skein/fib.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

namespace {
std::mutex g_fib_mu;
std::vector<Int> g_fib{0, 1};
} // namespace

Int fib(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_fib_mu);
  while (g_fib.size() <= n) {
    g_fib.push_back(g_fib[g_fib.size() - 1] + g_fib[g_fib.size() - 2]);
  }
  return g_fib[n];
}

int legendre5(std::uint32_t p) {
  require_prime(p);
  switch (p % 5) {
    case 0: return 0; // p == 5
    case 1:
    case 4: return 1;
    default: return -1; // 2 or 3 mod 5
  }
}

FibDivisibility fib_divisibility_check(std::uint32_t p) {
  const int chi = legendre5(p);
  const std::size_t index = static_cast<std::size_t>(static_cast<long long>(p) - chi);
  const std::uint32_t r = residue(fib(index), p);
  if (r != 0) {
    fail(errc::assertion_failed, "F_" + std::to_string(index) + " mod " + std::to_string(p) +
                                     " = " + std::to_string(r) + ", expected 0");
  }
  return FibDivisibility{index, 0};
}

} // namespace skein
