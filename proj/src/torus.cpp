#include "skein/torus.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "skein/fib.hpp"

namespace skein {

namespace {

std::mutex g_torus_mu;
// up[i] = P_{T(2,i)}, down[j] = P_{T(2,-j)}; both share the z^-1 seed P_0.
std::vector<Laurent2> g_up;
std::vector<Laurent2> g_down;

void seed_caches() {
  if (!g_up.empty()) return;
  g_up.push_back(Laurent2::delta());
  g_up.push_back(Laurent2::one());
  g_down.push_back(g_up[0]);
}

} // namespace

Laurent2 torus_poly(long long n) {
  std::lock_guard<std::mutex> lock(g_torus_mu);
  seed_caches();
  if (n >= 0) {
    const std::size_t want = static_cast<std::size_t>(n);
    while (g_up.size() <= want) {
      const std::size_t i = g_up.size();
      g_up.push_back(g_up[i - 2].shifted(2, 0) + g_up[i - 1].shifted(1, 1));
    }
    return g_up[want];
  }
  const std::size_t want = static_cast<std::size_t>(-n);
  while (g_down.size() <= want) {
    const std::size_t j = g_down.size();
    // P_{-j} = a^-2 (P_{-j+2} - a z P_{-j+1})
    const Laurent2& two_up = j >= 2 ? g_down[j - 2] : g_up[1];
    g_down.push_back((two_up - g_down[j - 1].shifted(1, 1)).shifted(-2, 0));
  }
  return g_down[want];
}

TorusState torus_initial_state(std::uint32_t p, std::uint64_t n) {
  require_prime(p);
  const std::uint32_t r = static_cast<std::uint32_t>(n % p);
  if (r == 0) {
    fail(errc::zero_evaluation, "z = " + std::to_string(n) + " vanishes mod " + std::to_string(p) +
                                    "; the state recursion needs an invertible evaluation");
  }
  const std::uint32_t rinv = inv_mod(r, p);
  return TorusState{p, r, 0, {rinv, p - rinv, 1, 0}};
}

TorusState state_step(const TorusState& s) {
  const std::uint32_t p = s.p, N = s.n_eval;
  const auto& [a, b, c, d] = s.quad;
  const std::uint32_t a2 = add_mod(a, mul_mod(N, c, p), p);
  const std::uint32_t b2 = add_mod(b, mul_mod(N, d, p), p);
  const std::uint32_t c2 = add_mod(c, mul_mod(N, a2, p), p);
  const std::uint32_t d2 = add_mod(d, mul_mod(N, b2, p), p);
  return TorusState{p, N, s.k + 1, {a2, b2, c2, d2}};
}

std::uint64_t torus_period(std::uint32_t p, std::uint64_t n) {
  const TorusState init = torus_initial_state(p, n);
  const unsigned __int128 guard =
      static_cast<unsigned __int128>(p) * p * p * p;
  TorusState s = state_step(init);
  std::uint64_t m = 1;
  while (s.quad != init.quad) {
    s = state_step(s);
    ++m;
    if (static_cast<unsigned __int128>(m) > guard) {
      fail(errc::assertion_failed, "state orbit exceeded the p^4 bound, which cannot happen");
    }
  }
  return m;
}

std::uint64_t trivializing_exponent(std::uint32_t p, std::uint64_t n) {
  require_prime(p);
  if (n % p == 0) return 2ull * p;
  return 2 * torus_period(p, n);
}

std::pair<Int, Int> closed_form_z1(unsigned k) {
  return {fib(2 * k + 2), -fib(2 * k)};
}

Laurent1 closed_form_z0(unsigned k) {
  if (k < 1) fail(errc::assertion_failed, "closed_form_z0 needs k >= 1");
  Laurent1 p;
  p.add_term(2 * static_cast<int>(k) - 2, Int(k));
  p.add_term(2 * static_cast<int>(k), -Int(k - 1));
  return p;
}

} // namespace skein
