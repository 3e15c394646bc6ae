#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

// Skein polynomial of the (2, n) torus link, the closure of sigma_1^n on two
// strands.  Computed over Z by the two-term recursion
//     P_{n} = a^2 P_{n-2} + a z P_{n-1}
// from P_0 = (a^-1 - a) z^-1 and P_1 = 1, run downward for n < 0.  Results
// are cached process-wide (mutex-guarded); no closed form enters this path,
// so the closed forms below stay independent cross-checks.
Laurent2 torus_poly(long long n);

// Coefficient quadruple of the mod-p recursion at z = N: at step k the even
// polynomial is a_k a^{2k-1} + b_k a^{2k+1} and the odd one c_k a^{2k} +
// d_k a^{2k+2}.  One step advances both pairs by the determinant-1 matrix
// [[1, N], [N, 1+N^2]].
struct TorusState {
  std::uint32_t p = 2;
  std::uint32_t n_eval = 1; // N mod p, nonzero
  std::uint64_t k = 0;
  std::array<std::uint32_t, 4> quad{}; // a_k, b_k, c_k, d_k

  friend bool operator==(const TorusState&, const TorusState&) = default;
};

// Quadruple at k = 0: (N^-1, -N^-1, 1, 0) mod p.
// Throws not_prime; throws zero_evaluation when p divides N.
TorusState torus_initial_state(std::uint32_t p, std::uint64_t n);

TorusState state_step(const TorusState& s);

// Minimal m >= 1 with step^m(initial) == initial.
std::uint64_t torus_period(std::uint32_t p, std::uint64_t n);

// Smallest even M with P_{T(2,M+1)}(a, N) = a^M mod p: twice the period, or
// 2p when p | N (z = 0 route through the closed form).
std::uint64_t trivializing_exponent(std::uint32_t p, std::uint64_t n);

// Exact z = 1 coefficients of a^{2k} and a^{2k+2} in P_{T(2,2k+1)}:
// (F_{2k+2}, -F_{2k}).
std::pair<Int, Int> closed_form_z1(unsigned k);

// P_{T(2,2k-1)}(a, 0) = k a^{2k-2} - (k-1) a^{2k}, k >= 1, over Z.
Laurent1 closed_form_z0(unsigned k);

} // namespace skein
