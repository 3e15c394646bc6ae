#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skein/braid.hpp"
#include "skein/knot_table.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct TorusFactor {
  long long n = 1; // odd; negative for the mirror

  friend bool operator==(const TorusFactor&, const TorusFactor&) = default;
};

struct NamedFactor {
  std::string id;
  bool mirrored = false;

  friend bool operator==(const NamedFactor&, const NamedFactor&) = default;
};

using KnotFactor = std::variant<TorusFactor, NamedFactor>;

// Connected sum of torus knots T(2, n) and catalogued knots, kept as a
// sorted factor multiset.  Text form joins factors with '#': "3_1*#T(2,-7)",
// "O" for the unknot.  Named factors take a trailing '*' for the mirror.
class KnotExpr {
public:
  KnotExpr() = default; // unknot

  static KnotExpr unknot() { return {}; }
  static KnotExpr torus(long long n);
  static KnotExpr named(std::string id, bool mirrored = false);
  static KnotExpr parse(std::string_view text);

  std::string to_text() const;
  const std::vector<KnotFactor>& factors() const noexcept { return factors_; }
  bool is_unknot() const noexcept { return factors_.empty(); }

  KnotExpr mirror() const;
  friend KnotExpr connect(const KnotExpr& x, const KnotExpr& y);
  friend bool operator==(const KnotExpr&, const KnotExpr&) = default;

  // P(a, N) mod p, multiplicatively over the factors.  Torus factors run
  // through the exact recursion (z = 0 closed form when p | N); named
  // factors look up the table, which only carries (2, 1) data.
  Laurent1 eval_mod(std::uint32_t p, std::uint64_t n, const KnotTable* table = nullptr) const;

  // For torus factors n_1..n_k: s1^{n_1} s2^{n_2} ... sk^{n_k} on k+1
  // strands.  Throws named_factor_present if a catalogue factor is present.
  BraidWord braid_word() const;

  // Sum of factor braid indexes minus (factors - 1); torus factors
  // contribute 2 (or 1 for T(2,+-1)), named factors their table value.
  unsigned braid_index_bound(const KnotTable* table = nullptr) const;

private:
  std::vector<KnotFactor> factors_;
  void push(KnotFactor f);
  void sort_factors();
};

// T(2, M+1) # T(2, -(M+1)) with M the trivializing exponent; satisfies
// P(a, N) = 1 mod p, which is re-verified before returning.
KnotExpr trivial_knot(std::uint32_t p, std::uint64_t n);

struct ShiftNormalization {
  unsigned l = 0; // number of 2m-steps applied
  int sign = 1;   // +1 when the shift multiplies by a^{+2lm}
  Laurent1 shifted;
};

// Multiply q by a^{sign*2lm} so the minimal degree lands in [0, 2m-1]; the
// matching connected-sum addend is T(2, sign*(2lm+1)).
ShiftNormalization normalize_shift(const Laurent1& q, unsigned m);

} // namespace skein
