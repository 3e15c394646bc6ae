#pragma once

#include <map>
#include <optional>
#include <utility>

#include "skein/bigint.hpp"
#include "skein/ring.hpp"

namespace skein {

struct DegreeStats {
  int mindeg = 0;
  int maxdeg = 0;
  unsigned span = 0; // maxdeg - mindeg
};

// Sparse Laurent polynomial in one variable a.  Terms map exponent to a
// nonzero coefficient; over a modular ring coefficients sit in [1, p-1].
// The zero polynomial is the empty map.
class Laurent1 {
public:
  Laurent1() = default; // zero over Z
  explicit Laurent1(Ring ring) : ring_(ring) {}

  static Laurent1 term(Int coeff, int exp, Ring ring = integers);
  static Laurent1 one(Ring ring = integers) { return term(1, 0, ring); }

  const Ring& ring() const noexcept { return ring_; }
  const std::map<int, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  Int coeff(int exp) const;

  friend Laurent1 operator+(const Laurent1& p, const Laurent1& q);
  friend Laurent1 operator-(const Laurent1& p, const Laurent1& q);
  friend Laurent1 operator*(const Laurent1& p, const Laurent1& q);
  Laurent1 operator-() const;
  friend bool operator==(const Laurent1&, const Laurent1&) = default;

  // a -> a^-1
  Laurent1 mirror() const;
  // * a^delta
  Laurent1 shifted(int delta) const;
  // Throws zero_polynomial on the zero polynomial.
  DegreeStats degree_stats() const;
  Laurent1 reduce_mod(std::uint32_t prime) const;

  // p = q*d + r with deg-span(r) < deg-span(d), via the minimal-degree-0
  // normalization of both operands.  Requires d nonzero with unit leading
  // coefficient (any nonzero residue mod p, +-1 over Z).
  static std::pair<Laurent1, Laurent1> divrem(const Laurent1& p, const Laurent1& d);

  static bool divisible(const Laurent1& p, const Laurent1& d);

  // Internal: inserts coeff*a^exp, folding into the ring and dropping zeros.
  void add_term(int exp, const Int& coeff);

private:
  Ring ring_{};
  std::map<int, Int> terms_;
};

// Sparse Laurent polynomial in a and z; keys are (a-exponent, z-exponent).
class Laurent2 {
public:
  Laurent2() = default; // zero over Z
  explicit Laurent2(Ring ring) : ring_(ring) {}

  static Laurent2 term(Int coeff, int aexp, int zexp, Ring ring = integers);
  static Laurent2 one(Ring ring = integers) { return term(1, 0, 0, ring); }
  // (a^-1 - a) z^-1, the value of a split unknotted component.
  static Laurent2 delta();
  static Laurent2 delta_power(unsigned k);

  const Ring& ring() const noexcept { return ring_; }
  const std::map<std::pair<int, int>, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Int coeff(int aexp, int zexp) const;

  friend Laurent2 operator+(const Laurent2& p, const Laurent2& q);
  friend Laurent2 operator-(const Laurent2& p, const Laurent2& q);
  friend Laurent2 operator*(const Laurent2& p, const Laurent2& q);
  Laurent2 operator-() const;
  friend bool operator==(const Laurent2&, const Laurent2&) = default;

  // a -> a^-1 only; the HOMFLY mirror rule for knots.
  Laurent2 mirror_a() const;
  // a -> a^-1, z -> -z; the HOMFLY mirror rule for arbitrary links.
  Laurent2 mirror_link() const;
  // * a^da * z^dz
  Laurent2 shifted(int da, int dz) const;
  Laurent2 reduce_mod(std::uint32_t prime) const;

  // Substitute z = n.  With prime == 0 the substitution happens in the
  // polynomial's own ring (z^-1 terms need n invertible there, which over Z
  // means the result must clear denominators exactly); otherwise the
  // polynomial is reduced mod prime first and n is read mod prime.
  Laurent1 eval_z(long long n, std::uint32_t prime = 0) const;

  // Substitute z = a^-1 - a; requires all z-exponents >= 0.
  Laurent1 subst_z_delta() const;

  // Exact division by z^2 - (a^-1 - a)^2, the annihilator of knot-polynomial
  // differences; nullopt when not divisible.
  std::optional<Laurent2> div_by_annihilator() const;

  void add_term(int aexp, int zexp, const Int& coeff);

private:
  Ring ring_{};
  std::map<std::pair<int, int>, Int> terms_;
};

} // namespace skein
