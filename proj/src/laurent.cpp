#include "skein/laurent.hpp"

#include <algorithm>
#include <string>

namespace skein {

namespace {

Ring common_ring(const Ring& x, const Ring& y) {
  if (x != y) {
    fail(errc::mixed_ring, "operands live in different coefficient rings (mod " +
                               std::to_string(x.modulus) + " vs mod " + std::to_string(y.modulus) +
                               ")");
  }
  return x;
}

Int fold(const Int& v, const Ring& ring) {
  if (!ring.modular()) return v;
  return Int(residue(v, ring.modulus));
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = base % p;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

} // namespace

void Laurent1::add_term(int exp, const Int& coeff) {
  Int c = fold(coeff, ring_);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second = fold(it->second + c, ring_);
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent1 Laurent1::term(Int coeff, int exp, Ring ring) {
  Laurent1 p(ring);
  p.add_term(exp, coeff);
  return p;
}

bool Laurent1::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int Laurent1::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent1 operator+(const Laurent1& p, const Laurent1& q) {
  Laurent1 r(common_ring(p.ring_, q.ring_));
  r.terms_ = p.terms_;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

Laurent1 operator-(const Laurent1& p, const Laurent1& q) {
  Laurent1 r(common_ring(p.ring_, q.ring_));
  r.terms_ = p.terms_;
  for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
  return r;
}

Laurent1 operator*(const Laurent1& p, const Laurent1& q) {
  Laurent1 r(common_ring(p.ring_, q.ring_));
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, cp * cq);
  return r;
}

Laurent1 Laurent1::operator-() const {
  Laurent1 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

Laurent1 Laurent1::mirror() const {
  Laurent1 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

Laurent1 Laurent1::shifted(int delta) const {
  Laurent1 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(e + delta, c);
  return r;
}

DegreeStats Laurent1::degree_stats() const {
  if (terms_.empty()) fail(errc::zero_polynomial, "degree statistics of the zero polynomial");
  int lo = terms_.begin()->first;
  int hi = terms_.rbegin()->first;
  return DegreeStats{lo, hi, static_cast<unsigned>(hi - lo)};
}

Laurent1 Laurent1::reduce_mod(std::uint32_t prime) const {
  require_prime(prime);
  if (ring_.modular()) {
    if (ring_.modulus != prime) {
      fail(errc::mixed_ring, "cannot reduce mod " + std::to_string(prime) +
                                 ": polynomial already lives mod " + std::to_string(ring_.modulus));
    }
    return *this;
  }
  Laurent1 r(Ring{prime});
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

std::pair<Laurent1, Laurent1> Laurent1::divrem(const Laurent1& p, const Laurent1& d) {
  Ring ring = common_ring(p.ring_, d.ring_);
  if (d.is_zero()) fail(errc::zero_divisor, "polynomial division by zero");
  if (p.is_zero()) return {Laurent1(ring), Laurent1(ring)};

  const int sp = p.terms_.begin()->first;
  const int sd = d.terms_.begin()->first;
  Laurent1 rem = p.shifted(-sp);
  Laurent1 div = d.shifted(-sd);

  const int dd = div.terms_.rbegin()->first;
  const Int lead = div.terms_.rbegin()->second;
  Int lead_inv;
  if (ring.modular()) {
    lead_inv = inv_mod(static_cast<std::uint32_t>(lead.get_ui()), ring.modulus);
  } else if (lead != 1 && lead != -1) {
    fail(errc::non_invertible_lead,
         "divisor leading coefficient " + to_string(lead) + " is not a unit over Z");
  }

  Laurent1 quo(ring);
  while (!rem.is_zero() && rem.terms_.rbegin()->first >= dd) {
    const int e = rem.terms_.rbegin()->first - dd;
    Int t = ring.modular() ? fold(rem.terms_.rbegin()->second * lead_inv, ring)
                           : Int(rem.terms_.rbegin()->second * lead); // lead is +-1
    quo.add_term(e, t);
    for (const auto& [ed, cd] : div.terms_) rem.add_term(e + ed, -t * cd);
  }
  return {quo.shifted(sp - sd), rem.shifted(sp)};
}

bool Laurent1::divisible(const Laurent1& p, const Laurent1& d) {
  return divrem(p, d).second.is_zero();
}

void Laurent2::add_term(int aexp, int zexp, const Int& coeff) {
  Int c = fold(coeff, ring_);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({aexp, zexp}, c);
  if (!fresh) {
    it->second = fold(it->second + c, ring_);
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent2 Laurent2::term(Int coeff, int aexp, int zexp, Ring ring) {
  Laurent2 p(ring);
  p.add_term(aexp, zexp, coeff);
  return p;
}

Laurent2 Laurent2::delta() {
  Laurent2 d;
  d.add_term(-1, -1, 1);
  d.add_term(1, -1, -1);
  return d;
}

Laurent2 Laurent2::delta_power(unsigned k) {
  Laurent2 r = one();
  for (unsigned i = 0; i < k; ++i) r = r * delta();
  return r;
}

Int Laurent2::coeff(int aexp, int zexp) const {
  auto it = terms_.find({aexp, zexp});
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent2 operator+(const Laurent2& p, const Laurent2& q) {
  Laurent2 r(common_ring(p.ring_, q.ring_));
  r.terms_ = p.terms_;
  for (const auto& [e, c] : q.terms_) r.add_term(e.first, e.second, c);
  return r;
}

Laurent2 operator-(const Laurent2& p, const Laurent2& q) {
  Laurent2 r(common_ring(p.ring_, q.ring_));
  r.terms_ = p.terms_;
  for (const auto& [e, c] : q.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

Laurent2 operator*(const Laurent2& p, const Laurent2& q) {
  Laurent2 r(common_ring(p.ring_, q.ring_));
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_)
      r.add_term(ep.first + eq.first, ep.second + eq.second, cp * cq);
  return r;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, -c);
  return r;
}

Laurent2 Laurent2::mirror_a() const {
  Laurent2 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(-e.first, e.second, c);
  return r;
}

Laurent2 Laurent2::mirror_link() const {
  Laurent2 r(ring_);
  for (const auto& [e, c] : terms_)
    r.add_term(-e.first, e.second, (e.second % 2 != 0) ? Int(-c) : c);
  return r;
}

Laurent2 Laurent2::shifted(int da, int dz) const {
  Laurent2 r(ring_);
  for (const auto& [e, c] : terms_) r.add_term(e.first + da, e.second + dz, c);
  return r;
}

Laurent2 Laurent2::reduce_mod(std::uint32_t prime) const {
  require_prime(prime);
  if (ring_.modular()) {
    if (ring_.modulus != prime) {
      fail(errc::mixed_ring, "cannot reduce mod " + std::to_string(prime) +
                                 ": polynomial already lives mod " + std::to_string(ring_.modulus));
    }
    return *this;
  }
  Laurent2 r(Ring{prime});
  for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c);
  return r;
}

Laurent1 Laurent2::eval_z(long long n, std::uint32_t prime) const {
  if (prime != 0) return reduce_mod(prime).eval_z(n, 0);

  int min_z = 0;
  for (const auto& [e, c] : terms_) min_z = std::min(min_z, e.second);

  if (ring_.modular()) {
    const std::uint32_t p = ring_.modulus;
    const std::uint32_t r = static_cast<std::uint32_t>(((n % p) + p) % p);
    if (min_z < 0 && r == 0) {
      fail(errc::z_singular, "z = 0 substituted into a polynomial with z^-1 terms");
    }
    const std::uint32_t rinv = min_z < 0 ? inv_mod(r, p) : 0;
    Laurent1 out(ring_);
    for (const auto& [e, c] : terms_) {
      const std::uint32_t base = e.second >= 0 ? r : rinv;
      const std::uint64_t exp = e.second >= 0 ? e.second : -static_cast<std::int64_t>(e.second);
      const std::uint32_t f = pow_mod(base, exp, p);
      out.add_term(e.first, c * f);
    }
    return out;
  }

  Laurent1 out;
  if (min_z == 0) {
    for (const auto& [e, c] : terms_) out.add_term(e.first, c * int_pow(make_int(n), e.second));
    return out;
  }
  if (n == 0) fail(errc::z_singular, "z = 0 substituted into a polynomial with z^-1 terms");

  // Clear denominators through n^{-min_z}, then peel the power back off.
  const unsigned long s = static_cast<unsigned long>(-min_z);
  const Int den = int_pow(make_int(n), s);
  std::map<int, Int> nums;
  for (const auto& [e, c] : terms_) {
    nums[e.first] += c * int_pow(make_int(n), static_cast<unsigned long>(e.second - min_z));
  }
  for (const auto& [aexp, num] : nums) {
    if (num == 0) continue;
    if (!divides(den, num)) {
      fail(errc::non_integral, "substituting z = " + std::to_string(n) +
                                   " does not clear the z^-1 denominators over Z");
    }
    out.add_term(aexp, num / den);
  }
  return out;
}

Laurent1 Laurent2::subst_z_delta() const {
  Laurent1 out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e.second < 0) {
      fail(errc::negative_z_power, "z -> a^-1 - a substitution needs z-exponents >= 0");
    }
    const unsigned long j = static_cast<unsigned long>(e.second);
    for (unsigned long t = 0; t <= j; ++t) {
      Int coef = c * binomial(j, t);
      if (t % 2 == 1) coef = -coef;
      out.add_term(e.first + static_cast<int>(2 * t) - e.second, coef);
    }
  }
  return out;
}

std::optional<Laurent2> Laurent2::div_by_annihilator() const {
  // z^2 - (a^-1 - a)^2 = z^2 + a^-2... careful: (a^-1 - a)^2 = a^-2 - 2 + a^2.
  Laurent2 ann(ring_);
  ann.add_term(0, 2, 1);
  ann.add_term(-2, 0, -1);
  ann.add_term(0, 0, 2);
  ann.add_term(2, 0, -1);

  if (is_zero()) return Laurent2(ring_);

  // z is a unit, so divisibility is unchanged by clearing z^-1 powers first.
  int min_z = 0;
  for (const auto& [e, c] : terms_) min_z = std::min(min_z, e.second);
  Laurent2 rem = shifted(0, -min_z);
  Laurent2 quo(ring_);
  while (!rem.is_zero()) {
    int zmax = rem.terms_.begin()->first.second;
    for (const auto& [e, c] : rem.terms_) zmax = std::max(zmax, e.second);
    if (zmax < 2) break;
    Laurent2 qt(ring_);
    for (const auto& [e, c] : rem.terms_) {
      if (e.second == zmax) qt.add_term(e.first, zmax - 2, c);
    }
    quo = quo + qt;
    rem = rem - qt * ann;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo.shifted(0, min_z);
}

} // namespace skein
