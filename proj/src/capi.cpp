#include "knotskein.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "skein/classifier.hpp"
#include "skein/fib.hpp"
#include "skein/knot_expr.hpp"
#include "skein/knot_table.hpp"
#include "skein/poly_text.hpp"
#include "skein/skein_oracle.hpp"
#include "skein/torus.hpp"

struct ks_poly1 {
  skein::Laurent1 v;
};
struct ks_poly2 {
  skein::Laurent2 v;
};
struct ks_braid {
  skein::BraidWord v;
};
struct ks_knot {
  skein::KnotExpr v;
};
struct ks_table {
  skein::KnotTable v;
};
struct ks_report {
  skein::ClassificationReport v;
};

namespace {

thread_local std::string t_last_error;

ks_status code_of(skein::errc c) {
  switch (c) {
    case skein::errc::syntax:
    case skein::errc::non_ascending:
      return KS_ERR_USAGE;
    case skein::errc::class_size_exceeded:
    case skein::errc::irreducible_word:
      return KS_ERR_INCOMPLETE;
    case skein::errc::invariant_violation:
    case skein::errc::unrealized_candidate:
    case skein::errc::assertion_failed:
      return KS_ERR_INVARIANT;
    default:
      return KS_ERR_DOMAIN;
  }
}

template <typename F>
ks_status guarded(F&& fn) {
  try {
    fn();
    return KS_OK;
  } catch (const skein::error& e) {
    t_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return KS_ERR_USAGE;
  }
}

ks_status usage(const char* msg) {
  t_last_error = msg;
  return KS_ERR_USAGE;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

skein::Ring ring_of(std::uint32_t modulus) {
  return modulus == 0 ? skein::integers : skein::mod_ring(modulus);
}

std::size_t cap_of(std::uint64_t class_cap) {
  return class_cap == 0 ? skein::kDefaultClassCap : static_cast<std::size_t>(class_cap);
}

} // namespace

extern "C" {

const char* ks_last_error(void) { return t_last_error.c_str(); }

void ks_string_free(char* s) { std::free(s); }

/* ---- poly1 ---- */

ks_status ks_poly1_parse(const char* text, uint32_t modulus, ks_poly1** out) {
  if (!text || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{skein::parse_poly1(text, ring_of(modulus))}; });
}

ks_status ks_poly1_format(const ks_poly1* p, char** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(skein::format_poly(p->v)); });
}

ks_status ks_poly1_equal(const ks_poly1* p, const ks_poly1* q, int* out) {
  if (!p || !q || !out) return usage("null argument");
  *out = p->v == q->v ? 1 : 0;
  return KS_OK;
}

ks_status ks_poly1_is_one(const ks_poly1* p, int* out) {
  if (!p || !out) return usage("null argument");
  *out = p->v.is_one() ? 1 : 0;
  return KS_OK;
}

ks_status ks_poly1_add(const ks_poly1* p, const ks_poly1* q, ks_poly1** out) {
  if (!p || !q || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v + q->v}; });
}

ks_status ks_poly1_mul(const ks_poly1* p, const ks_poly1* q, ks_poly1** out) {
  if (!p || !q || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v * q->v}; });
}

ks_status ks_poly1_mirror(const ks_poly1* p, ks_poly1** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v.mirror()}; });
}

ks_status ks_poly1_degree_stats(const ks_poly1* p, int32_t* mindeg, int32_t* maxdeg,
                                uint32_t* span) {
  if (!p || !mindeg || !maxdeg || !span) return usage("null argument");
  return guarded([&] {
    const skein::DegreeStats s = p->v.degree_stats();
    *mindeg = s.mindeg;
    *maxdeg = s.maxdeg;
    *span = s.span;
  });
}

ks_status ks_poly1_reduce_mod(const ks_poly1* p, uint32_t prime, ks_poly1** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v.reduce_mod(prime)}; });
}

ks_status ks_poly1_divrem(const ks_poly1* p, const ks_poly1* d, ks_poly1** quo, ks_poly1** rem) {
  if (!p || !d || !quo || !rem) return usage("null argument");
  return guarded([&] {
    auto [q, r] = skein::Laurent1::divrem(p->v, d->v);
    *quo = new ks_poly1{std::move(q)};
    *rem = new ks_poly1{std::move(r)};
  });
}

void ks_poly1_free(ks_poly1* p) { delete p; }

/* ---- poly2 ---- */

ks_status ks_poly2_parse(const char* text, uint32_t modulus, ks_poly2** out) {
  if (!text || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly2{skein::parse_poly2(text, ring_of(modulus))}; });
}

ks_status ks_poly2_format(const ks_poly2* p, char** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(skein::format_poly(p->v)); });
}

ks_status ks_poly2_equal(const ks_poly2* p, const ks_poly2* q, int* out) {
  if (!p || !q || !out) return usage("null argument");
  *out = p->v == q->v ? 1 : 0;
  return KS_OK;
}

ks_status ks_poly2_add(const ks_poly2* p, const ks_poly2* q, ks_poly2** out) {
  if (!p || !q || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly2{p->v + q->v}; });
}

ks_status ks_poly2_mul(const ks_poly2* p, const ks_poly2* q, ks_poly2** out) {
  if (!p || !q || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly2{p->v * q->v}; });
}

ks_status ks_poly2_reduce_mod(const ks_poly2* p, uint32_t prime, ks_poly2** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly2{p->v.reduce_mod(prime)}; });
}

ks_status ks_poly2_eval_z(const ks_poly2* p, int64_t n, uint32_t prime, ks_poly1** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v.eval_z(n, prime)}; });
}

ks_status ks_poly2_subst_z_delta(const ks_poly2* p, ks_poly1** out) {
  if (!p || !out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{p->v.subst_z_delta()}; });
}

ks_status ks_poly2_div_annihilator(const ks_poly2* p, int* divisible, ks_poly2** quotient) {
  if (!p || !divisible) return usage("null argument");
  return guarded([&] {
    auto q = p->v.div_by_annihilator();
    *divisible = q.has_value() ? 1 : 0;
    if (quotient) *quotient = q ? new ks_poly2{std::move(*q)} : nullptr;
  });
}

void ks_poly2_free(ks_poly2* p) { delete p; }

/* ---- torus / fib ---- */

ks_status ks_torus_poly(int64_t n, ks_poly2** out) {
  if (!out) return usage("null argument");
  return guarded([&] { *out = new ks_poly2{skein::torus_poly(n)}; });
}

ks_status ks_torus_period(uint32_t prime, uint64_t eval, uint64_t* out) {
  if (!out) return usage("null argument");
  return guarded([&] { *out = skein::torus_period(prime, eval); });
}

ks_status ks_trivializing_exponent(uint32_t prime, uint64_t eval, uint64_t* out) {
  if (!out) return usage("null argument");
  return guarded([&] { *out = skein::trivializing_exponent(prime, eval); });
}

ks_status ks_closed_form_z0(uint32_t k, ks_poly1** out) {
  if (!out) return usage("null argument");
  return guarded([&] { *out = new ks_poly1{skein::closed_form_z0(k)}; });
}

ks_status ks_closed_form_z1(uint32_t k, char** coeff_low, char** coeff_high) {
  if (!coeff_low || !coeff_high) return usage("null argument");
  return guarded([&] {
    auto [lo, hi] = skein::closed_form_z1(k);
    *coeff_low = dup_string(skein::to_string(lo));
    *coeff_high = dup_string(skein::to_string(hi));
  });
}

ks_status ks_is_prime(uint32_t n, int* out) {
  if (!out) return usage("null argument");
  *out = skein::is_prime(n) ? 1 : 0;
  return KS_OK;
}

ks_status ks_fib_check(uint32_t prime, uint64_t* index, uint32_t* residue) {
  if (!index || !residue) return usage("null argument");
  return guarded([&] {
    const skein::FibDivisibility d = skein::fib_divisibility_check(prime);
    *index = d.index;
    *residue = d.residue;
  });
}

/* ---- braid / oracle ---- */

ks_status ks_braid_parse(uint32_t strands, const char* text, ks_braid** out) {
  if (!text || !out) return usage("null argument");
  return guarded([&] { *out = new ks_braid{skein::BraidWord::parse(strands, text)}; });
}

ks_status ks_braid_format(const ks_braid* b, char** out) {
  if (!b || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(b->v.to_text()); });
}

ks_status ks_braid_strands(const ks_braid* b, uint32_t* out) {
  if (!b || !out) return usage("null argument");
  *out = b->v.strands();
  return KS_OK;
}

ks_status ks_braid_components(const ks_braid* b, uint32_t* out) {
  if (!b || !out) return usage("null argument");
  return guarded([&] { *out = b->v.closure_components(); });
}

ks_status ks_braid_canonicalize(const ks_braid* b, uint64_t class_cap, ks_braid** out) {
  if (!b || !out) return usage("null argument");
  return guarded([&] { *out = new ks_braid{skein::canonicalize(b->v, cap_of(class_cap))}; });
}

ks_status ks_braid_reduce(const ks_braid* b, uint64_t class_cap, ks_braid** out) {
  if (!b || !out) return usage("null argument");
  return guarded([&] { *out = new ks_braid{skein::reduce(b->v, cap_of(class_cap))}; });
}

ks_status ks_homfly(const ks_braid* b, uint64_t class_cap, ks_poly2** out) {
  if (!b || !out) return usage("null argument");
  return guarded(
      [&] { *out = new ks_poly2{skein::homfly_of_closure(b->v, nullptr, cap_of(class_cap))}; });
}

void ks_braid_free(ks_braid* b) { delete b; }

/* ---- knot expressions ---- */

ks_status ks_knot_parse(const char* text, ks_knot** out) {
  if (!text || !out) return usage("null argument");
  return guarded([&] { *out = new ks_knot{skein::KnotExpr::parse(text)}; });
}

ks_status ks_knot_format(const ks_knot* k, char** out) {
  if (!k || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(k->v.to_text()); });
}

ks_status ks_knot_mirror(const ks_knot* k, ks_knot** out) {
  if (!k || !out) return usage("null argument");
  return guarded([&] { *out = new ks_knot{k->v.mirror()}; });
}

ks_status ks_knot_connect(const ks_knot* k1, const ks_knot* k2, ks_knot** out) {
  if (!k1 || !k2 || !out) return usage("null argument");
  return guarded([&] { *out = new ks_knot{connect(k1->v, k2->v)}; });
}

ks_status ks_knot_eval_mod(const ks_knot* k, uint32_t prime, uint64_t eval,
                           const ks_table* table, ks_poly1** out) {
  if (!k || !out) return usage("null argument");
  return guarded(
      [&] { *out = new ks_poly1{k->v.eval_mod(prime, eval, table ? &table->v : nullptr)}; });
}

ks_status ks_knot_braid_word(const ks_knot* k, ks_braid** out) {
  if (!k || !out) return usage("null argument");
  return guarded([&] { *out = new ks_braid{k->v.braid_word()}; });
}

ks_status ks_knot_braid_index_bound(const ks_knot* k, const ks_table* table, uint32_t* out) {
  if (!k || !out) return usage("null argument");
  return guarded([&] { *out = k->v.braid_index_bound(table ? &table->v : nullptr); });
}

ks_status ks_trivial_knot(uint32_t prime, uint64_t eval, ks_knot** out) {
  if (!out) return usage("null argument");
  return guarded([&] { *out = new ks_knot{skein::trivial_knot(prime, eval)}; });
}

ks_status ks_normalize_shift(const ks_poly1* q, uint32_t m, uint32_t* l, int32_t* sign,
                             ks_poly1** shifted) {
  if (!q || !l || !sign || !shifted) return usage("null argument");
  return guarded([&] {
    skein::ShiftNormalization s = skein::normalize_shift(q->v, m);
    *l = s.l;
    *sign = s.sign;
    *shifted = new ks_poly1{std::move(s.shifted)};
  });
}

void ks_knot_free(ks_knot* k) { delete k; }

/* ---- table / classifier ---- */

ks_status ks_table_load(const char* path, ks_table** out) {
  if (!path || !out) return usage("null argument");
  return guarded([&] { *out = new ks_table{skein::KnotTable::load(path)}; });
}

ks_status ks_table_size(const ks_table* t, size_t* out) {
  if (!t || !out) return usage("null argument");
  *out = t->v.size();
  return KS_OK;
}

ks_status ks_table_verify(const ks_table* t, int* ok, char** report) {
  if (!t || !ok || !report) return usage("null argument");
  return guarded([&] {
    const skein::TableVerification v = skein::verify_table(t->v);
    *ok = v.ok ? 1 : 0;
    *report = dup_string(v.report);
  });
}

void ks_table_free(ks_table* t) { delete t; }

ks_status ks_classify(const ks_table* t, int32_t lo, int32_t hi, uint32_t max_factors,
                      ks_report** out) {
  if (!t || !out) return usage("null argument");
  if (max_factors == 0) return usage("max_factors must be at least 1");
  return guarded([&] {
    *out = new ks_report{skein::classify_window(skein::DegreeWindow{lo, hi}, t->v, max_factors)};
  });
}

ks_status ks_report_counts(const ks_report* r, uint64_t* candidates, uint64_t* realized) {
  if (!r || !candidates || !realized) return usage("null argument");
  *candidates = r->v.entries.size();
  *realized = r->v.realized();
  return KS_OK;
}

ks_status ks_report_text(const ks_report* r, char** out) {
  if (!r || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(skein::report_text(r->v)); });
}

ks_status ks_report_json(const ks_report* r, char** out) {
  if (!r || !out) return usage("null argument");
  return guarded([&] { *out = dup_string(skein::report_json(r->v)); });
}

void ks_report_free(ks_report* r) { delete r; }

} // extern "C"
