/* knotskein: skein (HOMFLY) polynomial toolkit for two-strand torus links,
 * braid closures, and mod-p knot classification.
 *
 * Conventions: every function returns a ks_status; results come back through
 * out-parameters that are written only on KS_OK.  Strings returned through
 * char** are heap copies, released with ks_string_free.  Handles are opaque,
 * immutable once created, and released with their matching _free (null is
 * accepted).  On failure ks_last_error() carries a thread-local message.
 * Shared internal caches are mutex-guarded; handles may be used from any
 * thread but each handle should be used from one thread at a time.
 */
#ifndef KNOTSKEIN_H
#define KNOTSKEIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ks_status {
  KS_OK = 0,
  KS_ERR_USAGE = 1,      /* malformed text or bad arguments */
  KS_ERR_DOMAIN = 2,     /* well-formed request outside the math's domain */
  KS_ERR_INCOMPLETE = 3, /* skein oracle hit its cap or declared no progress */
  KS_ERR_INVARIANT = 4   /* dataset row or internal cross-check failed */
} ks_status;

const char* ks_last_error(void);
void ks_string_free(char* s);

typedef struct ks_poly1 ks_poly1;   /* Laurent polynomial in a */
typedef struct ks_poly2 ks_poly2;   /* Laurent polynomial in a and z */
typedef struct ks_braid ks_braid;   /* braid word with strand count */
typedef struct ks_knot ks_knot;     /* connected-sum knot expression */
typedef struct ks_table ks_table;   /* knot catalogue */
typedef struct ks_report ks_report; /* classification report */

/* ---- one-variable polynomials (modulus 0 means Z, otherwise a prime) ---- */

ks_status ks_poly1_parse(const char* text, uint32_t modulus, ks_poly1** out);
ks_status ks_poly1_format(const ks_poly1* p, char** out);
ks_status ks_poly1_equal(const ks_poly1* p, const ks_poly1* q, int* out);
ks_status ks_poly1_is_one(const ks_poly1* p, int* out);
ks_status ks_poly1_add(const ks_poly1* p, const ks_poly1* q, ks_poly1** out);
ks_status ks_poly1_mul(const ks_poly1* p, const ks_poly1* q, ks_poly1** out);
ks_status ks_poly1_mirror(const ks_poly1* p, ks_poly1** out);
ks_status ks_poly1_degree_stats(const ks_poly1* p, int32_t* mindeg, int32_t* maxdeg,
                                uint32_t* span);
ks_status ks_poly1_reduce_mod(const ks_poly1* p, uint32_t prime, ks_poly1** out);
ks_status ks_poly1_divrem(const ks_poly1* p, const ks_poly1* d, ks_poly1** quo, ks_poly1** rem);
void ks_poly1_free(ks_poly1* p);

/* ---- two-variable polynomials ---- */

ks_status ks_poly2_parse(const char* text, uint32_t modulus, ks_poly2** out);
ks_status ks_poly2_format(const ks_poly2* p, char** out);
ks_status ks_poly2_equal(const ks_poly2* p, const ks_poly2* q, int* out);
ks_status ks_poly2_add(const ks_poly2* p, const ks_poly2* q, ks_poly2** out);
ks_status ks_poly2_mul(const ks_poly2* p, const ks_poly2* q, ks_poly2** out);
ks_status ks_poly2_reduce_mod(const ks_poly2* p, uint32_t prime, ks_poly2** out);
/* Substitute z = n; prime 0 evaluates in the polynomial's own ring. */
ks_status ks_poly2_eval_z(const ks_poly2* p, int64_t n, uint32_t prime, ks_poly1** out);
ks_status ks_poly2_subst_z_delta(const ks_poly2* p, ks_poly1** out);
/* Exact division by z^2 - (a^-1 - a)^2; *quotient stays null when not divisible. */
ks_status ks_poly2_div_annihilator(const ks_poly2* p, int* divisible, ks_poly2** quotient);
void ks_poly2_free(ks_poly2* p);

/* ---- torus links, state recursion, Fibonacci ---- */

ks_status ks_torus_poly(int64_t n, ks_poly2** out);
ks_status ks_torus_period(uint32_t prime, uint64_t eval, uint64_t* out);
ks_status ks_trivializing_exponent(uint32_t prime, uint64_t eval, uint64_t* out);
ks_status ks_closed_form_z0(uint32_t k, ks_poly1** out);
/* Decimal strings of the exact z = 1 coefficients (F_{2k+2}, -F_{2k}). */
ks_status ks_closed_form_z1(uint32_t k, char** coeff_low, char** coeff_high);
ks_status ks_is_prime(uint32_t n, int* out);
/* Index p - (p|5) and F_index mod p (always 0). */
ks_status ks_fib_check(uint32_t prime, uint64_t* index, uint32_t* residue);

/* ---- braid words and the skein oracle (class_cap 0 means default 100000) ---- */

ks_status ks_braid_parse(uint32_t strands, const char* text, ks_braid** out);
ks_status ks_braid_format(const ks_braid* b, char** out);
ks_status ks_braid_strands(const ks_braid* b, uint32_t* out);
ks_status ks_braid_components(const ks_braid* b, uint32_t* out);
ks_status ks_braid_canonicalize(const ks_braid* b, uint64_t class_cap, ks_braid** out);
ks_status ks_braid_reduce(const ks_braid* b, uint64_t class_cap, ks_braid** out);
ks_status ks_homfly(const ks_braid* b, uint64_t class_cap, ks_poly2** out);
void ks_braid_free(ks_braid* b);

/* ---- knot expressions ---- */

ks_status ks_knot_parse(const char* text, ks_knot** out);
ks_status ks_knot_format(const ks_knot* k, char** out);
ks_status ks_knot_mirror(const ks_knot* k, ks_knot** out);
ks_status ks_knot_connect(const ks_knot* k1, const ks_knot* k2, ks_knot** out);
/* table may be null for torus-only expressions. */
ks_status ks_knot_eval_mod(const ks_knot* k, uint32_t prime, uint64_t eval,
                           const ks_table* table, ks_poly1** out);
ks_status ks_knot_braid_word(const ks_knot* k, ks_braid** out);
ks_status ks_knot_braid_index_bound(const ks_knot* k, const ks_table* table, uint32_t* out);
ks_status ks_trivial_knot(uint32_t prime, uint64_t eval, ks_knot** out);
ks_status ks_normalize_shift(const ks_poly1* q, uint32_t m, uint32_t* l, int32_t* sign,
                             ks_poly1** shifted);
void ks_knot_free(ks_knot* k);

/* ---- catalogue and classification ---- */

ks_status ks_table_load(const char* path, ks_table** out);
ks_status ks_table_size(const ks_table* t, size_t* out);
/* Re-checks every record and classifies both base windows; *ok is 0/1 and
 * *report is printable either way. */
ks_status ks_table_verify(const ks_table* t, int* ok, char** report);
void ks_table_free(ks_table* t);

ks_status ks_classify(const ks_table* t, int32_t lo, int32_t hi, uint32_t max_factors,
                      ks_report** out);
ks_status ks_report_counts(const ks_report* r, uint64_t* candidates, uint64_t* realized);
ks_status ks_report_text(const ks_report* r, char** out);
ks_status ks_report_json(const ks_report* r, char** out);
void ks_report_free(ks_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KNOTSKEIN_H */
