#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "knotskein.h"

namespace {

// Wraps a char* result so tests cannot leak it.
struct Str {
  char* p = nullptr;
  ~Str() { ks_string_free(p); }
  std::string get() const { return p ? p : "<null>"; }
};

std::string last_error() {
  const char* e = ks_last_error();
  return e ? e : "";
}

} // namespace

TEST_CASE("poly1 round trip and arithmetic") {
  ks_poly1* p = nullptr;
  ks_poly1* q = nullptr;
  REQUIRE(ks_poly1_parse("a^2 + a^4", 2, &p) == KS_OK);
  REQUIRE(ks_poly1_parse("a^-2 + a^2", 2, &q) == KS_OK);

  Str text;
  REQUIRE(ks_poly1_format(p, &text.p) == KS_OK);
  CHECK(text.get() == "a^2 + a^4");

  ks_poly1* sum = nullptr;
  REQUIRE(ks_poly1_add(p, q, &sum) == KS_OK);
  Str sum_text;
  REQUIRE(ks_poly1_format(sum, &sum_text.p) == KS_OK);
  CHECK(sum_text.get() == "a^-2 + a^4");

  ks_poly1* prod = nullptr;
  REQUIRE(ks_poly1_mul(p, q, &prod) == KS_OK);
  Str prod_text;
  REQUIRE(ks_poly1_format(prod, &prod_text.p) == KS_OK);
  CHECK(prod_text.get() == "1 + a^2 + a^4 + a^6");

  ks_poly1* m = nullptr;
  REQUIRE(ks_poly1_mirror(q, &m) == KS_OK);
  int eq = 0;
  REQUIRE(ks_poly1_equal(m, q, &eq) == KS_OK);
  CHECK(eq == 1);

  int32_t lo = 0, hi = 0;
  uint32_t span = 0;
  REQUIRE(ks_poly1_degree_stats(p, &lo, &hi, &span) == KS_OK);
  CHECK(lo == 2);
  CHECK(hi == 4);
  CHECK(span == 2);

  int one = 0;
  REQUIRE(ks_poly1_is_one(p, &one) == KS_OK);
  CHECK(one == 0);

  ks_poly1_free(p);
  ks_poly1_free(q);
  ks_poly1_free(sum);
  ks_poly1_free(prod);
  ks_poly1_free(m);
}

TEST_CASE("poly1 divrem") {
  ks_poly1* p = nullptr;
  ks_poly1* d = nullptr;
  REQUIRE(ks_poly1_parse("1 + a^2 + a^4", 2, &p) == KS_OK);
  REQUIRE(ks_poly1_parse("a^-2 + 1 + a^2", 2, &d) == KS_OK);
  ks_poly1* quo = nullptr;
  ks_poly1* rem = nullptr;
  REQUIRE(ks_poly1_divrem(p, d, &quo, &rem) == KS_OK);
  Str quo_text;
  REQUIRE(ks_poly1_format(quo, &quo_text.p) == KS_OK);
  CHECK(quo_text.get() == "a^2");
  Str rem_text;
  REQUIRE(ks_poly1_format(rem, &rem_text.p) == KS_OK);
  CHECK(rem_text.get() == "0");
  ks_poly1_free(p);
  ks_poly1_free(d);
  ks_poly1_free(quo);
  ks_poly1_free(rem);
}

TEST_CASE("error codes and messages") {
  ks_poly1* p = nullptr;
  CHECK(ks_poly1_parse("a^2 + a^2", 0, &p) == KS_ERR_USAGE);
  CHECK(p == nullptr);
  CHECK(last_error().find("twice") != std::string::npos);
  CHECK(ks_poly1_parse("a^4 + a^2", 0, &p) == KS_ERR_USAGE);
  CHECK(ks_poly1_parse("a^2", 4, &p) == KS_ERR_DOMAIN); // modulus must be prime
  CHECK(ks_poly1_parse(nullptr, 0, &p) == KS_ERR_USAGE);
  CHECK(ks_poly1_parse("a^2", 0, nullptr) == KS_ERR_USAGE);

  REQUIRE(ks_poly1_parse("a^2", 0, &p) == KS_OK);
  ks_poly1* r = nullptr;
  CHECK(ks_poly1_reduce_mod(p, 6, &r) == KS_ERR_DOMAIN);
  CHECK(last_error().find("prime") != std::string::npos);
  ks_poly1_free(p);

  // mixed rings
  ks_poly1* a = nullptr;
  ks_poly1* b = nullptr;
  REQUIRE(ks_poly1_parse("a^2", 2, &a) == KS_OK);
  REQUIRE(ks_poly1_parse("a^2", 3, &b) == KS_OK);
  ks_poly1* s = nullptr;
  CHECK(ks_poly1_add(a, b, &s) == KS_ERR_DOMAIN);
  ks_poly1_free(a);
  ks_poly1_free(b);
}

TEST_CASE("poly2 evaluation and knot checks") {
  ks_poly2* t3 = nullptr;
  REQUIRE(ks_torus_poly(3, &t3) == KS_OK);
  Str t3_text;
  REQUIRE(ks_poly2_format(t3, &t3_text.p) == KS_OK);
  CHECK(t3_text.get() == "2*a^2 + a^2*z^2 - a^4");

  ks_poly1* at1 = nullptr;
  REQUIRE(ks_poly2_eval_z(t3, 1, 0, &at1) == KS_OK);
  Str at1_text;
  REQUIRE(ks_poly1_format(at1, &at1_text.p) == KS_OK);
  CHECK(at1_text.get() == "3*a^2 - a^4");
  ks_poly1_free(at1);

  ks_poly1* mod2 = nullptr;
  REQUIRE(ks_poly2_eval_z(t3, 1, 2, &mod2) == KS_OK);
  Str mod2_text;
  REQUIRE(ks_poly1_format(mod2, &mod2_text.p) == KS_OK);
  CHECK(mod2_text.get() == "a^2 + a^4");
  ks_poly1_free(mod2);

  ks_poly1* unit = nullptr;
  REQUIRE(ks_poly2_subst_z_delta(t3, &unit) == KS_OK);
  int is_one = 0;
  REQUIRE(ks_poly1_is_one(unit, &is_one) == KS_OK);
  CHECK(is_one == 1);
  ks_poly1_free(unit);

  // difference of two knot polynomials divides by the annihilator
  ks_poly2* t5 = nullptr;
  REQUIRE(ks_torus_poly(5, &t5) == KS_OK);
  ks_poly2* minus_one = nullptr;
  REQUIRE(ks_poly2_parse("-1", 0, &minus_one) == KS_OK);
  ks_poly2* neg_t5 = nullptr;
  REQUIRE(ks_poly2_mul(minus_one, t5, &neg_t5) == KS_OK);
  ks_poly2* diff = nullptr;
  REQUIRE(ks_poly2_add(t3, neg_t5, &diff) == KS_OK);
  int divisible = 0;
  ks_poly2* quot = nullptr;
  REQUIRE(ks_poly2_div_annihilator(diff, &divisible, &quot) == KS_OK);
  CHECK(divisible == 1);
  CHECK(quot != nullptr);
  ks_poly2_free(quot);
  ks_poly2_free(diff);
  ks_poly2_free(neg_t5);
  ks_poly2_free(minus_one);
  ks_poly2_free(t5);

  ks_poly2* unordered = nullptr;
  CHECK(ks_poly2_parse("a^4 + a^2*z^2", 0, &unordered) == KS_ERR_USAGE);
  CHECK(unordered == nullptr);

  int not_div = -1;
  REQUIRE(ks_poly2_div_annihilator(t3, &not_div, nullptr) == KS_OK);
  CHECK(not_div == 0);

  // z = 0 with z^-1 terms present
  ks_poly2* hopf = nullptr;
  REQUIRE(ks_torus_poly(2, &hopf) == KS_OK);
  ks_poly1* bad = nullptr;
  CHECK(ks_poly2_eval_z(hopf, 0, 0, &bad) == KS_ERR_DOMAIN);
  ks_poly2_free(hopf);
  ks_poly2_free(t3);
}

TEST_CASE("torus state and fibonacci entry points") {
  uint64_t m = 0;
  REQUIRE(ks_torus_period(2, 1, &m) == KS_OK);
  CHECK(m == 3);
  REQUIRE(ks_torus_period(3, 1, &m) == KS_OK);
  CHECK(m == 4);
  CHECK(ks_torus_period(2, 2, &m) == KS_ERR_DOMAIN);
  CHECK(ks_torus_period(6, 1, &m) == KS_ERR_DOMAIN);

  uint64_t M = 0;
  REQUIRE(ks_trivializing_exponent(2, 1, &M) == KS_OK);
  CHECK(M == 6);
  REQUIRE(ks_trivializing_exponent(3, 3, &M) == KS_OK);
  CHECK(M == 6);

  ks_poly1* z0 = nullptr;
  REQUIRE(ks_closed_form_z0(2, &z0) == KS_OK);
  Str z0_text;
  REQUIRE(ks_poly1_format(z0, &z0_text.p) == KS_OK);
  CHECK(z0_text.get() == "2*a^2 - a^4");
  ks_poly1_free(z0);

  Str lo, hi;
  REQUIRE(ks_closed_form_z1(1, &lo.p, &hi.p) == KS_OK);
  CHECK(lo.get() == "3");
  CHECK(hi.get() == "-1");

  int prime = 0;
  REQUIRE(ks_is_prime(13, &prime) == KS_OK);
  CHECK(prime == 1);
  REQUIRE(ks_is_prime(1, &prime) == KS_OK);
  CHECK(prime == 0);

  uint64_t index = 0;
  uint32_t residue = 7;
  REQUIRE(ks_fib_check(7, &index, &residue) == KS_OK);
  CHECK(index == 8);
  CHECK(residue == 0);
  CHECK(ks_fib_check(8, &index, &residue) == KS_ERR_DOMAIN);
}

TEST_CASE("braids through the C surface") {
  ks_braid* b = nullptr;
  REQUIRE(ks_braid_parse(3, "s2 s1", &b) == KS_OK);
  uint32_t strands = 0;
  REQUIRE(ks_braid_strands(b, &strands) == KS_OK);
  CHECK(strands == 3);
  uint32_t comps = 0;
  REQUIRE(ks_braid_components(b, &comps) == KS_OK);
  CHECK(comps == 1);

  ks_braid* canon = nullptr;
  REQUIRE(ks_braid_canonicalize(b, 0, &canon) == KS_OK);
  Str canon_text;
  REQUIRE(ks_braid_format(canon, &canon_text.p) == KS_OK);
  CHECK(canon_text.get() == "s1 s2");
  ks_braid_free(canon);

  ks_braid* red = nullptr;
  REQUIRE(ks_braid_reduce(b, 0, &red) == KS_OK);
  uint32_t red_strands = 0;
  REQUIRE(ks_braid_strands(red, &red_strands) == KS_OK);
  CHECK(red_strands == 1); // the closure is an unknot
  ks_braid_free(red);
  ks_braid_free(b);

  ks_braid* tref = nullptr;
  REQUIRE(ks_braid_parse(2, "s1^3", &tref) == KS_OK);
  ks_poly2* p = nullptr;
  REQUIRE(ks_homfly(tref, 0, &p) == KS_OK);
  ks_poly2* expect = nullptr;
  REQUIRE(ks_torus_poly(3, &expect) == KS_OK);
  int eq = 0;
  REQUIRE(ks_poly2_equal(p, expect, &eq) == KS_OK);
  CHECK(eq == 1);
  ks_poly2_free(p);
  ks_poly2_free(expect);
  ks_braid_free(tref);

  // the class cap surfaces as incomplete
  ks_braid* big = nullptr;
  REQUIRE(ks_braid_parse(3, "s1 s2 s1 s2", &big) == KS_OK);
  ks_braid* capped = nullptr;
  CHECK(ks_braid_canonicalize(big, 2, &capped) == KS_ERR_INCOMPLETE);
  ks_braid_free(big);

  CHECK(ks_braid_parse(2, "s7", &b) == KS_ERR_USAGE);
}

TEST_CASE("knots and tables through the C surface") {
  const std::string path = std::string(SKEIN_DATA_DIR) + "/table1.csv";
  ks_table* table = nullptr;
  REQUIRE(ks_table_load(path.c_str(), &table) == KS_OK);
  size_t n = 0;
  REQUIRE(ks_table_size(table, &n) == KS_OK);
  CHECK(n == 12);

  ks_knot* k = nullptr;
  REQUIRE(ks_knot_parse("3_1#8_3", &k) == KS_OK);
  ks_poly1* v = nullptr;
  REQUIRE(ks_knot_eval_mod(k, 2, 1, table, &v) == KS_OK);
  Str v_text;
  REQUIRE(ks_poly1_format(v, &v_text.p) == KS_OK);
  CHECK(v_text.get() == "a^-2 + a^8");
  ks_poly1_free(v);

  ks_knot* mirror = nullptr;
  REQUIRE(ks_knot_mirror(k, &mirror) == KS_OK);
  Str mirror_text;
  REQUIRE(ks_knot_format(mirror, &mirror_text.p) == KS_OK);
  CHECK(mirror_text.get() == "3_1*#8_3*");
  ks_knot_free(mirror);

  uint32_t bound = 0;
  REQUIRE(ks_knot_braid_index_bound(k, table, &bound) == KS_OK);
  CHECK(bound == 6);

  ks_poly1* unsupported = nullptr;
  CHECK(ks_knot_eval_mod(k, 3, 1, table, &unsupported) == KS_ERR_DOMAIN);
  ks_knot_free(k);

  ks_knot* missing = nullptr;
  REQUIRE(ks_knot_parse("9_99", &missing) == KS_OK);
  ks_poly1* nope = nullptr;
  CHECK(ks_knot_eval_mod(missing, 2, 1, table, &nope) == KS_ERR_DOMAIN);
  ks_braid* no_word = nullptr;
  CHECK(ks_knot_braid_word(missing, &no_word) == KS_ERR_DOMAIN);
  ks_knot_free(missing);

  ks_knot* trivial = nullptr;
  REQUIRE(ks_trivial_knot(2, 1, &trivial) == KS_OK);
  Str trivial_text;
  REQUIRE(ks_knot_format(trivial, &trivial_text.p) == KS_OK);
  CHECK(trivial_text.get() == "T(2,7)#T(2,-7)");
  ks_braid* word = nullptr;
  REQUIRE(ks_knot_braid_word(trivial, &word) == KS_OK);
  Str word_text;
  REQUIRE(ks_braid_format(word, &word_text.p) == KS_OK);
  CHECK(word_text.get() == "s1^7 s2^-7");
  ks_braid_free(word);
  ks_knot_free(trivial);

  ks_poly1* q = nullptr;
  REQUIRE(ks_poly1_parse("a^-4 + a^-2", 2, &q) == KS_OK);
  uint32_t l = 0;
  int32_t sign = 0;
  ks_poly1* shifted = nullptr;
  REQUIRE(ks_normalize_shift(q, 3, &l, &sign, &shifted) == KS_OK);
  CHECK(l == 1);
  CHECK(sign == 1);
  Str shifted_text;
  REQUIRE(ks_poly1_format(shifted, &shifted_text.p) == KS_OK);
  CHECK(shifted_text.get() == "a^2 + a^4");
  ks_poly1_free(shifted);
  ks_poly1_free(q);

  int ok = 0;
  Str report;
  REQUIRE(ks_table_verify(table, &ok, &report.p) == KS_OK);
  CHECK(ok == 1);
  CHECK(report.get().find("table ok") != std::string::npos);

  ks_report* cls = nullptr;
  REQUIRE(ks_classify(table, -4, 6, 3, &cls) == KS_OK);
  uint64_t cands = 0, realized = 0;
  REQUIRE(ks_report_counts(cls, &cands, &realized) == KS_OK);
  CHECK(cands == 16);
  CHECK(realized == 16);

  Str text;
  REQUIRE(ks_report_text(cls, &text.p) == KS_OK);
  CHECK(text.get().find("16 candidates") != std::string::npos);

  Str json_text;
  REQUIRE(ks_report_json(cls, &json_text.p) == KS_OK);
  auto j = nlohmann::json::parse(json_text.get());
  CHECK(j["realized"] == 16);
  CHECK(j["window"]["lo"] == -4);
  ks_report_free(cls);

  CHECK(ks_classify(table, -3, 5, 3, &cls) == KS_ERR_USAGE);
  ks_table_free(table);

  CHECK(ks_table_load("/nonexistent.csv", &table) == KS_ERR_USAGE);

  // frees accept null
  ks_poly1_free(nullptr);
  ks_poly2_free(nullptr);
  ks_braid_free(nullptr);
  ks_knot_free(nullptr);
  ks_table_free(nullptr);
  ks_report_free(nullptr);
}
