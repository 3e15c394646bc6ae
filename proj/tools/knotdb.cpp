// knotdb: command-line front end for the knotskein library.  Exit codes
// mirror ks_status: 0 ok, 1 usage, 2 domain, 3 oracle incompleteness,
// 4 invariant violation.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "knotskein.h"

namespace {

int report_failure(ks_status st) {
  std::fprintf(stderr, "error: %s\n", ks_last_error());
  return static_cast<int>(st);
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { ks_string_free(p); }
};

int run_trivial_knot(std::uint32_t prime, std::uint64_t eval) {
  ks_knot* knot = nullptr;
  if (ks_status st = ks_trivial_knot(prime, eval, &knot)) return report_failure(st);

  std::uint64_t m = 0;
  ks_trivializing_exponent(prime, eval, &m);

  ks_braid* braid = nullptr;
  ks_knot_braid_word(knot, &braid);
  std::uint32_t strands = 0;
  ks_braid_strands(braid, &strands);

  OwnedString text, word;
  ks_knot_format(knot, &text.p);
  ks_braid_format(braid, &word.p);

  ks_poly1* value = nullptr;
  if (ks_status st = ks_knot_eval_mod(knot, prime, eval, nullptr, &value)) {
    ks_braid_free(braid);
    ks_knot_free(knot);
    return report_failure(st);
  }
  int is_one = 0;
  ks_poly1_is_one(value, &is_one);

  std::printf("knot: %s\n", text.p);
  std::printf("braid: %s\n", word.p);
  std::printf("strands: %" PRIu32 "\n", strands);
  std::printf("M: %" PRIu64 "\n", m);
  std::printf("check: P(a, %" PRIu64 ") mod %" PRIu32 " = 1: %s\n", eval, prime,
              is_one ? "ok" : "FAILED");

  ks_poly1_free(value);
  ks_braid_free(braid);
  ks_knot_free(knot);
  if (!is_one) {
    std::fprintf(stderr, "error: trivializing verification failed\n");
    return static_cast<int>(KS_ERR_INVARIANT);
  }
  return 0;
}

int run_period(std::uint32_t prime, std::uint64_t eval) {
  std::uint64_t m = 0;
  ks_status st = ks_torus_period(prime, eval, &m);
  if (st == KS_ERR_DOMAIN) {
    std::fprintf(stderr, "error: %s (trivial-knot handles this case through the z = 0 form)\n",
                 ks_last_error());
    return static_cast<int>(st);
  }
  if (st) return report_failure(st);
  std::printf("%" PRIu64 "\n", m);
  return 0;
}

int run_torus(std::int64_t n, bool has_eval, std::int64_t eval, std::uint32_t mod) {
  ks_poly2* poly = nullptr;
  if (ks_status st = ks_torus_poly(n, &poly)) return report_failure(st);

  OwnedString text;
  ks_status st = KS_OK;
  if (has_eval) {
    ks_poly1* value = nullptr;
    st = ks_poly2_eval_z(poly, eval, mod, &value);
    if (!st) {
      st = ks_poly1_format(value, &text.p);
      ks_poly1_free(value);
    }
  } else {
    st = ks_poly2_format(poly, &text.p);
  }
  ks_poly2_free(poly);
  if (st) return report_failure(st);
  std::printf("%s\n", text.p);
  return 0;
}

int run_homfly(std::uint32_t strands, const std::string& word, std::uint64_t class_cap) {
  ks_braid* braid = nullptr;
  if (ks_status st = ks_braid_parse(strands, word.c_str(), &braid)) return report_failure(st);
  ks_poly2* poly = nullptr;
  ks_status st = ks_homfly(braid, class_cap, &poly);
  ks_braid_free(braid);
  if (st) return report_failure(st);
  OwnedString text;
  st = ks_poly2_format(poly, &text.p);
  ks_poly2_free(poly);
  if (st) return report_failure(st);
  std::printf("%s\n", text.p);
  return 0;
}

bool parse_window(const std::string& text, std::int32_t& lo, std::int32_t& hi) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, sep), &used);
    if (used != sep) return false;
    const std::string rest = text.substr(sep + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size() && !rest.empty();
  } catch (const std::exception&) {
    return false;
  }
}

int run_classify(const std::string& data, const std::string& window, std::uint32_t max_factors,
                 bool json) {
  std::int32_t lo = 0, hi = 0;
  if (!parse_window(window, lo, hi)) {
    std::fprintf(stderr, "error: window '%s' does not match <lo>..<hi>\n", window.c_str());
    return static_cast<int>(KS_ERR_USAGE);
  }
  ks_table* table = nullptr;
  if (ks_status st = ks_table_load(data.c_str(), &table)) return report_failure(st);
  ks_report* report = nullptr;
  ks_status st = ks_classify(table, lo, hi, max_factors, &report);
  ks_table_free(table);
  if (st) return report_failure(st);
  OwnedString text;
  st = json ? ks_report_json(report, &text.p) : ks_report_text(report, &text.p);
  ks_report_free(report);
  if (st) return report_failure(st);
  std::printf("%s", text.p);
  return 0;
}

int run_verify_table(const std::string& data) {
  ks_table* table = nullptr;
  if (ks_status st = ks_table_load(data.c_str(), &table)) return report_failure(st);
  int ok = 0;
  OwnedString report;
  ks_status st = ks_table_verify(table, &ok, &report.p);
  ks_table_free(table);
  if (st) return report_failure(st);
  std::printf("%s", report.p);
  if (!ok) {
    std::fprintf(stderr, "error: table verification failed\n");
    return static_cast<int>(KS_ERR_INVARIANT);
  }
  return 0;
}

int run_fib_check(std::uint32_t max_prime) {
  std::printf("p\tn=p-(p|5)\tF_n mod p\n");
  for (std::uint32_t p = 2; p <= max_prime; ++p) {
    int prime = 0;
    ks_is_prime(p, &prime);
    if (!prime) continue;
    std::uint64_t index = 0;
    std::uint32_t residue = 0;
    if (ks_status st = ks_fib_check(p, &index, &residue)) return report_failure(st);
    std::printf("%" PRIu32 "\t%" PRIu64 "\t%" PRIu32 "\n", p, index, residue);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein polynomial toolkit: torus links, braid closures, mod-p classification"};
  app.require_subcommand(1);

  std::uint32_t prime = 2;
  std::uint64_t eval = 1;
  std::int64_t torus_n = 1;
  std::int64_t torus_eval = 0;
  std::uint32_t torus_mod = 0;
  std::uint32_t strands = 2;
  std::string word;
  std::uint64_t class_cap = 0;
  std::string data;
  std::string window;
  std::uint32_t max_factors = 3;
  bool json = false;
  std::uint32_t max_prime = 100;

  CLI::App* trivial = app.add_subcommand(
      "trivial-knot", "connected sum of twisted torus knots with P(a, N) = 1 mod p");
  trivial->add_option("--prime", prime, "modulus p (prime)")->required();
  trivial->add_option("--eval", eval, "evaluation N of z")->required();

  CLI::App* period = app.add_subcommand("period", "minimal period of the mod-p coefficient state");
  period->add_option("--prime", prime, "modulus p (prime)")->required();
  period->add_option("--eval", eval, "evaluation N of z, nonzero mod p")->required();

  CLI::App* torus = app.add_subcommand("torus", "skein polynomial of the (2, n) torus link");
  torus->add_option("--n", torus_n, "torus parameter n")->required();
  CLI::Option* eval_opt = torus->add_option("--eval", torus_eval, "substitute z = <int>");
  torus->add_option("--mod", torus_mod, "reduce mod a prime (needs --eval)")->needs(eval_opt);

  CLI::App* homfly = app.add_subcommand("homfly", "skein polynomial of a braid closure");
  homfly->add_option("--strands", strands, "strand count")->required();
  homfly->add_option("--word", word, "braid word, e.g. \"s1^3 s2^-1\"")->required();
  homfly->add_option("--class-cap", class_cap, "braid move class cap (default 100000)");

  CLI::App* classify = app.add_subcommand("classify", "realize window candidates as connected sums");
  classify->add_option("--window", window, "even degree window <lo>..<hi>")->required();
  classify->add_option("--data", data, "knot table CSV")->required()->check(CLI::ExistingFile);
  classify->add_option("--max-factors", max_factors, "connected-sum factor limit (default 3)");
  classify->add_flag("--json", json, "emit JSON instead of text");

  CLI::App* verify = app.add_subcommand("verify-table", "re-check every dataset invariant");
  verify->add_option("--data", data, "knot table CSV")->required()->check(CLI::ExistingFile);

  CLI::App* fib = app.add_subcommand("fib-check", "Fibonacci divisibility rows for primes");
  fib->add_option("--max-prime", max_prime, "largest prime to include")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(KS_ERR_USAGE);
  }

  if (trivial->parsed()) return run_trivial_knot(prime, eval);
  if (period->parsed()) return run_period(prime, eval);
  if (torus->parsed()) return run_torus(torus_n, eval_opt->count() > 0, torus_eval, torus_mod);
  if (homfly->parsed()) return run_homfly(strands, word, class_cap);
  if (classify->parsed()) return run_classify(data, window, max_factors, json);
  if (verify->parsed()) return run_verify_table(data);
  if (fib->parsed()) return run_fib_check(max_prime);
  return static_cast<int>(KS_ERR_USAGE);
}
