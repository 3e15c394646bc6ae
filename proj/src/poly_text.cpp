#include "skein/poly_text.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace skein {

namespace {

std::string mono_text(int aexp, int zexp) {
  std::string s;
  if (aexp != 0) s += "a^" + std::to_string(aexp);
  if (zexp != 0) {
    if (!s.empty()) s += "*";
    s += "z^" + std::to_string(zexp);
  }
  return s;
}

void append_term(std::string& out, bool& first, const Int& c, const std::string& mono) {
  Int mag = c;
  const bool neg = mag < 0;
  if (neg) mag = -mag;
  if (first) {
    if (neg) out += "-";
    first = false;
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += to_string(mag) + "*" + mono;
  }
}

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void die(const std::string& msg) const {
    fail(errc::syntax, "polynomial text: " + msg + " at offset " + std::to_string(i));
  }
};

int parse_exponent(Cursor& cur) {
  bool neg = false;
  if (!cur.eof() && cur.peek() == '-') {
    neg = true;
    ++cur.i;
  }
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    cur.die("expected exponent digits");
  }
  long v = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.peek() - '0');
    if (v > 1000000) cur.die("exponent out of range");
    ++cur.i;
  }
  return static_cast<int>(neg ? -v : v);
}

struct TermText {
  Int coeff = 1;
  int aexp = 0;
  int zexp = 0;
};

TermText parse_term(Cursor& cur, bool allow_z) {
  TermText t;
  bool has_coeff = false;
  if (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    std::string digits;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      digits += cur.peek();
      ++cur.i;
    }
    t.coeff = Int(digits);
    has_coeff = true;
    cur.skip_ws();
    if (cur.eof() || cur.peek() != '*') return t; // bare constant
    ++cur.i;
    cur.skip_ws();
  }

  bool seen_a = false, seen_z = false;
  for (;;) {
    if (cur.eof()) cur.die("expected a monomial");
    char v = cur.peek();
    if (v != 'a' && v != 'z') cur.die("expected variable 'a' or 'z'");
    if (v == 'z' && !allow_z) cur.die("variable 'z' not allowed here");
    ++cur.i;
    if (cur.eof() || cur.peek() != '^') cur.die("expected '^' after variable");
    ++cur.i;
    int e = parse_exponent(cur);
    if (v == 'a') {
      if (seen_a) cur.die("variable 'a' repeated in term");
      seen_a = true;
      t.aexp = e;
    } else {
      if (seen_z) cur.die("variable 'z' repeated in term");
      seen_z = true;
      t.zexp = e;
    }
    std::size_t mark = cur.i;
    cur.skip_ws();
    if (!cur.eof() && cur.peek() == '*') {
      ++cur.i;
      cur.skip_ws();
      continue;
    }
    cur.i = mark;
    break;
  }
  if (!has_coeff && !seen_a && !seen_z) cur.die("empty term");
  return t;
}

std::vector<std::pair<TermText, int>> parse_terms(std::string_view text, bool allow_z) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.eof()) cur.die("empty polynomial text");

  std::vector<std::pair<TermText, int>> terms;
  if (cur.peek() == '0') {
    std::size_t mark = cur.i;
    ++cur.i;
    cur.skip_ws();
    if (cur.eof()) return terms; // the zero polynomial
    cur.i = mark;
  }

  int sign = 1;
  if (cur.peek() == '-') {
    sign = -1;
    ++cur.i;
    cur.skip_ws();
  }
  for (;;) {
    TermText t = parse_term(cur, allow_z);
    if (t.coeff == 0) cur.die("zero coefficient");
    terms.emplace_back(t, sign);
    cur.skip_ws();
    if (cur.eof()) break;
    char op = cur.peek();
    if (op != '+' && op != '-') cur.die("expected '+' or '-' between terms");
    sign = op == '-' ? -1 : 1;
    ++cur.i;
    cur.skip_ws();
  }
  return terms;
}

void check_order(const std::pair<int, int>& prev, const std::pair<int, int>& next) {
  if (next == prev) {
    fail(errc::syntax, "polynomial text: exponent (" + std::to_string(next.first) + ", " +
                           std::to_string(next.second) + ") appears twice");
  }
  if (next < prev) {
    fail(errc::non_ascending, "polynomial text: terms must be in strictly ascending exponent order");
  }
}

} // namespace

std::string format_poly(const Laurent1& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) append_term(out, first, c, mono_text(e, 0));
  return out;
}

std::string format_poly(const Laurent2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) append_term(out, first, c, mono_text(e.first, e.second));
  return out;
}

Laurent1 parse_poly1(std::string_view text, Ring ring) {
  auto terms = parse_terms(text, /*allow_z=*/false);
  Laurent1 out(ring);
  bool have_prev = false;
  std::pair<int, int> prev{};
  for (const auto& [t, sign] : terms) {
    std::pair<int, int> key{t.aexp, 0};
    if (have_prev) check_order(prev, key);
    prev = key;
    have_prev = true;
    out.add_term(t.aexp, sign < 0 ? Int(-t.coeff) : t.coeff);
  }
  return out;
}

Laurent2 parse_poly2(std::string_view text, Ring ring) {
  auto terms = parse_terms(text, /*allow_z=*/true);
  Laurent2 out(ring);
  bool have_prev = false;
  std::pair<int, int> prev{};
  for (const auto& [t, sign] : terms) {
    std::pair<int, int> key{t.aexp, t.zexp};
    if (have_prev) check_order(prev, key);
    prev = key;
    have_prev = true;
    out.add_term(t.aexp, t.zexp, sign < 0 ? Int(-t.coeff) : t.coeff);
  }
  return out;
}

} // namespace skein
