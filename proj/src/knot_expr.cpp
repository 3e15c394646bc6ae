#include "skein/knot_expr.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "skein/torus.hpp"

namespace skein {

namespace {

// Display order: catalogue knots first in natural (crossing-number) name
// order, then torus factors by |n| with the positive twin first.
std::tuple<int, long long, std::string, int> factor_key(const KnotFactor& f) {
  if (const auto* named = std::get_if<NamedFactor>(&f)) {
    std::size_t i = 0;
    long long num = 0;
    while (i < named->id.size() && std::isdigit(static_cast<unsigned char>(named->id[i]))) {
      num = num * 10 + (named->id[i] - '0');
      ++i;
    }
    return {0, num, named->id.substr(i), named->mirrored ? 1 : 0};
  }
  const auto& t = std::get<TorusFactor>(f);
  return {1, t.n < 0 ? -t.n : t.n, "", t.n < 0 ? 1 : 0};
}

std::string factor_text(const KnotFactor& f) {
  if (const auto* named = std::get_if<NamedFactor>(&f)) {
    return named->mirrored ? named->id + "*" : named->id;
  }
  return "T(2," + std::to_string(std::get<TorusFactor>(f).n) + ")";
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

KnotFactor parse_factor(const std::string& tok) {
  if (tok.rfind("T(", 0) == 0) {
    if (tok.size() < 6 || tok[2] != '2' || tok[3] != ',' || tok.back() != ')') {
      fail(errc::syntax, "torus factor '" + tok + "' does not match T(2,<odd n>)");
    }
    const std::string num = tok.substr(4, tok.size() - 5);
    std::size_t i = num[0] == '-' ? 1 : 0;
    if (i == num.size() || num.find_first_not_of("0123456789", i) != std::string::npos) {
      fail(errc::syntax, "torus factor '" + tok + "' has a malformed parameter");
    }
    long long n = 0;
    for (; i < num.size(); ++i) {
      n = n * 10 + (num[i] - '0');
      if (n > 1000000) fail(errc::syntax, "torus parameter out of range in '" + tok + "'");
    }
    if (num[0] == '-') n = -n;
    if (n % 2 == 0) fail(errc::syntax, "torus factor '" + tok + "' needs an odd parameter");
    return TorusFactor{n};
  }
  std::string id = tok;
  bool mirrored = false;
  if (!id.empty() && id.back() == '*') {
    mirrored = true;
    id.pop_back();
  }
  if (!valid_id(id)) fail(errc::syntax, "bad knot name '" + tok + "'");
  return NamedFactor{std::move(id), mirrored};
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

} // namespace

void KnotExpr::push(KnotFactor f) { factors_.push_back(std::move(f)); }

void KnotExpr::sort_factors() {
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const KnotFactor& x, const KnotFactor& y) {
                     return factor_key(x) < factor_key(y);
                   });
}

KnotExpr KnotExpr::torus(long long n) {
  if (n % 2 == 0) {
    fail(errc::syntax, "T(2," + std::to_string(n) + ") is a link, not a knot: n must be odd");
  }
  KnotExpr e;
  e.push(TorusFactor{n});
  return e;
}

KnotExpr KnotExpr::named(std::string id, bool mirrored) {
  if (!valid_id(id)) fail(errc::syntax, "bad knot name '" + id + "'");
  KnotExpr e;
  e.push(NamedFactor{std::move(id), mirrored});
  return e;
}

KnotExpr KnotExpr::parse(std::string_view text) {
  KnotExpr e;
  std::string buf(text);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= buf.size(); ++i) {
    if (i != buf.size() && buf[i] != '#') continue;
    const std::string tok = strip(buf.substr(start, i - start));
    start = i + 1;
    if (tok == "O") continue;
    if (tok.empty()) fail(errc::syntax, "empty factor in knot expression '" + buf + "'");
    e.push(parse_factor(tok));
  }
  e.sort_factors();
  return e;
}

std::string KnotExpr::to_text() const {
  if (factors_.empty()) return "O";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '#';
    out += factor_text(f);
  }
  return out;
}

KnotExpr KnotExpr::mirror() const {
  KnotExpr e;
  for (const auto& f : factors_) {
    if (const auto* named = std::get_if<NamedFactor>(&f)) {
      e.push(NamedFactor{named->id, !named->mirrored});
    } else {
      e.push(TorusFactor{-std::get<TorusFactor>(f).n});
    }
  }
  e.sort_factors();
  return e;
}

KnotExpr connect(const KnotExpr& x, const KnotExpr& y) {
  KnotExpr e;
  e.factors_ = x.factors_;
  e.factors_.insert(e.factors_.end(), y.factors_.begin(), y.factors_.end());
  e.sort_factors();
  return e;
}

Laurent1 KnotExpr::eval_mod(std::uint32_t p, std::uint64_t n, const KnotTable* table) const {
  require_prime(p);
  const Ring ring{p};
  Laurent1 result = Laurent1::one(ring);
  for (const auto& f : factors_) {
    Laurent1 factor_poly(ring);
    if (const auto* t = std::get_if<TorusFactor>(&f)) {
      if (n % p == 0) {
        // z = 0: the recursion state is undefined, but the odd-index torus
        // polynomials close at P(a, 0) = k a^{2k-2} - (k-1) a^{2k}.
        const long long mag = t->n < 0 ? -t->n : t->n;
        const unsigned k = static_cast<unsigned>((mag + 1) / 2);
        factor_poly = closed_form_z0(k).reduce_mod(p);
        if (t->n < 0) factor_poly = factor_poly.mirror();
      } else {
        factor_poly = torus_poly(t->n).eval_z(static_cast<long long>(n % p), p);
      }
    } else {
      const auto& named = std::get<NamedFactor>(f);
      if (!table) {
        fail(errc::unknown_knot, "expression names '" + named.id + "' but no table was supplied");
      }
      const KnotRecord& rec = table->at(named.id);
      if (p != 2 || n % 2 != 1) {
        fail(errc::unsupported_eval, "table knot '" + named.id +
                                         "' only carries z = 1 data mod 2; cannot evaluate at (" +
                                         std::to_string(p) + ", " + std::to_string(n) + ")");
      }
      factor_poly = named.mirrored ? rec.poly.mirror() : rec.poly;
    }
    result = result * factor_poly;
  }
  return result;
}

BraidWord KnotExpr::braid_word() const {
  std::vector<BraidLetter> letters;
  unsigned gen = 1;
  for (const auto& f : factors_) {
    const auto* t = std::get_if<TorusFactor>(&f);
    if (!t) {
      fail(errc::named_factor_present, "braid words exist only for torus-factor expressions; '" +
                                           factor_text(f) + "' is a catalogue knot");
    }
    const int sign = t->n < 0 ? -1 : 1;
    for (long long i = 0, reps = t->n < 0 ? -t->n : t->n; i < reps; ++i) {
      letters.push_back(BraidLetter{gen, sign});
    }
    ++gen;
  }
  return BraidWord(gen, std::move(letters));
}

unsigned KnotExpr::braid_index_bound(const KnotTable* table) const {
  if (factors_.empty()) return 1;
  unsigned sum = 0;
  for (const auto& f : factors_) {
    if (const auto* t = std::get_if<TorusFactor>(&f)) {
      sum += (t->n == 1 || t->n == -1) ? 1 : 2;
    } else {
      const auto& named = std::get<NamedFactor>(f);
      if (!table) {
        fail(errc::unknown_knot, "expression names '" + named.id + "' but no table was supplied");
      }
      sum += table->at(named.id).braid_index;
    }
  }
  return sum - static_cast<unsigned>(factors_.size() - 1);
}

KnotExpr trivial_knot(std::uint32_t p, std::uint64_t n) {
  const std::uint64_t m = trivializing_exponent(p, n);
  const long long arg = static_cast<long long>(m) + 1;
  const KnotExpr e = connect(KnotExpr::torus(arg), KnotExpr::torus(-arg));
  if (!e.eval_mod(p, n).is_one()) {
    fail(errc::assertion_failed, "trivializing check failed for " + e.to_text() + " at (p, N) = (" +
                                     std::to_string(p) + ", " + std::to_string(n) + ")");
  }
  return e;
}

ShiftNormalization normalize_shift(const Laurent1& q, unsigned m) {
  if (m < 1) fail(errc::assertion_failed, "normalize_shift needs a period m >= 1");
  const DegreeStats stats = q.degree_stats();
  const long long step = 2ll * m;
  long long k = stats.mindeg / step;
  if (stats.mindeg % step != 0 && stats.mindeg < 0) --k; // floor division
  ShiftNormalization out;
  out.l = static_cast<unsigned>(k < 0 ? -k : k);
  out.sign = k > 0 ? -1 : 1;
  out.shifted = q.shifted(static_cast<int>(-k * step));
  return out;
}

} // namespace skein
