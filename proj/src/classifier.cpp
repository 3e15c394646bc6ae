#include "skein/classifier.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "skein/poly_text.hpp"

namespace skein {

namespace {

void check_window(DegreeWindow w) {
  if (w.lo % 2 != 0 || w.hi % 2 != 0 || w.hi <= w.lo) {
    fail(errc::syntax, "degree window [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) +
                           "] must have even bounds with hi > lo");
  }
  if (w.slots() > 20) {
    fail(errc::syntax, "degree window spans " + std::to_string(w.slots()) +
                           " even exponents; refusing more than 20");
  }
}

struct Match {
  unsigned factors = 0;
  unsigned bound = 0;
  std::string text;
  KnotExpr expr;
};

bool better(const Match& x, const Match& y) {
  return std::tie(x.factors, x.bound, x.text) < std::tie(y.factors, y.bound, y.text);
}

} // namespace

std::size_t ClassificationReport::realized() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const CandidateEntry& e) { return e.expr.has_value(); }));
}

std::vector<Laurent1> enumerate_candidates(DegreeWindow w) {
  check_window(w);
  const Laurent1 divisor = knot_poly_divisor();
  const Laurent1 one = Laurent1::one(Ring{2});
  const unsigned slots = w.slots();

  std::vector<Laurent1> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots); ++mask) {
    Laurent1 p(Ring{2});
    for (unsigned j = 0; j < slots; ++j) {
      if (mask & (1ull << j)) p.add_term(w.lo + 2 * static_cast<int>(j), 1);
    }
    if (Laurent1::divisible(p - one, divisor)) out.push_back(std::move(p));
  }
  return out;
}

ClassificationReport match_realizations(const std::vector<Laurent1>& candidates,
                                        DegreeWindow window, const KnotTable& table,
                                        unsigned max_factors) {
  check_window(window);

  struct Base {
    KnotExpr expr;
    Laurent1 poly;
  };
  std::vector<Base> bases;
  for (const auto& name : table.names()) {
    const KnotRecord& rec = table.at(name);
    bases.push_back({KnotExpr::named(name, false), rec.poly});
    bases.push_back({KnotExpr::named(name, true), rec.poly.mirror()});
  }

  // Products of every factor multiset of size <= max_factors, keeping the
  // preferred expression per polynomial.
  std::map<std::string, Match> found;
  const Laurent1 one = Laurent1::one(Ring{2});
  found.emplace(format_poly(one), Match{0, 1, "O", KnotExpr::unknot()});

  std::vector<std::size_t> pick;
  auto consider = [&](const Laurent1& poly, const KnotExpr& expr) {
    Match m;
    m.factors = static_cast<unsigned>(expr.factors().size());
    m.bound = expr.braid_index_bound(&table);
    m.text = expr.to_text();
    m.expr = expr;
    const std::string key = format_poly(poly);
    auto [it, fresh] = found.try_emplace(key, m);
    if (!fresh && better(m, it->second)) it->second = m;
  };
  auto descend = [&](auto&& self, std::size_t from, const Laurent1& poly,
                     const KnotExpr& expr) -> void {
    if (pick.size() == max_factors) return;
    for (std::size_t i = from; i < bases.size(); ++i) {
      pick.push_back(i);
      Laurent1 next = poly * bases[i].poly;
      KnotExpr next_expr = connect(expr, bases[i].expr);
      consider(next, next_expr);
      self(self, i, next, next_expr);
      pick.pop_back();
    }
  };
  descend(descend, 0, one, KnotExpr::unknot());

  ClassificationReport report;
  report.window = window;
  report.max_factors = max_factors;
  for (const auto& cand : candidates) {
    CandidateEntry entry;
    entry.poly = cand;
    for (const auto& [e, c] : cand.terms()) {
      entry.mask |= 1ull << static_cast<unsigned>((e - window.lo) / 2);
    }
    auto it = found.find(format_poly(cand));
    if (it != found.end()) {
      // The search multiplies raw table rows; trust nothing and re-evaluate.
      const Laurent1 check = it->second.expr.eval_mod(2, 1, &table);
      if (check != cand) {
        fail(errc::assertion_failed, "realization " + it->second.text +
                                         " does not evaluate back to its candidate");
      }
      entry.expr = it->second.expr;
      entry.braid_bound = it->second.bound;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

ClassificationReport classify_window(DegreeWindow w, const KnotTable& table,
                                     unsigned max_factors) {
  return match_realizations(enumerate_candidates(w), w, table, max_factors);
}

CorollaryResult corollary_check(const ClassificationReport& base_46,
                                const ClassificationReport& base_28, const KnotTable& table) {
  if (base_46.window.lo != -4 || base_46.window.hi != 6 || base_28.window.lo != -2 ||
      base_28.window.hi != 8) {
    fail(errc::assertion_failed, "corollary_check needs the [-4,6] and [-2,8] base reports");
  }
  for (const auto* base : {&base_46, &base_28}) {
    for (const auto& e : base->entries) {
      if (!e.expr) {
        fail(errc::unrealized_candidate,
             "base window candidate " + format_poly(e.poly) + " has no realization");
      }
    }
  }

  unsigned max_bound = 0;
  for (const auto* base : {&base_46, &base_28}) {
    for (const auto& e : base->entries) max_bound = std::max(max_bound, e.braid_bound);
  }
  const unsigned t_bound = max_bound + 1;

  CorollaryResult result;
  result.t_bound = t_bound;
  result.window_0_10 = classify_window(DegreeWindow{0, 10}, table);

  // [0,10] candidates are exactly a^6 * mirror of the [-4,6] candidates.
  std::map<std::string, const CandidateEntry*> base_by_poly;
  for (const auto& e : base_46.entries) base_by_poly.emplace(format_poly(e.poly), &e);
  if (base_by_poly.size() != result.window_0_10.entries.size()) {
    fail(errc::assertion_failed, "window chain mismatch: candidate counts differ");
  }

  for (auto& entry : result.window_0_10.entries) {
    const Laurent1 chained = entry.poly.mirror().shifted(6);
    auto it = base_by_poly.find(format_poly(chained));
    if (it == base_by_poly.end()) {
      fail(errc::assertion_failed, "candidate " + format_poly(entry.poly) +
                                       " does not chain into the [-4,6] window");
    }
    if (!entry.expr) {
      const KnotExpr expr = connect(it->second->expr->mirror(), KnotExpr::torus(7));
      if (expr.eval_mod(2, 1, &table) != entry.poly) {
        fail(errc::assertion_failed,
             "shifted realization " + expr.to_text() + " does not evaluate back");
      }
      entry.expr = expr;
      entry.braid_bound = expr.braid_index_bound(&table);
      entry.via_shift = true;
    }
    if (entry.braid_bound > t_bound) {
      fail(errc::assertion_failed, "realization " + entry.expr->to_text() +
                                       " needs more than " + std::to_string(t_bound) + " strands");
    }
  }
  return result;
}

TableVerification verify_table(const KnotTable& table) {
  std::ostringstream out;
  bool ok = true;
  const Laurent1 divisor = knot_poly_divisor();
  const Laurent1 one = Laurent1::one(Ring{2});

  for (const auto& name : table.names()) {
    const KnotRecord& rec = table.at(name);
    std::string complaint;
    for (const auto& [e, c] : rec.poly.terms()) {
      if (e % 2 != 0) complaint = "odd exponent " + std::to_string(e);
    }
    if (complaint.empty() && !Laurent1::divisible(rec.poly - one, divisor)) {
      complaint = "P - 1 not divisible by a^-2 + 1 + a^2";
    }
    const DegreeStats stats = rec.poly.degree_stats();
    if (complaint.empty() && stats.span > 2 * rec.braid_index - 2) {
      complaint = "degree span exceeds 2b - 2";
    }
    if (complaint.empty()) {
      out << "ok   " << rec.name << " (b=" << rec.braid_index << ", span=" << stats.span << ")\n";
    } else {
      out << "FAIL " << rec.name << ": " << complaint << "\n";
      ok = false;
    }
  }

  for (const DegreeWindow w : {DegreeWindow{-4, 6}, DegreeWindow{-2, 8}}) {
    const ClassificationReport r = classify_window(w, table);
    out << "window [" << w.lo << ", " << w.hi << "]: " << r.entries.size() << " candidates, "
        << r.realized() << " realized\n";
    if (r.entries.size() != 16 || r.realized() != r.entries.size()) ok = false;
  }
  out << (ok ? "table ok\n" : "table INVALID\n");
  return TableVerification{ok, out.str()};
}

std::string report_text(const ClassificationReport& r) {
  std::size_t poly_w = 10, expr_w = 12; // headers, "(unrealized)"
  for (const auto& e : r.entries) {
    poly_w = std::max(poly_w, format_poly(e.poly).size());
    if (e.expr) expr_w = std::max(expr_w, e.expr->to_text().size());
  }

  std::ostringstream out;
  out << "window [" << r.window.lo << ", " << r.window.hi << "]: " << r.entries.size()
      << " candidates, " << r.realized() << " realized, " << r.unrealized()
      << " unrealized (max " << r.max_factors << " factors)\n";
  out << "mask  ";
  out << "polynomial";
  out << std::string(poly_w - 10, ' ') << "  realization";
  out << std::string(expr_w - 11, ' ') << "  braid<=\n";
  for (const auto& e : r.entries) {
    std::string mask = std::to_string(e.mask);
    out << mask << std::string(mask.size() < 6 ? 6 - mask.size() : 1, ' ');
    const std::string poly = format_poly(e.poly);
    out << poly << std::string(poly_w - poly.size() + 2, ' ');
    const std::string expr = e.expr ? e.expr->to_text() : "(unrealized)";
    out << expr << std::string(expr_w - expr.size() + 2, ' ');
    if (e.expr) {
      out << e.braid_bound;
    } else {
      out << "-";
    }
    out << "\n";
  }
  return out.str();
}

std::string report_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["window"] = {{"lo", r.window.lo}, {"hi", r.window.hi}};
  j["max_factors"] = r.max_factors;
  j["candidates"] = r.entries.size();
  j["realized"] = r.realized();
  j["unrealized"] = r.unrealized();
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json row;
    row["mask"] = e.mask;
    row["poly"] = format_poly(e.poly);
    if (e.expr) {
      row["realization"] = e.expr->to_text();
      row["braid_index_bound"] = e.braid_bound;
      row["via_shift"] = e.via_shift;
    } else {
      row["realization"] = nullptr;
      row["braid_index_bound"] = nullptr;
      row["via_shift"] = false;
    }
    j["entries"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

} // namespace skein
