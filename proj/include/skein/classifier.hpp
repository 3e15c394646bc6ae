#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skein/knot_expr.hpp"
#include "skein/knot_table.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct DegreeWindow {
  int lo = 0;
  int hi = 0; // inclusive; both even, hi > lo

  unsigned span() const noexcept { return static_cast<unsigned>(hi - lo); }
  unsigned slots() const noexcept { return span() / 2 + 1; }
};

// F_2 polynomials supported on the even exponents of [lo, hi] with
// P - 1 divisible by a^-2 + 1 + a^2, in ascending coefficient-bitmask order
// (bit j covers exponent lo + 2j).  A span-10 window passes exactly 16 of
// its 64 masks.
std::vector<Laurent1> enumerate_candidates(DegreeWindow w);

struct CandidateEntry {
  std::uint64_t mask = 0;
  Laurent1 poly;
  std::optional<KnotExpr> expr; // empty when unrealized
  unsigned braid_bound = 0;     // 0 when unrealized
  bool via_shift = false;       // realized through a T(2, 2lm+1) addend
};

struct ClassificationReport {
  DegreeWindow window;
  unsigned max_factors = 3;
  std::vector<CandidateEntry> entries; // enumeration order

  std::size_t realized() const;
  std::size_t unrealized() const { return entries.size() - realized(); }
};

// Match candidates against connected sums of at most max_factors catalogue
// knots and their mirrors, preferring fewer factors, then a smaller braid
// bound, then expression text.  Every match is re-verified by evaluation at
// (p, N) = (2, 1) before it is recorded.
ClassificationReport match_realizations(const std::vector<Laurent1>& candidates,
                                        DegreeWindow window, const KnotTable& table,
                                        unsigned max_factors = 3);

// enumerate_candidates + match_realizations in one step; works on any even
// window, realized or not (probe semantics).
ClassificationReport classify_window(DegreeWindow w, const KnotTable& table,
                                     unsigned max_factors = 3);

struct CorollaryResult {
  unsigned t_bound = 0; // max braid index over both base windows, plus 1
  ClassificationReport window_0_10;
};

// Verify the window-shift argument: every [0, 10] candidate is a^6 times the
// mirror of a [-4, 6] candidate, so unmatched ones are realized by
// mirror(base expr) # T(2, 7).  Requires both base reports fully realized.
CorollaryResult corollary_check(const ClassificationReport& base_46,
                                const ClassificationReport& base_28, const KnotTable& table);

struct TableVerification {
  bool ok = false;
  std::string report;
};

// Re-check every record invariant and classify both span-10 base windows,
// expecting full realization; the report is printable as-is.
TableVerification verify_table(const KnotTable& table);

std::string report_text(const ClassificationReport& r);
std::string report_json(const ClassificationReport& r);

} // namespace skein
