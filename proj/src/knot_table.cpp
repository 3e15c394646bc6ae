#include "skein/knot_table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "skein/poly_text.hpp"

namespace skein {

namespace {

constexpr const char* kHeader = "name,braid_index,poly,source";

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void row_fail(errc code, const std::string& origin, std::size_t line,
                           const std::string& msg) {
  fail(code, origin + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

Laurent1 knot_poly_divisor() {
  Laurent1 d(Ring{2});
  d.add_term(-2, 1);
  d.add_term(0, 1);
  d.add_term(2, 1);
  return d;
}

KnotTable KnotTable::from_csv_text(const std::string& text, const std::string& origin) {
  KnotTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  const Laurent1 divisor = knot_poly_divisor();
  const Laurent1 one = Laurent1::one(Ring{2});

  while (std::getline(in, line)) {
    ++lineno;
    const std::string row = strip(line);
    if (row.empty()) continue;
    if (!saw_header) {
      if (row != kHeader) {
        row_fail(errc::syntax, origin, lineno,
                 "expected header '" + std::string(kHeader) + "', got '" + row + "'");
      }
      saw_header = true;
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= row.size(); ++i) {
      if (i == row.size() || row[i] == ',') {
        fields.push_back(strip(row.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (fields.size() != 4) {
      row_fail(errc::syntax, origin, lineno,
               "expected 4 comma-separated fields, got " + std::to_string(fields.size()));
    }

    KnotRecord rec;
    rec.name = fields[0];
    if (rec.name.empty() || rec.name.find_first_of("#* \t") != std::string::npos) {
      row_fail(errc::syntax, origin, lineno, "bad knot name '" + rec.name + "'");
    }
    if (table.records_.count(rec.name)) {
      row_fail(errc::invariant_violation, origin, lineno, "duplicate knot '" + rec.name + "'");
    }

    const std::string& bi = fields[1];
    if (bi.empty() || bi.find_first_not_of("0123456789") != std::string::npos) {
      row_fail(errc::syntax, origin, lineno, "braid_index '" + bi + "' is not a number");
    }
    rec.braid_index = static_cast<unsigned>(std::stoul(bi));
    if (rec.braid_index < 1) {
      row_fail(errc::invariant_violation, origin, lineno, "braid_index must be >= 1");
    }

    rec.poly = parse_poly1(fields[2], Ring{2});
    rec.source = fields[3];
    if (rec.source.empty()) row_fail(errc::syntax, origin, lineno, "empty source field");

    if (rec.poly.is_zero()) {
      row_fail(errc::invariant_violation, origin, lineno, rec.name + ": polynomial is zero");
    }
    for (const auto& [e, c] : rec.poly.terms()) {
      if (e % 2 != 0) {
        row_fail(errc::invariant_violation, origin, lineno,
                 rec.name + ": odd exponent " + std::to_string(e) + " in a knot polynomial");
      }
    }
    if (!Laurent1::divisible(rec.poly - one, divisor)) {
      row_fail(errc::invariant_violation, origin, lineno,
               rec.name + ": P - 1 is not divisible by a^-2 + 1 + a^2");
    }
    const DegreeStats stats = rec.poly.degree_stats();
    if (stats.span > 2 * rec.braid_index - 2) {
      row_fail(errc::invariant_violation, origin, lineno,
               rec.name + ": degree span " + std::to_string(stats.span) +
                   " exceeds 2*braid_index - 2 = " + std::to_string(2 * rec.braid_index - 2));
    }

    table.order_.push_back(rec.name);
    table.records_.emplace(rec.name, std::move(rec));
  }
  if (!saw_header) fail(errc::syntax, origin + ": empty knot table");
  return table;
}

KnotTable KnotTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::syntax, "cannot open knot table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_csv_text(buf.str(), path);
}

const KnotRecord* KnotTable::find(const std::string& name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& KnotTable::at(const std::string& name) const {
  const KnotRecord* rec = find(name);
  if (!rec) fail(errc::unknown_knot, "knot '" + name + "' is not in the table");
  return *rec;
}

} // namespace skein
