#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// One catalogued knot: its z = 1 skein polynomial over F_2 plus the braid
// index from public knot tables.
struct KnotRecord {
  std::string name;
  unsigned braid_index = 1;
  Laurent1 poly; // over F_2, even exponents only
  std::string source;
};

// CSV-backed catalogue ("name,braid_index,poly,source").  Loading enforces
// the record invariants: even exponents, P - 1 divisible by a^-2 + 1 + a^2
// over F_2, and deg-span(P) <= 2 * braid_index - 2.
class KnotTable {
public:
  static KnotTable load(const std::string& path);
  static KnotTable from_csv_text(const std::string& text, const std::string& origin = "<memory>");

  const KnotRecord* find(const std::string& name) const;
  // Throws unknown_knot.
  const KnotRecord& at(const std::string& name) const;

  std::size_t size() const noexcept { return order_.size(); }
  // Names in file order.
  const std::vector<std::string>& names() const noexcept { return order_; }

private:
  std::map<std::string, KnotRecord> records_;
  std::vector<std::string> order_;
};

// a^-2 + 1 + a^2 over F_2, the divisor every knot polynomial must satisfy
// through P - 1.
Laurent1 knot_poly_divisor();

} // namespace skein
