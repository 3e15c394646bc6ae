#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/braid.hpp"
#include "skein/laurent.hpp"

namespace skein {

inline constexpr std::size_t kDefaultClassCap = 100000;

// Cache of finished skein computations, keyed by canonical word.  Entries
// are final; insertion is idempotent and mutex-guarded so concurrent
// computations may share one cache.
class SkeinMemo {
public:
  const Laurent2* find(const std::string& key) const;
  void store(const std::string& key, Laurent2 value);
  std::size_t size() const;

private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, Laurent2> entries_;
};

// All words reachable from w by cyclic rotation, distant-generator swaps
// (|i-j| >= 2) and same-sign triple moves s_i s_{i+1} s_i = s_{i+1} s_i
// s_{i+1}, in breadth-first discovery order (deterministic).  Throws
// class_size_exceeded past the cap.
std::vector<BraidWord> move_class(const BraidWord& w, std::size_t class_cap = kDefaultClassCap);

// Lexicographically least member of move_class(w), ordering letters by
// generator index with positive before negative.
BraidWord canonicalize(const BraidWord& w, std::size_t class_cap = kDefaultClassCap);

// Fixed point of: cancel a free inverse pair anywhere in the move class,
// else unhook a generator occurring exactly once at the top or bottom strand
// (dropping one strand).  Never changes the closure.
BraidWord reduce(const BraidWord& w, std::size_t class_cap = kDefaultClassCap);

// Skein polynomial of the braid closure, by crossing resolution:
// negative letters are traded via P(w-) = a^-2 P(w+) - a^-1 z P(w0), then
// positive repeats via P(u s_i s_i) = a^2 P(u) + a z P(u s_i), searching the
// whole move class for an applicable spot; split words factor through
// delta * P(left) * P(right).  Throws irreducible_word when no member of the
// class admits any step.  Results are memoized on canonical form in `memo`
// (a process-wide cache when null).
Laurent2 homfly_of_closure(const BraidWord& w, SkeinMemo* memo = nullptr,
                           std::size_t class_cap = kDefaultClassCap);

} // namespace skein
