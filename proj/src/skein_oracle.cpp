#include "skein/skein_oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace skein {

namespace {

// One letter per byte: 2*index + (1 if negative).  Byte order makes
// lexicographic string comparison match the (index, sign) letter order with
// positive before negative, so the canonical form is the minimal string.
char encode(const BraidLetter& l) {
  return static_cast<char>(2 * l.index + (l.sign < 0 ? 1 : 0));
}

unsigned idx_of(char c) { return static_cast<unsigned char>(c) >> 1; }
bool neg_of(char c) { return (c & 1) != 0; }

struct OWord {
  unsigned strands = 1;
  std::string code;
};

OWord pack(const BraidWord& w) {
  OWord o{w.strands(), {}};
  o.code.reserve(w.size());
  for (const auto& l : w.letters()) o.code += encode(l);
  return o;
}

BraidWord unpack(const OWord& o) {
  std::vector<BraidLetter> letters;
  letters.reserve(o.code.size());
  for (char c : o.code) letters.push_back(BraidLetter{idx_of(c), neg_of(c) ? -1 : 1});
  return BraidWord(o.strands, std::move(letters));
}

// Conjugation by the leading letter, distant-generator swaps, and same-sign
// triple moves; all preserve both word length and closure type.
void push_neighbors(const std::string& u, std::vector<std::string>& out) {
  out.clear();
  const std::size_t n = u.size();
  if (n >= 2) out.push_back(u.substr(1) + u[0]);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const unsigned a = idx_of(u[j]), b = idx_of(u[j + 1]);
    if ((a > b ? a - b : b - a) >= 2) {
      std::string v = u;
      std::swap(v[j], v[j + 1]);
      out.push_back(std::move(v));
    }
  }
  for (std::size_t j = 0; j + 2 < n; ++j) {
    const char c0 = u[j], c1 = u[j + 1], c2 = u[j + 2];
    if (c0 != c2 || neg_of(c0) != neg_of(c1)) continue;
    const unsigned a = idx_of(c0), b = idx_of(c1);
    if ((a > b ? a - b : b - a) != 1) continue;
    std::string v = u;
    v[j] = c1;
    v[j + 1] = c0;
    v[j + 2] = c1;
    out.push_back(std::move(v));
  }
}

// Breadth-first closure of the move set, in deterministic discovery order.
std::vector<std::string> explore(const std::string& start, std::size_t cap) {
  std::vector<std::string> order{start};
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> buf;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::string u = order[head];
    push_neighbors(u, buf);
    for (auto& v : buf) {
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          fail(errc::class_size_exceeded,
               "braid move class exceeds the cap of " + std::to_string(cap) + " words");
        }
        order.push_back(std::move(v));
      }
    }
  }
  return order;
}

OWord reduce_impl(OWord w, std::size_t cap) {
  for (;;) {
    if (w.code.empty()) return w;
    const auto cls = explore(w.code, cap);
    bool changed = false;

    for (const auto& u : cls) {
      for (std::size_t j = 0; j + 1 < u.size() && !changed; ++j) {
        if (idx_of(u[j]) == idx_of(u[j + 1]) && neg_of(u[j]) != neg_of(u[j + 1])) {
          w.code = u.substr(0, j) + u.substr(j + 2);
          changed = true;
        }
      }
      if (changed) break;
    }
    if (changed) continue;

    if (w.strands >= 2) {
      for (const auto& u : cls) {
        const unsigned top = w.strands - 1;
        std::size_t top_count = 0, top_at = 0, bot_count = 0, bot_at = 0;
        for (std::size_t j = 0; j < u.size(); ++j) {
          if (idx_of(u[j]) == top) {
            ++top_count;
            top_at = j;
          }
          if (idx_of(u[j]) == 1) {
            ++bot_count;
            bot_at = j;
          }
        }
        if (top_count == 1) {
          w.code = u.substr(0, top_at) + u.substr(top_at + 1);
          w.strands -= 1;
          changed = true;
          break;
        }
        if (bot_count == 1) {
          std::string rest = u.substr(0, bot_at) + u.substr(bot_at + 1);
          for (char& c : rest) c = static_cast<char>(c - 2);
          w.code = std::move(rest);
          w.strands -= 1;
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;
    return w;
  }
}

std::string memo_key(const OWord& w, const std::string& canonical) {
  std::string key(1, static_cast<char>(w.strands));
  key += canonical;
  return key;
}

Laurent2 compute(OWord w, SkeinMemo& memo, std::size_t cap) {
  w = reduce_impl(std::move(w), cap);
  if (w.code.empty()) return Laurent2::delta_power(w.strands - 1);

  const auto cls = explore(w.code, cap);
  const std::string& canonical = *std::min_element(cls.begin(), cls.end());
  const std::string key = memo_key(w, canonical);
  if (const Laurent2* hit = memo.find(key)) return *hit;

  std::vector<bool> used(w.strands, false);
  for (char c : w.code) used[idx_of(c)] = true;
  unsigned split = 0;
  for (unsigned g = 1; g < w.strands; ++g) {
    if (!used[g]) {
      split = g;
      break;
    }
  }

  Laurent2 result;
  if (split != 0) {
    // The closure falls apart across the unused strand gap.
    OWord left{split, {}}, right{w.strands - split, {}};
    for (char c : w.code) {
      if (idx_of(c) < split) {
        left.code += c;
      } else {
        right.code += static_cast<char>(c - 2 * split);
      }
    }
    result = Laurent2::delta() * compute(left, memo, cap) * compute(right, memo, cap);
  } else if (std::any_of(canonical.begin(), canonical.end(), [](char c) { return neg_of(c); })) {
    // P(s_i^-1 x) = a^-2 P(s_i x) - a^-1 z P(x), after rotating a negative
    // letter to the front.
    const std::size_t j = static_cast<std::size_t>(std::distance(
        canonical.begin(), std::find_if(canonical.begin(), canonical.end(),
                                        [](char c) { return neg_of(c); })));
    std::string rot = canonical.substr(j) + canonical.substr(0, j);
    const char lead = rot[0];
    std::string rest = rot.substr(1);
    OWord plus{w.strands, std::string(1, static_cast<char>(lead & ~1)) + rest};
    OWord zero{w.strands, std::move(rest)};
    result = compute(std::move(plus), memo, cap).shifted(-2, 0) -
             compute(std::move(zero), memo, cap).shifted(-1, 1);
  } else {
    // P(x s_i s_i) = a^2 P(x) + a z P(x s_i), at the first repeated adjacent
    // letter anywhere in the class (rotations cover the cyclic seam).
    bool found = false;
    for (const auto& u : cls) {
      for (std::size_t j = 0; j + 1 < u.size(); ++j) {
        if (u[j] != u[j + 1]) continue;
        std::string v = u.substr(j + 2) + u.substr(0, j + 2);
        OWord x{w.strands, v.substr(0, v.size() - 2)};
        OWord xs{w.strands, v.substr(0, v.size() - 1)};
        result = compute(std::move(x), memo, cap).shifted(2, 0) +
                 compute(std::move(xs), memo, cap).shifted(1, 1);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      fail(errc::irreducible_word,
           "no skein step applies to any of the " + std::to_string(cls.size()) +
               " words in the move class of '" + unpack(w).to_text() + "'");
    }
  }

  memo.store(key, result);
  return result;
}

SkeinMemo& global_memo() {
  static SkeinMemo memo;
  return memo;
}

} // namespace

const Laurent2* SkeinMemo::find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void SkeinMemo::store(const std::string& key, Laurent2 value) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.try_emplace(key, std::move(value));
}

std::size_t SkeinMemo::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::vector<BraidWord> move_class(const BraidWord& w, std::size_t class_cap) {
  const OWord o = pack(w);
  std::vector<BraidWord> out;
  for (const auto& code : explore(o.code, class_cap)) out.push_back(unpack(OWord{o.strands, code}));
  return out;
}

BraidWord canonicalize(const BraidWord& w, std::size_t class_cap) {
  const OWord o = pack(w);
  const auto cls = explore(o.code, class_cap);
  return unpack(OWord{o.strands, *std::min_element(cls.begin(), cls.end())});
}

BraidWord reduce(const BraidWord& w, std::size_t class_cap) {
  return unpack(reduce_impl(pack(w), class_cap));
}

Laurent2 homfly_of_closure(const BraidWord& w, SkeinMemo* memo, std::size_t class_cap) {
  return compute(pack(w), memo ? *memo : global_memo(), class_cap);
}

} // namespace skein
