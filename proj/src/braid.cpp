#include "skein/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

BraidWord::BraidWord(unsigned strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) fail(errc::syntax, "a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.sign != 1 && l.sign != -1) fail(errc::syntax, "braid letter sign must be +-1");
    if (l.index < 1 || l.index >= strands_) {
      fail(errc::syntax, "generator s" + std::to_string(l.index) + " does not exist on " +
                             std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::parse(unsigned strands, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's' || !std::isdigit(static_cast<unsigned char>(tok[1]))) {
      fail(errc::syntax, "braid letter '" + tok + "' does not match s<i> or s<i>^<k>");
    }
    std::size_t pos = 1;
    unsigned long idx = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      idx = idx * 10 + (tok[pos] - '0');
      if (idx > 1000) fail(errc::syntax, "generator index out of range in '" + tok + "'");
      ++pos;
    }
    long long exp = 1;
    if (pos != tok.size()) {
      if (tok[pos] != '^') fail(errc::syntax, "braid letter '" + tok + "' has trailing junk");
      ++pos;
      bool neg = false;
      if (pos < tok.size() && tok[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos == tok.size()) fail(errc::syntax, "braid letter '" + tok + "' has an empty exponent");
      long long mag = 0;
      for (; pos < tok.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(tok[pos]))) {
          fail(errc::syntax, "braid letter '" + tok + "' has a malformed exponent");
        }
        mag = mag * 10 + (tok[pos] - '0');
        if (mag > 1000000) fail(errc::syntax, "exponent out of range in '" + tok + "'");
      }
      exp = neg ? -mag : mag;
    }
    const int sign = exp < 0 ? -1 : 1;
    for (long long i = 0, reps = exp < 0 ? -exp : exp; i < reps; ++i) {
      letters.push_back(BraidLetter{static_cast<unsigned>(idx), sign});
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_text() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const std::size_t reps = j - i;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letters_[i].index);
    if (reps > 1 || letters_[i].sign < 0) {
      out += '^';
      if (letters_[i].sign < 0) out += '-';
      out += std::to_string(reps);
    }
    i = j;
  }
  return out;
}

unsigned BraidWord::closure_components() const {
  std::vector<unsigned> perm(strands_);
  std::iota(perm.begin(), perm.end(), 0u);
  for (const auto& l : letters_) std::swap(perm[l.index - 1], perm[l.index]);

  std::vector<bool> seen(strands_, false);
  unsigned cycles = 0;
  for (unsigned s = 0; s < strands_; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (unsigned t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return cycles;
}

} // namespace skein
