#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

struct BraidLetter {
  unsigned index = 1; // generator sigma_index, 1 <= index < strands
  int sign = 1;       // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the braid group B_strands.  Text form is whitespace-separated
// letters "s<i>", "s<i>^-1", with "^k" exponent shorthand ("s1^3 s2^-2").
class BraidWord {
public:
  explicit BraidWord(unsigned strands, std::vector<BraidLetter> letters = {});

  static BraidWord parse(unsigned strands, std::string_view text);
  std::string to_text() const;

  unsigned strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  // Number of link components of the braid closure: cycles of the underlying
  // permutation.
  unsigned closure_components() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  unsigned strands_;
  std::vector<BraidLetter> letters_;
};

} // namespace skein
