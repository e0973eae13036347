#pragma once

#include <string_view>
#include <vector>

#include "kzi/permutation.hpp"

namespace kzi {

/// Artin generator sigma_index^sign, sign = +1 or -1.
struct Generator {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A braid word on n strands. Letters are listed top to bottom, the way
/// stacked diagrams are written: in "1 2" the sigma_2 crossing lies below
/// sigma_1, so the lowest (earliest) letter is the last one.
class BraidWord {
 public:
  explicit BraidWord(int n_strands, std::vector<Generator> letters = {});

  int n_strands() const noexcept { return n_strands_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// `*this` stacked on top of `lower`.
  BraidWord operator*(const BraidWord& lower) const;
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_strands_;
  std::vector<Generator> letters_;
};

/// Whitespace-separated nonzero integers: k is sigma_k, -k its inverse.
BraidWord parse_braid_word(std::string_view text, int n_strands);

/// Composite of the letters' transpositions: the strand entering at bottom
/// position k leaves at top position permutation_of(w)(k).
Permutation permutation_of(const BraidWord& word);

}  // namespace kzi
