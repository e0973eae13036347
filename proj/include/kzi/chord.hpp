#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace kzi {

/// A chord between strands i and j of a braid skeleton, stored with i < j.
struct ChordPair {
  int i = 1;
  int j = 2;

  ChordPair() = default;
  ChordPair(int a, int b);

  friend auto operator<=>(const ChordPair&, const ChordPair&) = default;
};

/// Horizontal chord diagram on n strands. chords[0] is the lowest chord.
struct HorizontalWord {
  int n_strands = 2;
  std::vector<ChordPair> chords;

  HorizontalWord() = default;
  explicit HorizontalWord(int n, std::vector<ChordPair> c = {});

  int degree() const noexcept { return static_cast<int>(chords.size()); }

  friend bool operator==(const HorizontalWord&, const HorizontalWord&) = default;
};

/// Graded-lexicographic order: degree, then the (i,j) sequence bottom to top.
std::strong_ordering operator<=>(const HorizontalWord& a, const HorizontalWord& b);

/// `top` stacked above `bottom`: chords of bottom followed by chords of top.
HorizontalWord ess_product(const HorizontalWord& top, const HorizontalWord& bottom);

/// All (n(n-1)/2)^m words of degree m, in graded-lex order.
std::vector<HorizontalWord> enumerate_words(int n_strands, int degree);

// Dense indexing shared by the transport buffers and relation bases. Pairs are
// numbered lexicographically; a word's index is its base-P numeral with the
// lowest chord as the most significant digit, so index order is lex order.
int pair_count(int n_strands);
int pair_index(const ChordPair& p, int n_strands);
ChordPair pair_at(int index, int n_strands);
std::size_t word_index(const HorizontalWord& w);
HorizontalWord word_at(int n_strands, int degree, std::size_t index);

}  // namespace kzi
