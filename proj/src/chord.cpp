#include "kzi/chord.hpp"

#include <algorithm>
#include <string>

#include "kzi/error.hpp"

namespace kzi {

ChordPair::ChordPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) throw ValidationError("a chord must join two distinct strands");
  if (i < 1) throw ValidationError("strand indices are 1-based");
}

HorizontalWord::HorizontalWord(int n, std::vector<ChordPair> c) : n_strands(n), chords(std::move(c)) {
  if (n < 1) throw ValidationError("a skeleton needs at least one strand");
  for (const auto& p : chords) {
    if (p.j > n) {
      throw ValidationError("chord (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                            ") exceeds " + std::to_string(n) + " strands");
    }
  }
}

std::strong_ordering operator<=>(const HorizontalWord& a, const HorizontalWord& b) {
  if (auto c = a.n_strands <=> b.n_strands; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.chords.begin(), a.chords.end(), b.chords.begin(),
                                                b.chords.end());
}

HorizontalWord ess_product(const HorizontalWord& top, const HorizontalWord& bottom) {
  if (top.n_strands != bottom.n_strands) {
    throw ValidationError("ess_product: strand counts differ (" + std::to_string(top.n_strands) +
                          " vs " + std::to_string(bottom.n_strands) + ")");
  }
  HorizontalWord out(bottom.n_strands, bottom.chords);
  out.chords.insert(out.chords.end(), top.chords.begin(), top.chords.end());
  return out;
}

int pair_count(int n_strands) { return n_strands * (n_strands - 1) / 2; }

int pair_index(const ChordPair& p, int n_strands) {
  // Pairs (1,2)..(1,n) come first, then (2,3).., i.e. row-major upper triangle.
  const int before = (p.i - 1) * n_strands - (p.i - 1) * p.i / 2;
  return before + (p.j - p.i - 1);
}

ChordPair pair_at(int index, int n_strands) {
  for (int i = 1; i < n_strands; ++i) {
    const int row = n_strands - i;
    if (index < row) return ChordPair(i, i + 1 + index);
    index -= row;
  }
  throw ValidationError("pair index out of range");
}

std::size_t word_index(const HorizontalWord& w) {
  const auto pairs = static_cast<std::size_t>(pair_count(w.n_strands));
  std::size_t index = 0;
  for (const auto& c : w.chords) index = index * pairs + static_cast<std::size_t>(pair_index(c, w.n_strands));
  return index;
}

HorizontalWord word_at(int n_strands, int degree, std::size_t index) {
  const auto pairs = static_cast<std::size_t>(pair_count(n_strands));
  std::vector<ChordPair> chords(static_cast<std::size_t>(degree));
  for (int k = degree - 1; k >= 0; --k) {
    chords[static_cast<std::size_t>(k)] = pair_at(static_cast<int>(index % pairs), n_strands);
    index /= pairs;
  }
  return HorizontalWord(n_strands, std::move(chords));
}

std::vector<HorizontalWord> enumerate_words(int n_strands, int degree) {
  if (n_strands < 2) throw ValidationError("enumerate_words needs at least 2 strands");
  if (degree < 0) throw ValidationError("degree must be non-negative");
  std::size_t total = 1;
  for (int k = 0; k < degree; ++k) total *= static_cast<std::size_t>(pair_count(n_strands));
  std::vector<HorizontalWord> words;
  words.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) words.push_back(word_at(n_strands, degree, idx));
  return words;
}

}  // namespace kzi
