#pragma once

#include <complex>
#include <random>
#include <string_view>
#include <vector>

#include "kzi/braid.hpp"
#include "kzi/chord.hpp"
#include "kzi/series.hpp"

namespace kzi::test {

inline HorizontalWord word(int n, std::vector<ChordPair> chords) { return HorizontalWord(n, std::move(chords)); }

inline BraidWord braid(std::string_view text, int n) { return parse_braid_word(text, n); }

// Deterministic stream so failures reproduce.
inline std::mt19937& rng() {
  static std::mt19937 engine(20240611u);
  return engine;
}

inline HorizontalSeries random_series(int n, int max_degree, double density = 0.6) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  HorizontalSeries::Terms terms;
  for (int m = 0; m <= max_degree; ++m) {
    for (auto& w : enumerate_words(n, m)) {
      if (keep(rng())) terms.emplace(std::move(w), Coefficient(u(rng()), u(rng())));
    }
  }
  return HorizontalSeries(n, max_degree, std::move(terms), Permutation(n));
}

inline BraidWord random_braid(int n, int length) {
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<Generator> letters;
  for (int k = 0; k < length; ++k) letters.push_back({index(rng()), positive(rng()) ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

}  // namespace kzi::test
