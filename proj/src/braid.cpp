#include "kzi/braid.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "kzi/error.hpp"

namespace kzi {

BraidWord::BraidWord(int n_strands, std::vector<Generator> letters)
    : n_strands_(n_strands), letters_(std::move(letters)) {
  if (n_strands < 2) throw ValidationError("a braid needs at least 2 strands");
  for (const auto& g : letters_) {
    if (g.index < 1 || g.index >= n_strands) {
      throw ValidationError("generator index out of range: " + std::to_string(g.index) + " (braid has " +
                            std::to_string(n_strands) + " strands)");
    }
    if (g.sign != 1 && g.sign != -1) throw ValidationError("generator sign must be +1 or -1");
  }
}

BraidWord BraidWord::operator*(const BraidWord& lower) const {
  if (lower.n_strands_ != n_strands_) throw ValidationError("cannot stack braids with different strand counts");
  auto letters = letters_;
  letters.insert(letters.end(), lower.letters_.begin(), lower.letters_.end());
  return BraidWord(n_strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<Generator> letters(letters_.rbegin(), letters_.rend());
  for (auto& g : letters) g.sign = -g.sign;
  return BraidWord(n_strands_, std::move(letters));
}

BraidWord parse_braid_word(std::string_view text, int n_strands) {
  if (n_strands < 2) throw ValidationError("a braid needs at least 2 strands");
  std::vector<Generator> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ValidationError("not an integer generator: '" + std::string(token) + "'");
    }
    if (value == 0) throw ValidationError("zero is not a generator: '" + std::string(token) + "'");
    const int index = value < 0 ? -value : value;
    if (index >= n_strands) {
      throw ValidationError("generator index out of range: '" + std::string(token) + "' (braid has " +
                            std::to_string(n_strands) + " strands)");
    }
    letters.push_back({index, value < 0 ? -1 : 1});
  }
  return BraidWord(n_strands, std::move(letters));
}

Permutation permutation_of(const BraidWord& word) {
  Permutation p(word.n_strands());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    p = p.then(Permutation::transposition(word.n_strands(), it->index));
  }
  return p;
}

}  // namespace kzi
