#pragma once

#include <compare>
#include <vector>

namespace kzi {

/// Bijection of {1..n}. For a braid, image(k) is the top position of the
/// strand that starts at bottom position k.
class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int k);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;

  /// Cycles, each listed from its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace kzi
