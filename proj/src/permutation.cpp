#include "kzi/permutation.hpp"

#include <numeric>

#include "kzi/error.hpp"

namespace kzi {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw ValidationError("permutation images must be a bijection of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int n, int k) {
  if (k < 1 || k >= n) throw ValidationError("transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(k - 1)], p.images_[static_cast<std::size_t>(k)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw ValidationError("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = next(images_[k]);
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[static_cast<std::size_t>(k - 1)]; k = (*this)(k)) {
      seen[static_cast<std::size_t>(k - 1)] = true;
      cycle.push_back(k);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

}  // namespace kzi
