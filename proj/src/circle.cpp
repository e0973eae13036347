#include "kzi/circle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "kzi/error.hpp"

namespace kzi {
namespace {

using SlotTable = std::vector<std::vector<int>>;

SlotTable relabel_rotated(const SlotTable& slots, const std::vector<std::size_t>& shift) {
  std::map<int, int> label;
  SlotTable out(slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    const auto len = slots[c].size();
    out[c].reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
      const int old = slots[c][(k + shift[c]) % len];
      auto [it, fresh] = label.try_emplace(old, static_cast<int>(label.size()));
      out[c].push_back(it->second);
    }
  }
  return out;
}

SlotTable canonical_form(const SlotTable& slots) {
  std::vector<std::size_t> shift(slots.size(), 0);
  SlotTable best = relabel_rotated(slots, shift);
  // Odometer over all rotation tuples.
  while (true) {
    std::size_t c = 0;
    for (; c < slots.size(); ++c) {
      if (slots[c].empty()) continue;
      if (++shift[c] < slots[c].size()) break;
      shift[c] = 0;
    }
    if (c == slots.size()) break;
    SlotTable candidate = relabel_rotated(slots, shift);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

CircleDiagram::CircleDiagram(int n_circles, std::vector<std::vector<int>> slots) {
  if (n_circles < 1) throw ValidationError("a circle skeleton needs at least one circle");
  if (static_cast<int>(slots.size()) != n_circles) {
    throw ValidationError("slot table must list every circle");
  }
  std::map<int, int> count;
  for (const auto& circle : slots) {
    for (int label : circle) ++count[label];
  }
  for (const auto& [label, n] : count) {
    if (n != 2) throw ValidationError("every chord needs exactly two feet");
  }
  degree_ = static_cast<int>(count.size());
  slots_ = canonical_form(slots);
}

bool CircleDiagram::has_isolated_chord() const {
  for (const auto& circle : slots_) {
    const auto len = circle.size();
    if (len < 2) continue;  // a lone foot belongs to a chord reaching another circle
    for (std::size_t k = 0; k < len; ++k) {
      if (circle[k] == circle[(k + 1) % len]) return true;
    }
  }
  return false;
}

std::strong_ordering operator<=>(const CircleDiagram& a, const CircleDiagram& b) {
  if (auto c = a.n_circles() <=> b.n_circles(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = 0; k < a.slots().size(); ++k) {
    if (auto c = a.slots()[k].size() <=> b.slots()[k].size(); c != 0) return c;
  }
  return a.slots() <=> b.slots();
}

namespace {

void perfect_matchings(std::vector<int>& open, std::vector<int>& partner,
                       const std::function<void()>& emit) {
  if (open.empty()) {
    emit();
    return;
  }
  const int first = open.front();
  for (std::size_t k = 1; k < open.size(); ++k) {
    const int other = open[k];
    std::vector<int> rest;
    rest.reserve(open.size() - 2);
    for (std::size_t r = 1; r < open.size(); ++r) {
      if (r != k) rest.push_back(open[r]);
    }
    partner[static_cast<std::size_t>(first)] = other;
    partner[static_cast<std::size_t>(other)] = first;
    perfect_matchings(rest, partner, emit);
  }
}

// All ways to split `total` feet over `parts` circles.
void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    current.push_back(k);
    compositions(total - k, parts - 1, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<CircleDiagram> enumerate_circle_diagrams(CircleSkeleton skeleton, int degree) {
  if (skeleton.n_circles < 1) throw ValidationError("a circle skeleton needs at least one circle");
  if (degree < 0) throw ValidationError("degree must be non-negative");
  const int feet = 2 * degree;
  std::set<CircleDiagram> found;
  std::vector<int> lengths;
  compositions(feet, skeleton.n_circles, lengths, [&](const std::vector<int>& split) {
    std::vector<int> open(static_cast<std::size_t>(feet));
    std::iota(open.begin(), open.end(), 0);
    std::vector<int> partner(static_cast<std::size_t>(feet), -1);
    perfect_matchings(open, partner, [&] {
      std::vector<std::vector<int>> slots(split.size());
      int pos = 0;
      for (std::size_t c = 0; c < split.size(); ++c) {
        for (int k = 0; k < split[c]; ++k, ++pos) {
          slots[c].push_back(std::min(pos, partner[static_cast<std::size_t>(pos)]));
        }
      }
      found.emplace(skeleton.n_circles, std::move(slots));
    });
  });
  return {found.begin(), found.end()};
}

CircleSeries::CircleSeries(CircleSkeleton skeleton, int max_degree, Terms terms, double zero_threshold)
    : skeleton_(skeleton), max_degree_(max_degree), zero_threshold_(zero_threshold), terms_(std::move(terms)) {
  if (max_degree < 0) throw ValidationError("max degree must be non-negative");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.n_circles() != skeleton.n_circles) {
      throw ValidationError("diagram circle count differs from series");
    }
    if (it->first.degree() > max_degree || std::abs(it->second) < zero_threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Coefficient CircleSeries::coefficient(const CircleDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Coefficient{} : it->second;
}

}  // namespace kzi
