#pragma once

#include <compare>
#include <map>
#include <vector>

#include "kzi/series.hpp"

namespace kzi {

/// q disjoint, numbered, identically oriented circles.
struct CircleSkeleton {
  int n_circles = 1;
  friend auto operator<=>(const CircleSkeleton&, const CircleSkeleton&) = default;
};

/// Chord diagram on disjoint circles.
///
/// slots()[c] lists the chord labels met walking circle c along its
/// orientation; every label occurs exactly twice in total. The constructor
/// brings the diagram to canonical form: over all rotations of every circle,
/// with chords relabelled 0,1,.. by first appearance, the lexicographically
/// smallest slot table is kept. Two diagrams are therefore equal exactly when
/// they differ by orientation-preserving rotations and chord renaming.
class CircleDiagram {
 public:
  CircleDiagram(int n_circles, std::vector<std::vector<int>> slots);

  int n_circles() const noexcept { return static_cast<int>(slots_.size()); }
  int degree() const noexcept { return degree_; }
  const std::vector<std::vector<int>>& slots() const noexcept { return slots_; }

  /// True if some chord has both feet adjacent on one circle.
  bool has_isolated_chord() const;

  friend bool operator==(const CircleDiagram&, const CircleDiagram&) = default;
  friend std::strong_ordering operator<=>(const CircleDiagram& a, const CircleDiagram& b);

 private:
  std::vector<std::vector<int>> slots_;
  int degree_ = 0;
};

/// Every canonical diagram with `degree` chords on the skeleton, sorted.
std::vector<CircleDiagram> enumerate_circle_diagrams(CircleSkeleton skeleton, int degree);

/// Truncated series of circle diagrams; same pruning rule as HorizontalSeries.
class CircleSeries {
 public:
  using Terms = std::map<CircleDiagram, Coefficient>;

  CircleSeries(CircleSkeleton skeleton, int max_degree, Terms terms = {},
               double zero_threshold = kDefaultZeroThreshold);

  CircleSkeleton skeleton() const noexcept { return skeleton_; }
  int max_degree() const noexcept { return max_degree_; }
  double zero_threshold() const noexcept { return zero_threshold_; }
  const Terms& terms() const noexcept { return terms_; }
  Coefficient coefficient(const CircleDiagram& d) const;

 private:
  CircleSkeleton skeleton_;
  int max_degree_;
  double zero_threshold_;
  Terms terms_;
};

}  // namespace kzi
