#pragma once

#include <vector>

#include "kzi/braid.hpp"
#include "kzi/circle.hpp"
#include "kzi/relations.hpp"
#include "kzi/series.hpp"
#include "kzi/transport.hpp"

namespace kzi {

/// Components of a closed braid. Each component lists its strands in the
/// order met when following the link: strand k, then (across the closure arc)
/// strand pi(k), and so on, starting from the component's lowest strand.
/// Components are ordered by that lowest strand.
struct LinkSkeleton {
  int n_strands = 0;
  std::vector<std::vector<int>> components;

  int n_components() const noexcept { return static_cast<int>(components.size()); }
  int component_of(int strand) const;
};

LinkSkeleton closure_skeleton(const BraidWord& word);

/// Moduli map from horizontal words on the braid to chord diagrams on the
/// components of its closure. Chords among closure arcs and long chords
/// contribute nothing and are not represented.
CircleSeries tau_project(const HorizontalSeries& series, const BraidWord& word);

struct ClosureResult {
  LinkSkeleton skeleton;
  CircleSeries series;
  NormalFormSeries<CircleDiagram> reduced;
};

/// Braid-holonomy part of the Kontsevich integral of the closure, reduced by
/// 4T and framing independence.
ClosureResult kontsevich_link(const BraidWord& word, int max_degree, int steps = kDefaultStepsPerLetter,
                              double zero_threshold = kDefaultZeroThreshold);

}  // namespace kzi
