#include "kzi/closure.hpp"

#include <string>

#include "kzi/error.hpp"

namespace kzi {

int LinkSkeleton::component_of(int strand) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int s : components[c]) {
      if (s == strand) return static_cast<int>(c);
    }
  }
  throw ValidationError("strand " + std::to_string(strand) + " is not part of the link");
}

LinkSkeleton closure_skeleton(const BraidWord& word) {
  return {word.n_strands(), permutation_of(word).cycles()};
}

CircleSeries tau_project(const HorizontalSeries& series, const BraidWord& word) {
  if (series.n_strands() != word.n_strands()) throw ValidationError("tau_project: strand counts differ");
  if (!(series.skeleton() == permutation_of(word))) {
    throw ValidationError("tau_project: series was not computed on this braid's skeleton");
  }
  const LinkSkeleton link = closure_skeleton(word);
  const auto n = static_cast<std::size_t>(word.n_strands());

  CircleSeries::Terms terms;
  const CircleSkeleton skeleton{link.n_components()};
  for (const auto& [w, coeff] : series.terms()) {
    // Feet on each strand come in height order; strands follow the traversal.
    std::vector<std::vector<int>> per_strand(n);
    for (std::size_t k = 0; k < w.chords.size(); ++k) {
      per_strand[static_cast<std::size_t>(w.chords[k].i - 1)].push_back(static_cast<int>(k));
      per_strand[static_cast<std::size_t>(w.chords[k].j - 1)].push_back(static_cast<int>(k));
    }
    std::vector<std::vector<int>> slots(link.components.size());
    for (std::size_t c = 0; c < link.components.size(); ++c) {
      for (int strand : link.components[c]) {
        const auto& feet = per_strand[static_cast<std::size_t>(strand - 1)];
        slots[c].insert(slots[c].end(), feet.begin(), feet.end());
      }
    }
    terms[CircleDiagram(skeleton.n_circles, std::move(slots))] += coeff;
  }
  return CircleSeries(skeleton, series.max_degree(), std::move(terms), series.zero_threshold());
}

ClosureResult kontsevich_link(const BraidWord& word, int max_degree, int steps, double zero_threshold) {
  const auto braid = kontsevich_of_braid(word, max_degree, steps, zero_threshold);
  auto projected = tau_project(braid, word);
  auto reduced = reduce(projected);
  return {closure_skeleton(word), std::move(projected), std::move(reduced)};
}

}  // namespace kzi
