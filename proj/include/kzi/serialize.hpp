#pragma once

#include <json.hpp>

#include "kzi/closure.hpp"
#include "kzi/loop.hpp"
#include "kzi/relations.hpp"
#include "kzi/series.hpp"

namespace kzi {

// JSON layouts. Words are [[i,j],...] bottom to top; coefficients are split
// into "re" and "im"; terms follow the graded-lex basis order so identical
// inputs serialize to identical bytes.
//
//   horizontal series: {"n_strands", "max_degree", "permutation", "terms": [{"word", "re", "im"}]}
//   normal form:       {"n_strands", "max_degree", "dimensions", "terms": [...]}
//   circle series:     {"circles", "max_degree", "terms": [{"slots", "re", "im"}]}
//   closure:           {"components", "cycles", "series", "reduced"}

nlohmann::json serialize(const HorizontalWord& word);
nlohmann::json serialize(const HorizontalSeries& series);
nlohmann::json serialize(const NormalFormSeries<HorizontalWord>& normal_form);
nlohmann::json serialize(const CircleSeries& series);
nlohmann::json serialize(const NormalFormSeries<CircleDiagram>& normal_form);
nlohmann::json serialize(const LinkSkeleton& skeleton);
nlohmann::json serialize(const ClosureResult& closure);
nlohmann::json serialize(const ConfigLoop& loop);

/// Inverse of serialize(HorizontalSeries). Throws ValidationError on schema violations.
HorizontalSeries parse_horizontal_series(const nlohmann::json& json,
                                         double zero_threshold = kDefaultZeroThreshold);

}  // namespace kzi
