#include "kzi/serialize.hpp"

#include <string>

#include "kzi/error.hpp"

namespace kzi {
namespace {

using nlohmann::json;

json term(json key_name_value, const char* key, Coefficient c) {
  return json{{key, std::move(key_name_value)}, {"re", c.real()}, {"im", c.imag()}};
}

template <class Key, class KeyToJson>
json normal_form_terms(const NormalFormSeries<Key>& nf, KeyToJson key_to_json, const char* key) {
  json terms = json::array();
  for (const auto& block : nf.blocks) {
    for (std::size_t k = 0; k < block.basis.size(); ++k) {
      const Coefficient c = block.coefficients[k];
      if (std::abs(c) < nf.zero_threshold) continue;
      terms.push_back(term(key_to_json(block.basis[k]), key, c));
    }
  }
  return terms;
}

template <class Key>
json dimensions(const NormalFormSeries<Key>& nf) {
  json dims = json::array();
  for (const auto& block : nf.blocks) dims.push_back(block.basis.size());
  return dims;
}

json serialize_diagram(const CircleDiagram& d) { return d.slots(); }

}  // namespace

json serialize(const HorizontalWord& word) {
  json out = json::array();
  for (const auto& c : word.chords) out.push_back({c.i, c.j});
  return out;
}

json serialize(const HorizontalSeries& series) {
  json terms = json::array();
  for (const auto& [w, c] : series.terms()) terms.push_back(term(serialize(w), "word", c));
  return json{{"n_strands", series.n_strands()},
              {"max_degree", series.max_degree()},
              {"permutation", series.skeleton().images()},
              {"terms", std::move(terms)}};
}

json serialize(const NormalFormSeries<HorizontalWord>& nf) {
  return json{{"n_strands", nf.skeleton_size},
              {"max_degree", nf.max_degree},
              {"dimensions", dimensions(nf)},
              {"terms", normal_form_terms(nf, [](const HorizontalWord& w) { return serialize(w); }, "word")}};
}

json serialize(const CircleSeries& series) {
  json terms = json::array();
  for (const auto& [d, c] : series.terms()) terms.push_back(term(serialize_diagram(d), "slots", c));
  return json{{"circles", series.skeleton().n_circles}, {"max_degree", series.max_degree()}, {"terms", std::move(terms)}};
}

json serialize(const NormalFormSeries<CircleDiagram>& nf) {
  return json{{"circles", nf.skeleton_size},
              {"max_degree", nf.max_degree},
              {"dimensions", dimensions(nf)},
              {"terms", normal_form_terms(nf, serialize_diagram, "slots")}};
}

json serialize(const LinkSkeleton& skeleton) {
  return json{{"components", skeleton.n_components()}, {"cycles", skeleton.components}};
}

json serialize(const ClosureResult& closure) {
  json out = serialize(closure.skeleton);
  out["series"] = serialize(closure.series);
  out["reduced"] = serialize(closure.reduced);
  return out;
}

json serialize(const ConfigLoop& loop) {
  json segments = json::array();
  for (const auto& seg : loop.segments()) {
    segments.push_back(json{{"letter", seg.letter.index},
                            {"sign", seg.letter.sign},
                            {"t_begin", seg.t_begin},
                            {"t_end", seg.t_end}});
  }
  return json{{"n_strands", loop.n_strands()}, {"segments", std::move(segments)}};
}

HorizontalSeries parse_horizontal_series(const json& in, double zero_threshold) {
  try {
    const int n = in.at("n_strands").get<int>();
    const int max_degree = in.at("max_degree").get<int>();
    Permutation skeleton(n);
    if (in.contains("permutation")) skeleton = Permutation(in.at("permutation").get<std::vector<int>>());
    HorizontalSeries::Terms terms;
    for (const auto& t : in.at("terms")) {
      HorizontalWord w(n);
      for (const auto& chord : t.at("word")) {
        if (!chord.is_array() || chord.size() != 2) throw ValidationError("a chord must be a pair [i, j]");
        w.chords.emplace_back(chord[0].get<int>(), chord[1].get<int>());
      }
      w = HorizontalWord(n, std::move(w.chords));
      terms[w] += Coefficient(t.at("re").get<double>(), t.at("im").get<double>());
    }
    return HorizontalSeries(n, max_degree, std::move(terms), std::move(skeleton), zero_threshold);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace kzi
