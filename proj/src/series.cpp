#include "kzi/series.hpp"

#include <cmath>
#include <string>

#include "kzi/error.hpp"

namespace kzi {
namespace {

void require_compatible(const HorizontalSeries& a, const HorizontalSeries& b, const char* op) {
  if (a.n_strands() != b.n_strands() || a.max_degree() != b.max_degree()) {
    throw ValidationError(std::string(op) + ": series differ in strand count or truncation degree");
  }
}

void require_same_skeleton(const HorizontalSeries& a, const HorizontalSeries& b, const char* op) {
  require_compatible(a, b, op);
  if (!(a.skeleton() == b.skeleton())) {
    throw ValidationError(std::string(op) + ": series live on different braid skeletons");
  }
}

}  // namespace

HorizontalSeries::HorizontalSeries(int n_strands, int max_degree, double zero_threshold)
    : HorizontalSeries(n_strands, max_degree, {}, Permutation(n_strands), zero_threshold) {}

HorizontalSeries::HorizontalSeries(int n_strands, int max_degree, Terms terms, Permutation skeleton,
                                   double zero_threshold)
    : n_strands_(n_strands),
      max_degree_(max_degree),
      zero_threshold_(zero_threshold),
      skeleton_(std::move(skeleton)),
      terms_(std::move(terms)) {
  if (n_strands < 1) throw ValidationError("a series needs at least one strand");
  if (max_degree < 0) throw ValidationError("max degree must be non-negative");
  if (!(zero_threshold >= 0.0)) throw ValidationError("zero threshold must be non-negative");
  if (skeleton_.size() != n_strands) throw ValidationError("skeleton permutation has the wrong size");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.n_strands != n_strands) throw ValidationError("word strand count differs from series");
    if (it->first.degree() > max_degree || std::abs(it->second) < zero_threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

HorizontalSeries HorizontalSeries::identity(int n_strands, int max_degree, double zero_threshold) {
  Terms t{{HorizontalWord(n_strands), Coefficient(1.0)}};
  return HorizontalSeries(n_strands, max_degree, std::move(t), Permutation(n_strands), zero_threshold);
}

Coefficient HorizontalSeries::coefficient(const HorizontalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient{} : it->second;
}

HorizontalSeries HorizontalSeries::with_skeleton(Permutation skeleton) const {
  return HorizontalSeries(n_strands_, max_degree_, terms_, std::move(skeleton), zero_threshold_);
}

HorizontalSeries operator+(const HorizontalSeries& a, const HorizontalSeries& b) {
  require_same_skeleton(a, b, "sum");
  auto terms = a.terms();
  for (const auto& [w, c] : b.terms()) terms[w] += c;
  return HorizontalSeries(a.n_strands(), a.max_degree(), std::move(terms), a.skeleton(), a.zero_threshold());
}

HorizontalSeries operator-(const HorizontalSeries& a, const HorizontalSeries& b) {
  require_same_skeleton(a, b, "difference");
  auto terms = a.terms();
  for (const auto& [w, c] : b.terms()) terms[w] -= c;
  return HorizontalSeries(a.n_strands(), a.max_degree(), std::move(terms), a.skeleton(), a.zero_threshold());
}

HorizontalSeries operator*(Coefficient s, const HorizontalSeries& a) {
  auto terms = a.terms();
  for (auto& entry : terms) entry.second *= s;
  return HorizontalSeries(a.n_strands(), a.max_degree(), std::move(terms), a.skeleton(), a.zero_threshold());
}

HorizontalSeries series_product(const HorizontalSeries& top, const HorizontalSeries& bottom) {
  require_compatible(top, bottom, "series_product");
  const int n = top.n_strands();
  const int max_degree = top.max_degree();
  const Permutation rename = bottom.skeleton().inverse();

  // Rename the upper factor's strands once, up front.
  std::vector<std::pair<HorizontalWord, Coefficient>> upper;
  upper.reserve(top.terms().size());
  for (const auto& [w, c] : top.terms()) {
    HorizontalWord renamed(n);
    renamed.chords.reserve(w.chords.size());
    for (const auto& p : w.chords) renamed.chords.emplace_back(rename(p.i), rename(p.j));
    upper.emplace_back(std::move(renamed), c);
  }

  HorizontalSeries::Terms out;
  for (const auto& [lw, lc] : bottom.terms()) {
    for (const auto& [uw, uc] : upper) {
      if (lw.degree() + uw.degree() > max_degree) continue;
      out[ess_product(uw, lw)] += uc * lc;
    }
  }
  return HorizontalSeries(n, max_degree, std::move(out), bottom.skeleton().then(top.skeleton()),
                          std::min(top.zero_threshold(), bottom.zero_threshold()));
}

double series_distance(const HorizontalSeries& a, const HorizontalSeries& b) {
  require_same_skeleton(a, b, "series_distance");
  int first = a.max_degree() + 1;
  auto visit = [&](const HorizontalWord& w) {
    if (w.degree() < first && std::abs(a.coefficient(w) - b.coefficient(w)) > a.zero_threshold()) {
      first = w.degree();
    }
  };
  for (const auto& entry : a.terms()) visit(entry.first);
  for (const auto& entry : b.terms()) visit(entry.first);
  return first > a.max_degree() ? 0.0 : std::ldexp(1.0, -first);
}

double max_abs_difference(const HorizontalSeries& a, const HorizontalSeries& b) {
  require_same_skeleton(a, b, "max_abs_difference");
  double worst = 0.0;
  for (const auto& [w, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(w)));
  for (const auto& [w, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(w)));
  return worst;
}

}  // namespace kzi
