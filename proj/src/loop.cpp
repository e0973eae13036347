#include "kzi/loop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "kzi/error.hpp"

namespace kzi {

ConfigLoop::ConfigLoop(int n_strands, std::vector<LoopSegment> segments)
    : n_strands_(n_strands), segments_(std::move(segments)), permutation_(n_strands) {
  if (n_strands < 2) throw ValidationError("a loop needs at least 2 points");
  std::vector<int> strand_at(static_cast<std::size_t>(n_strands));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  double t = 0.0;
  for (const auto& seg : segments_) {
    if (seg.strand_at != strand_at) throw ValidationError("loop segments do not chain");
    if (!(seg.t_end > seg.t_begin) || seg.t_begin != t) throw ValidationError("loop segments must tile [0, 1]");
    t = seg.t_end;
    std::swap(strand_at[static_cast<std::size_t>(seg.letter.index - 1)],
              strand_at[static_cast<std::size_t>(seg.letter.index)]);
  }
  if (!segments_.empty() && t != 1.0) throw ValidationError("loop segments must tile [0, 1]");
  std::vector<int> images(static_cast<std::size_t>(n_strands));
  for (std::size_t pos = 0; pos < strand_at.size(); ++pos) {
    images[static_cast<std::size_t>(strand_at[pos] - 1)] = static_cast<int>(pos) + 1;
  }
  permutation_ = Permutation(std::move(images));
}

ConfigSample ConfigLoop::sample_segment(std::size_t segment, double s) const {
  const auto& seg = segments_.at(segment);
  const auto n = static_cast<std::size_t>(n_strands_);
  ConfigSample out{std::vector<Complex>(n), std::vector<Complex>(n)};
  for (std::size_t pos = 0; pos < n; ++pos) {
    out.positions[static_cast<std::size_t>(seg.strand_at[pos] - 1)] = static_cast<double>(pos);
  }
  const int k = seg.letter.index;
  const double center = k - 0.5;
  const double radius = 0.5;
  const double angular = seg.letter.sign * std::numbers::pi;
  const Complex phase = std::polar(1.0, angular * s);
  const Complex dphase = Complex(0.0, angular) * phase / (seg.t_end - seg.t_begin);
  const auto left = static_cast<std::size_t>(seg.strand_at[static_cast<std::size_t>(k - 1)] - 1);
  const auto right = static_cast<std::size_t>(seg.strand_at[static_cast<std::size_t>(k)] - 1);
  out.positions[left] = center - radius * phase;
  out.positions[right] = center + radius * phase;
  out.velocities[left] = -radius * dphase;
  out.velocities[right] = radius * dphase;
  return out;
}

ConfigSample ConfigLoop::sample(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("sample time must lie in [0, 1]");
  if (segments_.empty()) {
    const auto n = static_cast<std::size_t>(n_strands_);
    ConfigSample out{std::vector<Complex>(n), std::vector<Complex>(n)};
    for (std::size_t k = 0; k < n; ++k) out.positions[k] = static_cast<double>(k);
    return out;
  }
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const LoopSegment& seg) { return value < seg.t_end; });
  if (it == segments_.end()) --it;
  const double s = (t - it->t_begin) / (it->t_end - it->t_begin);
  return sample_segment(static_cast<std::size_t>(it - segments_.begin()), std::clamp(s, 0.0, 1.0));
}

ConfigLoop realize(const BraidWord& word) {
  std::vector<double> weights(word.letters().size(), 1.0);
  return realize(word, weights);
}

ConfigLoop realize(const BraidWord& word, std::span<const double> weights) {
  const auto& letters = word.letters();
  if (weights.size() != letters.size()) throw ValidationError("need one duration weight per letter");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("duration weights must be positive");
    total += w;
  }
  std::vector<int> strand_at(static_cast<std::size_t>(word.n_strands()));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  std::vector<LoopSegment> segments;
  double elapsed = 0.0;
  for (std::size_t r = letters.size(); r-- > 0;) {
    LoopSegment seg;
    seg.letter = letters[r];
    seg.strand_at = strand_at;
    seg.t_begin = elapsed / total;
    elapsed += weights[r];
    seg.t_end = r == 0 ? 1.0 : elapsed / total;
    std::swap(strand_at[static_cast<std::size_t>(seg.letter.index - 1)],
              strand_at[static_cast<std::size_t>(seg.letter.index)]);
    segments.push_back(std::move(seg));
  }
  return ConfigLoop(word.n_strands(), std::move(segments));
}

double min_separation(const ConfigLoop& loop, int n_samples) {
  if (n_samples < 2) throw ValidationError("min_separation needs at least 2 samples");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_samples; ++k) {
    const auto z = loop.sample(static_cast<double>(k) / (n_samples - 1)).positions;
    for (std::size_t a = 0; a < z.size(); ++a) {
      for (std::size_t b = a + 1; b < z.size(); ++b) best = std::min(best, std::abs(z[a] - z[b]));
    }
  }
  return best;
}

}  // namespace kzi
