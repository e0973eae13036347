#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "kzi/braid.hpp"

namespace kzi {

using Complex = std::complex<double>;

/// Positions and time derivatives of the N points, indexed by strand - 1.
struct ConfigSample {
  std::vector<Complex> positions;
  std::vector<Complex> velocities;
};

/// One half-twist. During [t_begin, t_end] the points at positions
/// index-1 and index swap along the circle of radius 1/2 about their midpoint;
/// everything else sits on its integer base point.
struct LoopSegment {
  Generator letter;
  double t_begin = 0.0;
  double t_end = 1.0;
  std::vector<int> strand_at;  // strand (1-based) occupying base point p at t_begin
};

/// Piecewise-analytic loop t -> (z_1(t), ..., z_N(t)) in C^N minus the fat
/// diagonal, starting and ending on the base configuration {0, ..., N-1}.
/// Segments are in time order, t = 0 at the bottom of the braid.
class ConfigLoop {
 public:
  ConfigLoop(int n_strands, std::vector<LoopSegment> segments);

  int n_strands() const noexcept { return n_strands_; }
  const std::vector<LoopSegment>& segments() const noexcept { return segments_; }
  const Permutation& permutation() const noexcept { return permutation_; }

  /// Exact evaluation at global time t in [0, 1].
  ConfigSample sample(double t) const;

  /// Evaluation on one segment at local time s in [0, 1]; velocities are
  /// still derivatives with respect to global time.
  ConfigSample sample_segment(std::size_t segment, double s) const;

 private:
  int n_strands_;
  std::vector<LoopSegment> segments_;
  Permutation permutation_;
};

/// Each letter gets an equal share of [0, 1]; the last letter of the word runs first.
ConfigLoop realize(const BraidWord& word);

/// As above with relative durations, one positive weight per letter in word order.
ConfigLoop realize(const BraidWord& word, std::span<const double> weights);

/// Minimum pairwise distance over n_samples equally spaced times in [0, 1].
double min_separation(const ConfigLoop& loop, int n_samples);

}  // namespace kzi
