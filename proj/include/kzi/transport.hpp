#pragma once

#include <vector>

#include "kzi/loop.hpp"
#include "kzi/series.hpp"

namespace kzi {

inline constexpr int kDefaultStepsPerLetter = 512;

/// omega(gamma'(t)) = (1/2 pi i) sum_{i<j} t_ij (z_i' - z_j') / (z_i - z_j),
/// one coefficient per chord in pair_index order.
struct ConnectionSample {
  int n_strands = 2;
  std::vector<Coefficient> coefficients;

  Coefficient at(const ChordPair& p) const {
    return coefficients.at(static_cast<std::size_t>(pair_index(p, n_strands)));
  }
};

ConnectionSample omega_at(const ConfigLoop& loop, double t);

struct TransportResult {
  HorizontalSeries series;
  int steps_used = 0;
  /// max |T(steps) - T(steps/2)| / 15; infinity when steps == 1.
  double richardson_error_estimate = 0.0;
};

/// Solves T' = omega(t) * T, T(0) = 1, in the degree-truncated word algebra
/// with classical RK4, `steps` equal steps on every segment of the loop. The
/// coefficient of a degree-m word is the iterated integral of its chords over
/// the ordered simplex 0 <= t_1 < ... < t_m <= 1.
TransportResult transport(const ConfigLoop& loop, int max_degree, int steps = kDefaultStepsPerLetter,
                          double zero_threshold = kDefaultZeroThreshold);

/// exp(v) with v = integral of omega over [0, 1] and chords treated as
/// commuting: a degree-m word w gets prod_k v[w_k] / m!.
HorizontalSeries abelian_holonomy(const ConfigLoop& loop, int max_degree,
                                  double zero_threshold = kDefaultZeroThreshold);

/// Average of each coefficient over the m! reorderings of its word's chords.
HorizontalSeries symmetrize(const HorizontalSeries& series);

/// Direct iterated integral of one word over the ordered simplex by a
/// composite midpoint rule with `grid` cells per axis. Cells on the diagonal
/// are weighted by the fraction of the cell inside the simplex. Words of
/// degree above 3 are rejected (cost grid^m).
Coefficient simplex_oracle(const ConfigLoop& loop, const HorizontalWord& word, int grid);

/// Kontsevich integral of a braid: transport along its realization.
HorizontalSeries kontsevich_of_braid(const BraidWord& word, int max_degree,
                                     int steps = kDefaultStepsPerLetter,
                                     double zero_threshold = kDefaultZeroThreshold);

}  // namespace kzi
