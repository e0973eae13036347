#pragma once

#include <complex>
#include <map>

#include "kzi/chord.hpp"
#include "kzi/permutation.hpp"

namespace kzi {

using Coefficient = std::complex<double>;

inline constexpr double kDefaultZeroThreshold = 1e-12;

/// Degree-truncated linear combination of horizontal words on a braid skeleton.
///
/// Chords are labelled by strand, a strand being named after its bottom
/// position. The skeleton permutation records where each strand ends, which is
/// what stacking two braid series needs: the upper factor's strands are named
/// by their positions at the top of the lower factor. For pure skeletons the
/// permutation is the identity and nothing is relabelled.
///
/// Terms with modulus below the zero threshold are never stored.
class HorizontalSeries {
 public:
  using Terms = std::map<HorizontalWord, Coefficient>;

  HorizontalSeries(int n_strands, int max_degree, double zero_threshold = kDefaultZeroThreshold);
  HorizontalSeries(int n_strands, int max_degree, Terms terms, Permutation skeleton,
                   double zero_threshold = kDefaultZeroThreshold);

  /// Coefficient 1 on the empty word.
  static HorizontalSeries identity(int n_strands, int max_degree,
                                   double zero_threshold = kDefaultZeroThreshold);

  int n_strands() const noexcept { return n_strands_; }
  int max_degree() const noexcept { return max_degree_; }
  double zero_threshold() const noexcept { return zero_threshold_; }
  const Permutation& skeleton() const noexcept { return skeleton_; }
  const Terms& terms() const noexcept { return terms_; }

  Coefficient coefficient(const HorizontalWord& w) const;

  HorizontalSeries with_skeleton(Permutation skeleton) const;

  friend HorizontalSeries operator+(const HorizontalSeries& a, const HorizontalSeries& b);
  friend HorizontalSeries operator-(const HorizontalSeries& a, const HorizontalSeries& b);
  friend HorizontalSeries operator*(Coefficient s, const HorizontalSeries& a);

 private:
  int n_strands_;
  int max_degree_;
  double zero_threshold_;
  Permutation skeleton_;
  Terms terms_;
};

/// Bilinear extension of ess_product: `top` stacked above `bottom`, truncated at
/// the common max degree. Strands of `top` are renamed through the inverse of
/// bottom's skeleton permutation; the result's skeleton is bottom then top.
HorizontalSeries series_product(const HorizontalSeries& top, const HorizontalSeries& bottom);

/// 2^-k for the smallest degree k carrying a coefficient difference above the
/// zero threshold of `a`; 0 when the series agree through the max degree.
double series_distance(const HorizontalSeries& a, const HorizontalSeries& b);

/// Largest coefficient-wise modulus of a - b.
double max_abs_difference(const HorizontalSeries& a, const HorizontalSeries& b);

}  // namespace kzi
