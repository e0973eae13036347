#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "kzi/circle.hpp"
#include "kzi/series.hpp"

namespace kzi {

using Rational = mpq_class;

/// One linear relation, sum of entry.second * basis[entry.first] = 0.
struct RelationRow {
  std::vector<std::pair<std::size_t, Rational>> entries;
};

template <class Key>
struct RelationSet {
  int degree = 0;
  std::vector<Key> basis;
  std::vector<RelationRow> rows;
};

/// Infinitesimal pure braid relations embedded at every pair of adjacent
/// heights of degree-m words:
///   [t_ab, t_ac + t_bc] = 0 for every chord ab and third strand c (4T),
///   [t_ab, t_cd] = 0 for disjoint chords.
/// Degrees 0 and 1 yield an empty row list.
RelationSet<HorizontalWord> horizontal_relations(int n_strands, int degree);

/// 4T instances among degree-m circle diagrams plus one row per diagram with
/// an isolated chord (framing independence).
RelationSet<CircleDiagram> circle_relations(CircleSkeleton skeleton, int degree);

/// Exact reduced row echelon form of a RelationSet.
///
/// Pivots are taken at the largest basis index of each row, so the quotient
/// basis consists of the graded-lex smallest representatives. Coefficient
/// vectors are complex; the rational elimination matrix is applied to them.
template <class Key>
class QuotientMap {
 public:
  explicit QuotientMap(const RelationSet<Key>& relations);

  int degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t dimension() const noexcept { return free_columns_.size(); }
  const std::vector<Key>& basis() const noexcept { return basis_; }
  const std::vector<Key>& quotient_basis() const noexcept { return quotient_basis_; }

  /// Basis position of `key`; InternalError if it is not part of the basis.
  std::size_t index_of(const Key& key) const;

  /// Coordinates on the quotient basis of a vector given on the full basis.
  std::vector<Coefficient> project(std::span<const Coefficient> full) const;

  /// Full-basis vector with the quotient coordinates on free columns, zero on pivots.
  std::vector<Coefficient> lift(std::span<const Coefficient> coords) const;

 private:
  struct PivotRow {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, double>> free_entries;
  };

  int degree_;
  std::vector<Key> basis_;
  std::map<Key, std::size_t> index_;
  std::vector<Key> quotient_basis_;
  std::vector<std::size_t> free_columns_;
  std::vector<PivotRow> pivots_;
};

extern template class QuotientMap<HorizontalWord>;
extern template class QuotientMap<CircleDiagram>;

template <class Key>
struct NormalFormBlock {
  int degree = 0;
  std::vector<Key> basis;
  std::vector<Coefficient> coefficients;
};

/// Coordinates of a series in the quotient algebra, one block per degree.
template <class Key>
struct NormalFormSeries {
  int skeleton_size = 0;  // strands for braid words, circles for circle diagrams
  int max_degree = 0;
  double zero_threshold = kDefaultZeroThreshold;
  std::vector<NormalFormBlock<Key>> blocks;

  Coefficient coefficient(const Key& key) const {
    for (const auto& block : blocks) {
      for (std::size_t k = 0; k < block.basis.size(); ++k) {
        if (block.basis[k] == key) return block.coefficients[k];
      }
    }
    return {};
  }
};

/// Thread-safe memo of QuotientMaps keyed by (skeleton, degree). Lookups take
/// a shared lock; a missing entry is built outside the lock and published once.
class ReductionCache {
 public:
  static ReductionCache& global();

  std::shared_ptr<const QuotientMap<HorizontalWord>> horizontal(int n_strands, int degree);
  std::shared_ptr<const QuotientMap<CircleDiagram>> circle(CircleSkeleton skeleton, int degree);

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const QuotientMap<HorizontalWord>>> horizontal_;
  std::map<std::pair<int, int>, std::shared_ptr<const QuotientMap<CircleDiagram>>> circle_;
};

NormalFormSeries<HorizontalWord> reduce(const HorizontalSeries& series,
                                        ReductionCache& cache = ReductionCache::global());
NormalFormSeries<CircleDiagram> reduce(const CircleSeries& series,
                                       ReductionCache& cache = ReductionCache::global());

/// Largest coefficient-wise modulus of a - b; the bases must coincide.
template <class Key>
double max_abs_difference(const NormalFormSeries<Key>& a, const NormalFormSeries<Key>& b);

extern template double max_abs_difference(const NormalFormSeries<HorizontalWord>&,
                                          const NormalFormSeries<HorizontalWord>&);
extern template double max_abs_difference(const NormalFormSeries<CircleDiagram>&,
                                          const NormalFormSeries<CircleDiagram>&);

/// dim of the degree-m quotient: diagram count minus exact relation rank.
std::size_t quotient_dimension(CircleSkeleton skeleton, int degree);
std::size_t horizontal_quotient_dimension(int n_strands, int degree);

}  // namespace kzi
