#include "kzi/relations.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <string>

#include "kzi/error.hpp"

namespace kzi {
namespace {

using IntRow = std::map<std::size_t, long>;

RelationRow to_relation_row(const IntRow& row) {
  RelationRow out;
  for (const auto& [col, v] : row) {
    if (v != 0) out.entries.emplace_back(col, Rational(v));
  }
  return out;
}

std::size_t power(std::size_t base, int exponent) {
  std::size_t r = 1;
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

// Degree-2 relations as (lower, upper, sign) pair-index triples.
struct Term2 {
  int lower;
  int upper;
  long sign;
};

std::vector<std::vector<Term2>> degree_two_relations(int n) {
  std::vector<std::vector<Term2>> out;
  auto t = [n](int a, int b) { return pair_index(ChordPair(a, b), n); };
  // 4T: for each chord ab and third strand c, [ab, ac] + [ab, bc] - [ac, ab] - [bc, ab].
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        const int ab = t(a, b), ac = t(a, c), bc = t(b, c);
        out.push_back({{ab, ac, +1}, {ab, bc, +1}, {ac, ab, -1}, {bc, ab, -1}});
      }
    }
  }
  // Far commutativity for chords on four distinct strands.
  const int pairs = pair_count(n);
  for (int p = 0; p < pairs; ++p) {
    for (int q = p + 1; q < pairs; ++q) {
      const ChordPair x = pair_at(p, n), y = pair_at(q, n);
      if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) continue;
      out.push_back({{p, q, +1}, {q, p, -1}});
    }
  }
  return out;
}

// Incrementally maintained reduced row echelon form over Q.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t columns) : columns_(columns) {}

  bool full() const { return rows_.size() == columns_; }

  void insert(const RelationRow& row) {
    std::map<std::size_t, Rational> r;
    for (const auto& [col, v] : row.entries) {
      if (col >= columns_) {
        throw InternalError("relation row references basis index " + std::to_string(col) +
                            " outside a basis of size " + std::to_string(columns_));
      }
      r[col] += v;
    }
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [col, v] : r) {
      if (rows_.count(col) != 0 && v != 0) hits.emplace_back(col, v);
    }
    for (const auto& [col, factor] : hits) {
      for (const auto& [c, v] : rows_.at(col)) r[c] -= factor * v;
    }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    if (r.empty()) return;

    const std::size_t pivot = r.rbegin()->first;
    const Rational lead = r.rbegin()->second;
    for (auto& entry : r) entry.second /= lead;
    for (auto& [p, other] : rows_) {
      auto it = other.find(pivot);
      if (it == other.end()) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : r) other[c] -= factor * v;
      std::erase_if(other, [](const auto& e) { return e.second == 0; });
    }
    rows_.emplace(pivot, std::move(r));
  }

  const std::map<std::size_t, std::map<std::size_t, Rational>>& rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::map<std::size_t, std::map<std::size_t, Rational>> rows_;
};

}  // namespace

RelationSet<HorizontalWord> horizontal_relations(int n_strands, int degree) {
  if (n_strands < 2) throw ValidationError("horizontal relations need at least 2 strands");
  if (degree < 0) throw ValidationError("degree must be non-negative");
  RelationSet<HorizontalWord> set;
  set.degree = degree;
  set.basis = enumerate_words(n_strands, degree);
  if (degree < 2) return set;

  const auto pairs = static_cast<std::size_t>(pair_count(n_strands));
  const auto base = degree_two_relations(n_strands);
  for (int pos = 0; pos + 1 < degree; ++pos) {
    const std::size_t below = power(pairs, pos);
    const std::size_t above = power(pairs, degree - 2 - pos);
    for (std::size_t lo = 0; lo < below; ++lo) {
      for (std::size_t hi = 0; hi < above; ++hi) {
        for (const auto& rel : base) {
          IntRow row;
          for (const auto& term : rel) {
            const std::size_t middle = static_cast<std::size_t>(term.lower) * pairs +
                                       static_cast<std::size_t>(term.upper);
            row[(lo * pairs * pairs + middle) * above + hi] += term.sign;
          }
          set.rows.push_back(to_relation_row(row));
        }
      }
    }
  }
  return set;
}

RelationSet<CircleDiagram> circle_relations(CircleSkeleton skeleton, int degree) {
  RelationSet<CircleDiagram> set;
  set.degree = degree;
  set.basis = enumerate_circle_diagrams(skeleton, degree);
  std::map<CircleDiagram, std::size_t> index;
  for (std::size_t k = 0; k < set.basis.size(); ++k) index.emplace(set.basis[k], k);
  auto lookup = [&](const CircleDiagram& d) {
    auto it = index.find(d);
    if (it == index.end()) throw InternalError("4T produced a diagram outside the enumerated basis");
    return it->second;
  };

  std::set<std::vector<std::pair<std::size_t, long>>> unique;
  auto emit = [&](const IntRow& row) {
    std::vector<std::pair<std::size_t, long>> key;
    for (const auto& [c, v] : row) {
      if (v != 0) key.emplace_back(c, v);
    }
    if (key.empty()) return;
    // A row and its negative span the same relation.
    if (key.front().second < 0) {
      for (auto& e : key) e.second = -e.second;
    }
    unique.insert(std::move(key));
  };

  for (const auto& d : set.basis) {
    if (d.has_isolated_chord()) emit(IntRow{{lookup(d), 1}});
    const auto& slots = d.slots();
    for (int moving = 0; moving < degree; ++moving) {
      // Each foot of the moving chord in turn slides; the other foot stays.
      for (std::size_t c = 0; c < slots.size(); ++c) {
        for (std::size_t k = 0; k < slots[c].size(); ++k) {
          if (slots[c][k] != moving) continue;
          auto removed = slots;
          removed[c].erase(removed[c].begin() + static_cast<std::ptrdiff_t>(k));
          for (int fixed = 0; fixed < degree; ++fixed) {
            if (fixed == moving) continue;
            IntRow row;
            for (std::size_t fc = 0; fc < removed.size(); ++fc) {
              for (std::size_t fk = 0; fk < removed[fc].size(); ++fk) {
                if (removed[fc][fk] != fixed) continue;
                auto before = removed;
                before[fc].insert(before[fc].begin() + static_cast<std::ptrdiff_t>(fk), moving);
                auto after = removed;
                after[fc].insert(after[fc].begin() + static_cast<std::ptrdiff_t>(fk + 1), moving);
                row[lookup(CircleDiagram(skeleton.n_circles, std::move(before)))] += 1;
                row[lookup(CircleDiagram(skeleton.n_circles, std::move(after)))] -= 1;
              }
            }
            emit(row);
          }
        }
      }
    }
  }
  for (const auto& key : unique) {
    RelationRow row;
    for (const auto& [c, v] : key) row.entries.emplace_back(c, Rational(v));
    set.rows.push_back(std::move(row));
  }
  return set;
}

template <class Key>
QuotientMap<Key>::QuotientMap(const RelationSet<Key>& relations)
    : degree_(relations.degree), basis_(relations.basis) {
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
  if (index_.size() != basis_.size()) throw InternalError("relation basis contains duplicates");

  EchelonBuilder echelon(basis_.size());
  for (const auto& row : relations.rows) {
    if (echelon.full()) break;
    echelon.insert(row);
  }
  std::vector<std::ptrdiff_t> position(basis_.size(), -1);
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    if (echelon.rows().count(col) != 0) continue;
    position[col] = static_cast<std::ptrdiff_t>(free_columns_.size());
    free_columns_.push_back(col);
    quotient_basis_.push_back(basis_[col]);
  }
  for (const auto& [pivot, row] : echelon.rows()) {
    PivotRow p{pivot, {}};
    for (const auto& [col, v] : row) {
      if (col == pivot) continue;
      p.free_entries.emplace_back(static_cast<std::size_t>(position[col]), v.get_d());
    }
    pivots_.push_back(std::move(p));
  }
}

template <class Key>
std::size_t QuotientMap<Key>::index_of(const Key& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw InternalError("key is not part of the degree-" + std::to_string(degree_) + " basis");
  return it->second;
}

template <class Key>
std::vector<Coefficient> QuotientMap<Key>::project(std::span<const Coefficient> full) const {
  if (full.size() != basis_.size()) throw InternalError("vector length differs from basis size");
  std::vector<Coefficient> coords(free_columns_.size());
  for (std::size_t k = 0; k < free_columns_.size(); ++k) coords[k] = full[free_columns_[k]];
  for (const auto& p : pivots_) {
    const Coefficient x = full[p.pivot];
    if (x == Coefficient{}) continue;
    for (const auto& [pos, v] : p.free_entries) coords[pos] -= x * v;
  }
  return coords;
}

template <class Key>
std::vector<Coefficient> QuotientMap<Key>::lift(std::span<const Coefficient> coords) const {
  if (coords.size() != free_columns_.size()) throw InternalError("coordinate length differs from quotient dimension");
  std::vector<Coefficient> full(basis_.size());
  for (std::size_t k = 0; k < free_columns_.size(); ++k) full[free_columns_[k]] = coords[k];
  return full;
}

template class QuotientMap<HorizontalWord>;
template class QuotientMap<CircleDiagram>;

ReductionCache& ReductionCache::global() {
  static ReductionCache cache;
  return cache;
}

namespace {

template <class Map, class Key, class Build>
auto cached(std::shared_mutex& mutex, Map& map, const Key& key, Build build) {
  {
    std::shared_lock lock(mutex);
    if (auto it = map.find(key); it != map.end()) return it->second;
  }
  auto built = build();
  std::unique_lock lock(mutex);
  return map.try_emplace(key, std::move(built)).first->second;
}

}  // namespace

std::shared_ptr<const QuotientMap<HorizontalWord>> ReductionCache::horizontal(int n_strands, int degree) {
  return cached(mutex_, horizontal_, std::pair{n_strands, degree}, [&] {
    return std::make_shared<const QuotientMap<HorizontalWord>>(horizontal_relations(n_strands, degree));
  });
}

std::shared_ptr<const QuotientMap<CircleDiagram>> ReductionCache::circle(CircleSkeleton skeleton, int degree) {
  return cached(mutex_, circle_, std::pair{skeleton.n_circles, degree}, [&] {
    return std::make_shared<const QuotientMap<CircleDiagram>>(circle_relations(skeleton, degree));
  });
}

NormalFormSeries<HorizontalWord> reduce(const HorizontalSeries& series, ReductionCache& cache) {
  NormalFormSeries<HorizontalWord> out;
  out.skeleton_size = series.n_strands();
  out.max_degree = series.max_degree();
  out.zero_threshold = series.zero_threshold();
  for (int m = 0; m <= series.max_degree(); ++m) {
    auto quotient = cache.horizontal(series.n_strands(), m);
    std::vector<Coefficient> full(quotient->basis().size());
    for (const auto& [w, c] : series.terms()) {
      if (w.degree() == m) full[word_index(w)] = c;
    }
    out.blocks.push_back({m, quotient->quotient_basis(), quotient->project(full)});
  }
  return out;
}

NormalFormSeries<CircleDiagram> reduce(const CircleSeries& series, ReductionCache& cache) {
  NormalFormSeries<CircleDiagram> out;
  out.skeleton_size = series.skeleton().n_circles;
  out.max_degree = series.max_degree();
  out.zero_threshold = series.zero_threshold();
  for (int m = 0; m <= series.max_degree(); ++m) {
    auto quotient = cache.circle(series.skeleton(), m);
    std::vector<Coefficient> full(quotient->basis().size());
    for (const auto& [d, c] : series.terms()) {
      if (d.degree() == m) full[quotient->index_of(d)] = c;
    }
    out.blocks.push_back({m, quotient->quotient_basis(), quotient->project(full)});
  }
  return out;
}

template <class Key>
double max_abs_difference(const NormalFormSeries<Key>& a, const NormalFormSeries<Key>& b) {
  if (a.blocks.size() != b.blocks.size()) throw ValidationError("normal forms differ in truncation degree");
  double worst = 0.0;
  for (std::size_t m = 0; m < a.blocks.size(); ++m) {
    const auto& x = a.blocks[m];
    const auto& y = b.blocks[m];
    if (x.basis != y.basis) throw ValidationError("normal forms use different quotient bases");
    for (std::size_t k = 0; k < x.coefficients.size(); ++k) {
      worst = std::max(worst, std::abs(x.coefficients[k] - y.coefficients[k]));
    }
  }
  return worst;
}

template double max_abs_difference(const NormalFormSeries<HorizontalWord>&, const NormalFormSeries<HorizontalWord>&);
template double max_abs_difference(const NormalFormSeries<CircleDiagram>&, const NormalFormSeries<CircleDiagram>&);

std::size_t quotient_dimension(CircleSkeleton skeleton, int degree) {
  return ReductionCache::global().circle(skeleton, degree)->dimension();
}

std::size_t horizontal_quotient_dimension(int n_strands, int degree) {
  return ReductionCache::global().horizontal(n_strands, degree)->dimension();
}

}  // namespace kzi
