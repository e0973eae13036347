#include "kzi/transport.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "kzi/error.hpp"

namespace kzi {
namespace {

const Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

std::vector<Coefficient> connection(const ConfigSample& z, int n, double t) {
  std::vector<Coefficient> omega;
  omega.reserve(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t i = 0; i < z.positions.size(); ++i) {
    for (std::size_t j = i + 1; j < z.positions.size(); ++j) {
      const Complex value =
          (z.velocities[i] - z.velocities[j]) / (z.positions[i] - z.positions[j]) / kTwoPiI;
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw NumericalError("connection is not finite for chord (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")",
                             t);
      }
      omega.push_back(value);
    }
  }
  return omega;
}

// Dense truncated series: block d holds P^d coefficients indexed by word_index.
class GradedBuffer {
 public:
  GradedBuffer(int pairs, int max_degree) : pairs_(static_cast<std::size_t>(pairs)) {
    std::size_t size = 1;
    for (int d = 0; d <= max_degree; ++d) {
      blocks_.emplace_back(size);
      size *= pairs_;
    }
  }

  static GradedBuffer identity(int pairs, int max_degree) {
    GradedBuffer b(pairs, max_degree);
    b.blocks_[0][0] = 1.0;
    return b;
  }

  std::size_t pairs() const { return pairs_; }
  std::vector<std::vector<Complex>>& blocks() { return blocks_; }
  const std::vector<std::vector<Complex>>& blocks() const { return blocks_; }

  // *this = omega * x, omega of degree one placed above x.
  void assign_left_product(const std::vector<Complex>& omega, const GradedBuffer& x) {
    blocks_[0][0] = 0.0;
    for (std::size_t d = 1; d < blocks_.size(); ++d) {
      const auto& lower = x.blocks_[d - 1];
      auto& out = blocks_[d];
      for (std::size_t u = 0; u < lower.size(); ++u) {
        const Complex xu = lower[u];
        Complex* row = out.data() + u * pairs_;
        for (std::size_t c = 0; c < pairs_; ++c) row[c] = omega[c] * xu;
      }
    }
  }

  // *this = a + s * b
  void assign_axpy(const GradedBuffer& a, Complex s, const GradedBuffer& b) {
    for (std::size_t d = 0; d < blocks_.size(); ++d) {
      for (std::size_t k = 0; k < blocks_[d].size(); ++k) blocks_[d][k] = a.blocks_[d][k] + s * b.blocks_[d][k];
    }
  }

  bool finite() const {
    for (const auto& block : blocks_) {
      for (const auto& c : block) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
      }
    }
    return true;
  }

 private:
  std::size_t pairs_;
  std::vector<std::vector<Complex>> blocks_;
};

GradedBuffer integrate(const ConfigLoop& loop, int max_degree, int steps) {
  const int n = loop.n_strands();
  const int pairs = pair_count(n);
  GradedBuffer state = GradedBuffer::identity(pairs, max_degree);
  GradedBuffer k1(pairs, max_degree), k2(pairs, max_degree), k3(pairs, max_degree), k4(pairs, max_degree),
      stage(pairs, max_degree);

  for (std::size_t s = 0; s < loop.segments().size(); ++s) {
    const auto& seg = loop.segments()[s];
    const double duration = seg.t_end - seg.t_begin;
    const double h = duration / steps;
    auto omega_local = [&](double local) {
      return connection(loop.sample_segment(s, local), n, seg.t_begin + local * duration);
    };
    auto w_start = omega_local(0.0);
    for (int k = 0; k < steps; ++k) {
      const double s0 = static_cast<double>(k) / steps;
      const double s1 = static_cast<double>(k + 1) / steps;
      const auto w_mid = omega_local(0.5 * (s0 + s1));
      auto w_end = omega_local(s1);

      k1.assign_left_product(w_start, state);
      stage.assign_axpy(state, 0.5 * h, k1);
      k2.assign_left_product(w_mid, stage);
      stage.assign_axpy(state, 0.5 * h, k2);
      k3.assign_left_product(w_mid, stage);
      stage.assign_axpy(state, h, k3);
      k4.assign_left_product(w_end, stage);

      auto& out = state.blocks();
      for (std::size_t d = 1; d < out.size(); ++d) {
        for (std::size_t i = 0; i < out[d].size(); ++i) {
          out[d][i] += h / 6.0 *
                       (k1.blocks()[d][i] + 2.0 * k2.blocks()[d][i] + 2.0 * k3.blocks()[d][i] + k4.blocks()[d][i]);
        }
      }
      w_start = std::move(w_end);
    }
    if (!state.finite()) throw NumericalError("transport produced a non-finite coefficient", seg.t_end);
  }
  return state;
}

HorizontalSeries to_series(const GradedBuffer& buffer, int n_strands, int max_degree, const Permutation& skeleton,
                           double zero_threshold) {
  HorizontalSeries::Terms terms;
  for (int d = 0; d <= max_degree; ++d) {
    const auto& block = buffer.blocks()[static_cast<std::size_t>(d)];
    for (std::size_t u = 0; u < block.size(); ++u) {
      if (std::abs(block[u]) < zero_threshold) continue;
      terms.emplace_hint(terms.end(), word_at(n_strands, d, u), block[u]);
    }
  }
  return HorizontalSeries(n_strands, max_degree, std::move(terms), skeleton, zero_threshold);
}

void validate_degree(int max_degree) {
  if (max_degree < 0) throw ValidationError("max degree must be non-negative");
}

}  // namespace

ConnectionSample omega_at(const ConfigLoop& loop, double t) {
  return {loop.n_strands(), connection(loop.sample(t), loop.n_strands(), t)};
}

TransportResult transport(const ConfigLoop& loop, int max_degree, int steps, double zero_threshold) {
  validate_degree(max_degree);
  if (steps < 1) throw ValidationError("transport needs at least one step per segment");
  const int n = loop.n_strands();
  if (loop.segments().empty()) {
    return {HorizontalSeries::identity(n, max_degree, zero_threshold), 0, 0.0};
  }
  const GradedBuffer fine = integrate(loop, max_degree, steps);
  double estimate = std::numeric_limits<double>::infinity();
  if (steps >= 2) {
    const GradedBuffer coarse = integrate(loop, max_degree, steps / 2);
    double worst = 0.0;
    for (std::size_t d = 0; d < fine.blocks().size(); ++d) {
      for (std::size_t k = 0; k < fine.blocks()[d].size(); ++k) {
        worst = std::max(worst, std::abs(fine.blocks()[d][k] - coarse.blocks()[d][k]));
      }
    }
    estimate = worst / 15.0;
  }
  return {to_series(fine, n, max_degree, loop.permutation(), zero_threshold),
          steps * static_cast<int>(loop.segments().size()), estimate};
}

HorizontalSeries abelian_holonomy(const ConfigLoop& loop, int max_degree, double zero_threshold) {
  validate_degree(max_degree);
  using Rule = boost::math::quadrature::gauss<double, 20>;
  constexpr int kPanels = 16;
  const int n = loop.n_strands();
  const auto pairs = static_cast<std::size_t>(pair_count(n));
  std::vector<Coefficient> v(pairs);

  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  for (std::size_t s = 0; s < loop.segments().size(); ++s) {
    const auto& seg = loop.segments()[s];
    const double duration = seg.t_end - seg.t_begin;
    for (int panel = 0; panel < kPanels; ++panel) {
      const double half = 0.5 / kPanels;
      const double mid = (panel + 0.5) / kPanels;
      for (std::size_t q = 0; q < nodes.size(); ++q) {
        for (double sign : {-1.0, 1.0}) {
          if (nodes[q] == 0.0 && sign < 0) continue;
          const double local = mid + sign * nodes[q] * half;
          const auto w = connection(loop.sample_segment(s, local), n, seg.t_begin + local * duration);
          for (std::size_t p = 0; p < pairs; ++p) v[p] += weights[q] * half * duration * w[p];
        }
      }
    }
  }

  GradedBuffer buffer = GradedBuffer::identity(static_cast<int>(pairs), max_degree);
  for (int d = 1; d <= max_degree; ++d) {
    auto& block = buffer.blocks()[static_cast<std::size_t>(d)];
    const auto& lower = buffer.blocks()[static_cast<std::size_t>(d - 1)];
    // prod v / d! built incrementally: (prod over lower word) * v[c] / d.
    for (std::size_t u = 0; u < lower.size(); ++u) {
      for (std::size_t c = 0; c < pairs; ++c) block[u * pairs + c] = lower[u] * v[c] / static_cast<double>(d);
    }
  }
  return to_series(buffer, n, max_degree, loop.permutation(), zero_threshold);
}

HorizontalSeries symmetrize(const HorizontalSeries& series) {
  HorizontalSeries::Terms out;
  for (const auto& [w, c] : series.terms()) {
    const int m = w.degree();
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    double count = 1.0;
    for (int k = 2; k <= m; ++k) count *= k;
    do {
      HorizontalWord permuted(w.n_strands);
      for (int k : order) permuted.chords.push_back(w.chords[static_cast<std::size_t>(k)]);
      out[permuted] += c / count;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return HorizontalSeries(series.n_strands(), series.max_degree(), std::move(out), series.skeleton(),
                          series.zero_threshold());
}

Coefficient simplex_oracle(const ConfigLoop& loop, const HorizontalWord& word, int grid) {
  if (word.n_strands != loop.n_strands()) throw ValidationError("word and loop have different strand counts");
  if (word.degree() > 3) {
    throw ValidationError("simplex_oracle supports degree <= 3; degree " + std::to_string(word.degree()) +
                          " would cost grid^" + std::to_string(word.degree()) + " evaluations");
  }
  if (grid < 16) throw ValidationError("simplex_oracle needs grid >= 16");
  const int m = word.degree();
  if (m == 0) return 1.0;

  const double h = 1.0 / grid;
  const auto cells = static_cast<std::size_t>(grid);
  std::vector<std::vector<Coefficient>> f(static_cast<std::size_t>(m), std::vector<Coefficient>(cells));
  for (std::size_t a = 0; a < cells; ++a) {
    const auto omega = omega_at(loop, (static_cast<double>(a) + 0.5) * h);
    for (int k = 0; k < m; ++k) f[static_cast<std::size_t>(k)][a] = omega.at(word.chords[static_cast<std::size_t>(k)]);
  }

  Coefficient sum;
  if (m == 1) {
    for (std::size_t a = 0; a < cells; ++a) sum += f[0][a];
    return sum * h;
  }
  if (m == 2) {
    for (std::size_t a = 0; a < cells; ++a) {
      for (std::size_t b = a; b < cells; ++b) {
        const double weight = a == b ? 0.5 : 1.0;
        sum += weight * f[0][a] * f[1][b];
      }
    }
    return sum * h * h;
  }
  for (std::size_t a = 0; a < cells; ++a) {
    for (std::size_t b = a; b < cells; ++b) {
      const Coefficient fab = f[0][a] * f[1][b];
      for (std::size_t c = b; c < cells; ++c) {
        double weight = 1.0;
        if (a == b && b == c) {
          weight = 1.0 / 6.0;
        } else if (a == b || b == c) {
          weight = 0.5;
        }
        sum += weight * fab * f[2][c];
      }
    }
  }
  return sum * h * h * h;
}

HorizontalSeries kontsevich_of_braid(const BraidWord& word, int max_degree, int steps, double zero_threshold) {
  return transport(realize(word), max_degree, steps, zero_threshold).series;
}

}  // namespace kzi
