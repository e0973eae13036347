#include "kzi/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "kzi/braid.hpp"
#include "kzi/error.hpp"
#include "kzi/relations.hpp"

namespace kzi {
namespace {

HorizontalSeries z_of(std::string_view word, int n, int max_degree, int steps) {
  return kontsevich_of_braid(parse_braid_word(word, n), max_degree, steps);
}

CheckReport reduced_equality(std::string name, std::string_view lhs, std::string_view rhs, int n, int max_degree,
                             int steps) {
  const auto a = reduce(z_of(lhs, n, max_degree, steps));
  const auto b = reduce(z_of(rhs, n, max_degree, steps));
  return {std::move(name),
          {{"reduce Z(" + std::string(lhs) + ") - reduce Z(" + std::string(rhs) + ")", max_abs_difference(a, b), 1e-6}}};
}

CheckReport oracle_check(int max_degree, int steps) {
  CheckReport report{"oracle", {}};
  const int n = 3;
  for (const char* text : {"1", "1 1", "1 2"}) {
    const auto loop = realize(parse_braid_word(text, n));
    const int top = std::min(max_degree, 3);
    const auto z = transport(loop, top, steps).series;
    double low = 0.0;
    double cubic = 0.0;
    for (int m = 1; m <= top; ++m) {
      const int grid = m <= 2 ? 512 : 128;
      for (const auto& w : enumerate_words(n, m)) {
        double& worst = m <= 2 ? low : cubic;
        worst = std::max(worst, std::abs(z.coefficient(w) - simplex_oracle(loop, w, grid)));
      }
    }
    report.lines.push_back({std::string("degree<=2 words on ") + text + " (grid 512)", low, 1e-5});
    if (top >= 3) report.lines.push_back({std::string("degree 3 words on ") + text + " (grid 128)", cubic, 1e-3});
  }
  return report;
}

CheckReport multiplicativity_check(int max_degree, int steps) {
  CheckReport report{"multiplicativity", {}};
  const int n = 3;
  const std::vector<std::string> letters{"1", "2", "-1"};
  for (const auto& upper : letters) {
    for (const auto& lower : letters) {
      const auto product = series_product(z_of(upper, n, max_degree, steps), z_of(lower, n, max_degree, steps));
      const auto whole = z_of(upper + " " + lower, n, max_degree, steps);
      report.lines.push_back({"Z(" + upper + ")*Z(" + lower + ") - Z(" + upper + " " + lower + ")",
                              max_abs_difference(product, whole), 1e-8});
    }
  }
  return report;
}

CheckReport abelian_check(int max_degree, int steps) {
  CheckReport report{"abelian", {}};
  for (const char* text : {"1 2", "1 1 -2"}) {
    const auto loop = realize(parse_braid_word(text, 3));
    const auto sym = symmetrize(transport(loop, max_degree, steps).series);
    report.lines.push_back({std::string("symmetrized Z(") + text + ") - exp(int omega)",
                            max_abs_difference(sym, abelian_holonomy(loop, max_degree)), 1e-7});
  }
  return report;
}

CheckReport reparam_check(int max_degree, int steps) {
  CheckReport report{"reparam", {}};
  for (const char* text : {"1 2", "1 2 1", "1 -2 1 2"}) {
    const auto word = parse_braid_word(text, 3);
    std::vector<double> weights(word.letters().size());
    for (std::size_t k = 0; k < weights.size(); ++k) weights[k] = k % 2 == 0 ? 2.0 : 1.0;
    const auto even = transport(realize(word), max_degree, steps).series;
    const auto skewed = transport(realize(word, weights), max_degree, steps).series;
    report.lines.push_back({std::string("2:1 durations on ") + text, max_abs_difference(even, skewed), 1e-7});
  }
  return report;
}

}  // namespace

bool CheckReport::passed() const noexcept {
  return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed(); });
}

double CheckReport::max_residual() const noexcept {
  double worst = 0.0;
  for (const auto& l : lines) {
    if (std::isnan(l.residual)) return l.residual;
    worst = std::max(worst, l.residual);
  }
  return worst;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"braid-relation", "far-commutation", "oracle",
                                              "multiplicativity", "abelian",        "reparam"};
  return names;
}

CheckReport run_check(std::string_view name, int max_degree, int steps) {
  if (max_degree < 0) throw ValidationError("max degree must be non-negative");
  if (name == "braid-relation") return reduced_equality("braid-relation", "1 2 1", "2 1 2", 3, max_degree, steps);
  if (name == "far-commutation") return reduced_equality("far-commutation", "1 3", "3 1", 4, max_degree, steps);
  if (name == "oracle") return oracle_check(max_degree, steps);
  if (name == "multiplicativity") return multiplicativity_check(max_degree, steps);
  if (name == "abelian") return abelian_check(max_degree, steps);
  if (name == "reparam") return reparam_check(max_degree, steps);
  throw ValidationError("unknown check: '" + std::string(name) + "'");
}

}  // namespace kzi
