#include <doctest.h>

#include <cmath>

#include "kzi/closure.hpp"
#include "kzi/error.hpp"
#include "kzi/transport.hpp"
#include "support.hpp"

using namespace kzi;
using kzi::test::braid;
using kzi::test::word;

namespace {

// Sum of crossing signs between strands of two components, halved. Follows
// positions through the letters from the bottom of the braid up.
double crossing_linking_number(const BraidWord& w, const LinkSkeleton& skeleton, int a, int b) {
  std::vector<int> at(static_cast<std::size_t>(w.n_strands()));
  for (int k = 0; k < w.n_strands(); ++k) at[static_cast<std::size_t>(k)] = k + 1;
  int signed_crossings = 0;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    auto& left = at[static_cast<std::size_t>(it->index - 1)];
    auto& right = at[static_cast<std::size_t>(it->index)];
    const int ca = skeleton.component_of(left);
    const int cb = skeleton.component_of(right);
    if ((ca == a && cb == b) || (ca == b && cb == a)) signed_crossings += it->sign;
    std::swap(left, right);
  }
  return signed_crossings / 2.0;
}

CircleDiagram linking_chord(int components, int a, int b) {
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(components));
  slots[static_cast<std::size_t>(a)] = {0};
  slots[static_cast<std::size_t>(b)] = {0};
  return CircleDiagram(components, slots);
}

}  // namespace

TEST_CASE("closure components") {
  CHECK(closure_skeleton(braid("1 1", 2)).n_components() == 2);
  CHECK(closure_skeleton(braid("1", 2)).n_components() == 1);
  CHECK(closure_skeleton(braid("1 2", 3)).n_components() == 1);

  const auto s = closure_skeleton(braid("1 2", 3));
  CHECK(s.components == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(s.component_of(3) == 0);
  CHECK_THROWS_AS(s.component_of(4), ValidationError);

  std::uniform_int_distribution<int> strands(2, 5);
  std::uniform_int_distribution<int> length(0, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = kzi::test::random_braid(strands(kzi::test::rng()), length(kzi::test::rng()));
    CHECK(closure_skeleton(w).n_components() == static_cast<int>(permutation_of(w).cycles().size()));
  }
}

TEST_CASE("moduli map") {
  SUBCASE("Hopf link chords join the two circles") {
    const auto w = braid("1 1", 2);
    const HorizontalSeries s(2, 2, {{word(2, {{1, 2}}), 1.0}, {word(2, {{1, 2}, {1, 2}}), 2.0}}, Permutation(2));
    const auto c = tau_project(s, w);
    CHECK(c.coefficient(CircleDiagram(2, {{0}, {0}})) == Coefficient(1.0));
    CHECK(c.coefficient(CircleDiagram(2, {{0, 1}, {0, 1}})) == Coefficient(2.0));
    CHECK(c.terms().size() == 2);
  }

  SUBCASE("a single crossing closes to an isolated chord") {
    const auto w = braid("1", 2);
    const HorizontalSeries s(2, 1, {{word(2, {{1, 2}}), 1.0}}, Permutation::transposition(2, 1));
    const auto c = tau_project(s, w);
    const CircleDiagram d(1, {{0, 0}});
    CHECK(d.has_isolated_chord());
    CHECK(c.coefficient(d) == Coefficient(1.0));
  }

  SUBCASE("feet follow the traversal and the heights") {
    // one component 1 -> 2 -> 3: chord (1,3) low, (1,2) high
    const auto w = braid("1 2", 3);
    const auto pi = permutation_of(w);
    const HorizontalSeries s(3, 2, {{word(3, {{1, 3}, {1, 2}}), 1.0}}, pi);
    const auto c = tau_project(s, w);
    // strand 1 carries feet a (low) b (high), strand 2 carries b, strand 3 carries a
    CHECK(c.coefficient(CircleDiagram(1, {{0, 1, 1, 0}})) == Coefficient(1.0));
  }

  SUBCASE("linear and degree preserving") {
    const auto w = braid("1 -2 1 2", 3);
    const auto pi = permutation_of(w);
    const auto a = kzi::test::random_series(3, 3).with_skeleton(pi);
    const auto b = kzi::test::random_series(3, 3).with_skeleton(pi);
    const Coefficient lambda(0.3, -1.7);
    const auto lhs = tau_project(a + lambda * b, w);
    const auto ta = tau_project(a, w);
    const auto tb = tau_project(b, w);
    double worst = 0.0;
    for (const auto& [d, v] : lhs.terms()) worst = std::max(worst, std::abs(v - ta.coefficient(d) - lambda * tb.coefficient(d)));
    for (const auto& [d, v] : ta.terms()) worst = std::max(worst, std::abs(lhs.coefficient(d) - v - lambda * tb.coefficient(d)));
    CHECK(worst < 1e-14);

    for (int m = 0; m <= 3; ++m) {
      for (const auto& hw : enumerate_words(3, m)) {
        const auto image = tau_project(HorizontalSeries(3, 3, {{hw, 1.0}}, pi), w);
        for (const auto& [d, v] : image.terms()) CHECK(d.degree() == m);
      }
    }
  }

  CHECK_THROWS_AS(tau_project(HorizontalSeries::identity(2, 1), braid("1", 2)), ValidationError);
}

TEST_CASE("closures of simple braids") {
  SUBCASE("trivial braid") {
    const auto r = kontsevich_link(braid("", 2), 3);
    CHECK(r.skeleton.n_components() == 2);
    for (const auto& block : r.reduced.blocks) {
      for (std::size_t k = 0; k < block.coefficients.size(); ++k) {
        if (block.degree > 0) CHECK(std::abs(block.coefficients[k]) < 1e-12);
      }
    }
  }

  SUBCASE("Hopf link") {
    const auto r = kontsevich_link(braid("1 1", 2), 2);
    CHECK(std::abs(r.reduced.coefficient(linking_chord(2, 0, 1)) - 1.0) < 1e-6);
  }

  SUBCASE("unknot from one crossing") {
    const auto r = kontsevich_link(braid("1", 2), 2);
    REQUIRE(r.reduced.blocks.size() == 3);
    CHECK(r.reduced.blocks[1].basis.empty());
    CHECK(r.reduced.blocks[1].coefficients.empty());
  }
}

TEST_CASE("degree-one coefficients are linking numbers") {
  std::uniform_int_distribution<int> strands(2, 4);
  std::uniform_int_distribution<int> length(1, 6);
  int with_links = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = kzi::test::random_braid(strands(kzi::test::rng()), length(kzi::test::rng()));
    const auto r = kontsevich_link(w, 1, 128);
    const int q = r.skeleton.n_components();
    for (int a = 0; a < q; ++a) {
      for (int b = a + 1; b < q; ++b) {
        const double expected = crossing_linking_number(w, r.skeleton, a, b);
        if (expected != 0.0) ++with_links;
        CAPTURE(a);
        CAPTURE(b);
        CHECK(std::abs(r.reduced.coefficient(linking_chord(q, a, b)) - expected) < 1e-6);
      }
    }
  }
  MESSAGE("pairs with nonzero linking: " << with_links);
}
