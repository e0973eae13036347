#include <doctest.h>

#include <cmath>
#include <limits>

#include "kzi/error.hpp"
#include "kzi/loop.hpp"
#include "kzi/relations.hpp"
#include "kzi/transport.hpp"
#include "support.hpp"

using namespace kzi;
using kzi::test::braid;
using kzi::test::word;

namespace {

double factorial(int m) { return m <= 1 ? 1.0 : m * factorial(m - 1); }

HorizontalWord power(int n, ChordPair p, int m) { return word(n, std::vector<ChordPair>(static_cast<std::size_t>(m), p)); }

}  // namespace

TEST_CASE("connection samples") {
  const auto still = omega_at(realize(braid("", 3)), 0.4);
  for (const auto& c : still.coefficients) CHECK(c == Coefficient(0.0));

  for (double t : {0.0, 0.25, 0.5, 0.99}) {
    CHECK(std::abs(omega_at(realize(braid("1", 2)), t).at({1, 2}) - 0.5) < 1e-14);
    CHECK(std::abs(omega_at(realize(braid("-1", 2)), t).at({1, 2}) + 0.5) < 1e-14);
  }
  // a pure two-letter loop divides time in half, doubling the rate
  CHECK(std::abs(omega_at(realize(braid("1 1", 2)), 0.3).at({1, 2}) - 1.0) < 1e-14);
}

TEST_CASE("transport of simple braids") {
  SUBCASE("identity") {
    for (int n = 2; n <= 4; ++n) {
      const auto z = kontsevich_of_braid(braid("", n), 4);
      CHECK(z.coefficient(word(n, {})) == Coefficient(1.0));
      CHECK(z.terms().size() == 1);
    }
  }

  SUBCASE("ordered exponential of a constant") {
    const auto z = kontsevich_of_braid(braid("1", 2), 5);
    for (int m = 0; m <= 5; ++m) {
      CHECK(std::abs(z.coefficient(power(2, {1, 2}, m)) - std::pow(0.5, m) / factorial(m)) < 1e-14);
    }
    CHECK(z.skeleton() == Permutation::transposition(2, 1));
  }

  SUBCASE("full twist winds once") {
    CHECK(std::abs(kontsevich_of_braid(braid("1 1", 2), 1).coefficient(word(2, {{1, 2}})) - 1.0) < 1e-12);
    CHECK(std::abs(kontsevich_of_braid(braid("-1", 2), 1).coefficient(word(2, {{1, 2}})) + 0.5) < 1e-12);
  }

  SUBCASE("retraced loops cancel") {
    const auto z = kontsevich_of_braid(braid("1 -1", 2), 4);
    CHECK(max_abs_difference(z, HorizontalSeries::identity(2, 4)) < 1e-9);
    for (int k = 1; k <= 3; ++k) {
      const auto back = BraidWord(4, {{k, 1}, {k, -1}});
      const auto zk = kontsevich_of_braid(back, 1);
      for (const auto& w : enumerate_words(4, 1)) CHECK(std::abs(zk.coefficient(w)) < 1e-9);
    }
  }

  SUBCASE("empty-word coefficient is exactly one") {
    for (int trial = 0; trial < 5; ++trial) {
      const auto z = kontsevich_of_braid(kzi::test::random_braid(4, 4), 2, 64);
      CHECK(z.coefficient(word(4, {})) == Coefficient(1.0));
    }
  }

  CHECK_THROWS_AS(transport(realize(braid("1", 2)), 2, 0), ValidationError);
  CHECK_THROWS_AS(transport(realize(braid("1", 2)), -1, 8), ValidationError);
}

TEST_CASE("step-doubling error estimate") {
  const auto loop = realize(braid("1 2", 3));
  const auto coarse = transport(loop, 3, 32);
  const auto fine = transport(loop, 3, 64);
  CHECK(coarse.steps_used == 64);  // two letters
  const double ratio = coarse.richardson_error_estimate / fine.richardson_error_estimate;
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);

  CHECK(transport(loop, 2, 1).richardson_error_estimate == std::numeric_limits<double>::infinity());
  CHECK(transport(realize(braid("", 3)), 2, 8).richardson_error_estimate == 0.0);
}

TEST_CASE("abelian holonomy and symmetrization") {
  SUBCASE("single chord is already commutative") {
    const auto loop = realize(braid("1", 2));
    CHECK(max_abs_difference(abelian_holonomy(loop, 4), transport(loop, 4).series) < 1e-13);
    CHECK(max_abs_difference(abelian_holonomy(realize(braid("", 3)), 3), HorizontalSeries::identity(3, 3)) == 0.0);
  }

  SUBCASE("symmetrized transport") {
    for (const char* text : {"1 2", "1 1 -2", "-2 1 2 1"}) {
      const auto loop = realize(braid(text, 3));
      CHECK(max_abs_difference(symmetrize(transport(loop, 3).series), abelian_holonomy(loop, 3)) < 1e-7);
    }
  }

  SUBCASE("symmetrize averages orderings") {
    const HorizontalSeries s(3, 2, {{word(3, {{1, 2}, {2, 3}}), 1.0}}, Permutation(3));
    const auto sym = symmetrize(s);
    CHECK(sym.coefficient(word(3, {{1, 2}, {2, 3}})) == Coefficient(0.5));
    CHECK(sym.coefficient(word(3, {{2, 3}, {1, 2}})) == Coefficient(0.5));
  }
}

TEST_CASE("iterated-integral oracle") {
  const auto loop = realize(braid("1", 2));
  CHECK(simplex_oracle(loop, word(2, {}), 16) == Coefficient(1.0));
  CHECK(std::abs(simplex_oracle(loop, word(2, {{1, 2}}), 512) - 0.5) < 1e-6);
  CHECK(std::abs(simplex_oracle(loop, power(2, {1, 2}, 2), 512) - 0.125) < 1e-5);
  CHECK(std::abs(simplex_oracle(loop, power(2, {1, 2}, 3), 128) - 0.125 / 6.0) < 1e-3);

  const auto twisted = realize(braid("1 2", 3));
  const auto z = transport(twisted, 2).series;
  for (int m = 1; m <= 2; ++m) {
    for (const auto& w : enumerate_words(3, m)) CHECK(std::abs(simplex_oracle(twisted, w, 512) - z.coefficient(w)) < 1e-5);
  }

  CHECK_THROWS_AS(simplex_oracle(loop, power(2, {1, 2}, 4), 16), ValidationError);
  CHECK_THROWS_AS(simplex_oracle(loop, word(2, {{1, 2}}), 4), ValidationError);
  CHECK_THROWS_AS(simplex_oracle(loop, word(3, {{1, 2}}), 16), ValidationError);
}

TEST_CASE("braid group relations hold in the quotient") {
  const auto lhs = reduce(kontsevich_of_braid(braid("1 2 1", 3), 3));
  const auto rhs = reduce(kontsevich_of_braid(braid("2 1 2", 3), 3));
  CHECK(max_abs_difference(lhs, rhs) < 1e-6);
  // and fail to hold before quotienting
  CHECK(max_abs_difference(kontsevich_of_braid(braid("1 2 1", 3), 2), kontsevich_of_braid(braid("2 1 2", 3), 2)) >
        1e-3);

  const auto far = reduce(kontsevich_of_braid(braid("1 3", 4), 3));
  const auto far_swapped = reduce(kontsevich_of_braid(braid("3 1", 4), 3));
  CHECK(max_abs_difference(far, far_swapped) < 1e-6);
}

TEST_CASE("multiplicativity and reparametrization") {
  const auto a = braid("1 -2", 3);
  const auto b = braid("2 2 1", 3);
  const auto product = series_product(kontsevich_of_braid(a, 3), kontsevich_of_braid(b, 3));
  const auto whole = kontsevich_of_braid(a * b, 3);
  CHECK(product.skeleton() == whole.skeleton());
  CHECK(max_abs_difference(product, whole) < 1e-8);

  const std::vector<double> weights{1.0, 3.0, 0.5};
  const auto w = braid("1 -2 1", 3);
  CHECK(max_abs_difference(transport(realize(w, weights), 3).series, kontsevich_of_braid(w, 3)) < 1e-7);
}
