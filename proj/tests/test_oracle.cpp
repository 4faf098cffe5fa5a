#include "doctest.h"
#include "omega_lift/tits_oracle.hpp"
#include "support.hpp"

using namespace omega_lift;
using namespace testing_support;

namespace {

Laurent mono(int e, long c) { return Laurent{{e, Integer(c)}}; }

LaurentMatrix matrix_power(const LaurentMatrix& m, int n)
{
  auto acc = LaurentMatrix::identity(m.size());
  for (int k = 0; k < n; ++k)
    acc = acc * m;
  return acc;
}

}  // namespace

TEST_CASE("Laurent arithmetic")
{
  Laurent a = mono(1, 2);
  a += mono(-1, 1);
  const Laurent b = mono(1, 1);
  const Laurent ab = a * b;
  CHECK(ab == Laurent{{0, Integer(1)}, {2, Integer(2)}});
  Laurent z = mono(3, 1);
  z += mono(3, -1);
  CHECK(z.empty());
}

TEST_CASE("n_alpha is a signed transposition")
{
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j)
          continue;
        const auto m = oracle_nalpha(n, unit_vec(n, i) - unit_vec(n, j));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            Laurent expect;
            if (r == i && c == j)
              expect = mono(0, 1);
            else if (r == j && c == i)
              expect = mono(0, -1);
            else if (r == c && r != i && r != j)
              expect = mono(0, 1);
            CHECK(m.at(r, c) == expect);
          }
        CHECK((m * m).at(i, i) == mono(0, -1));
      }
  CHECK_THROWS_AS(oracle_nalpha(3, V({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("word lifts do not depend on the reduced word")
{
  std::mt19937_64 rng(41);
  for (int l = 2; l <= 5; ++l) {
    const auto rs = RS(Family::A, l);
    for (int trial = 0; trial < 20; ++trial) {
      const auto w = random_element(rs, rng);
      auto word = w.inverse().reduced_word();
      std::reverse(word.begin(), word.end());
      REQUIRE(WeylElement::from_word(rs, word) == w);
      CHECK(oracle_word_lift(rs, word) == oracle_springer_lift(w));
    }
  }
  // braid move s1 s2 s1 = s2 s1 s2
  const auto a2 = RS(Family::A, 2);
  CHECK(oracle_word_lift(a2, {1, 2, 1}) == oracle_word_lift(a2, {2, 1, 2}));
  // non-reduced words differ by torus elements
  CHECK(oracle_word_lift(a2, {1, 1}).is_scalar(1) == false);
}

TEST_CASE("the symbolic normal form matches matrix arithmetic")
{
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 5; ++n) {
    const auto gl = RootDatum::general_linear(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = random_tits_element(gl.lattice, rng), y = random_tits_element(gl.lattice, rng);
      CHECK(oracle_image(x * y) == oracle_image(x) * oracle_image(y));
      CHECK(oracle_image(inverse(x)) * oracle_image(x) == LaurentMatrix::identity(static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("torus and sign images")
{
  const auto t = oracle_torus(V({2, -1, 0}));
  CHECK(t.at(0, 0) == mono(-2, 1));
  CHECK(t.at(1, 1) == mono(1, 1));
  CHECK(t.at(2, 2) == mono(0, 1));
  CHECK(t.at(0, 1).empty());
  const auto s = oracle_sign(V({3, 0, -2}));
  CHECK(s.at(0, 0) == mono(0, -1));
  CHECK(s.at(1, 1) == mono(0, 1));
  CHECK(s.at(2, 2) == mono(0, 1));
}

TEST_CASE("powers of the n-cycle and of the long element")
{
  for (int n = 2; n <= 6; ++n) {
    const auto rs = RS(Family::A, n - 1);
    const auto cycle = omega_weyl_part(rs, 1);
    REQUIRE(cycle.order() == n);
    const auto m = matrix_power(oracle_springer_lift(cycle), n);
    CHECK(m.is_scalar(n % 2 == 0 ? -1 : 1));

    // the long element squares to (-1)^{n-1}; its n-th power is torus-valued only for even n
    const auto w0 = longest_element(rs);
    const auto sq = matrix_power(oracle_springer_lift(w0), 2);
    CHECK(sq.is_scalar(n % 2 == 0 ? -1 : 1));
    if (n % 2 == 1 && n > 1)
      CHECK_FALSE(w0.pow(n).is_identity());
    if (n == 4)
      CHECK(matrix_power(oracle_springer_lift(w0), 4).is_scalar(1));
  }
}

TEST_CASE("non type A input is rejected")
{
  const auto b2 = RS(Family::B, 2);
  CHECK_THROWS_AS(oracle_springer_lift(WeylElement::identity(b2)), std::invalid_argument);
  const auto sl = coroot_lattice(RS(Family::A, 2));
  CHECK_THROWS_AS(oracle_image(TitsElement::identity(sl)), std::invalid_argument);
}
