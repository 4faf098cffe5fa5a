#include <random>

#include "doctest.h"
#include "omega_lift/intmat.hpp"
#include "support.hpp"

using namespace omega_lift;
using namespace omega_lift::intmat;
using testing_support::determinant;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound)
{
  IntMatrix m(rows, IntVec(cols));
  for (auto& r : m)
    for (auto& x : r)
      x = static_cast<long>(draw_below(rng, static_cast<std::size_t>(2 * bound + 1))) - bound;
  return m;
}

}  // namespace

TEST_CASE("smith form: U A V is the diagonal and the transforms are unimodular")
{
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + draw_below(rng, 5), c = 1 + draw_below(rng, 5);
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const SmithForm s = smith(a, c);
    const IntMatrix d = multiply(multiply(s.left, a, c), s.right, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const Integer expect = (i == j && i < s.rank) ? s.diagonal[i] : Integer(0);
        CHECK(d[i][j] == expect);
      }
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      CHECK(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()) != 0);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(multiply(s.right, s.right_inverse, c) == identity(c));
  }
}

TEST_CASE("hermite form depends only on the row lattice")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + draw_below(rng, 4), c = 1 + draw_below(rng, 4);
    const IntMatrix a = random_matrix(rng, r, c, 5);
    // scramble by a random unimodular transform plus an extra redundant row
    IntMatrix b = a;
    for (int step = 0; step < 10; ++step) {
      const std::size_t i = draw_below(rng, r), j = draw_below(rng, r);
      if (i == j)
        continue;
      const long q = static_cast<long>(draw_below(rng, 5)) - 2;
      for (std::size_t k = 0; k < c; ++k)
        b[i][k] += q * b[j][k];
    }
    IntVec extra(c);
    for (std::size_t k = 0; k < c; ++k)
      extra[k] = a[0][k] * 3 - b[r - 1][k];
    b.push_back(extra);
    CHECK(hermite_rows(a, c) == hermite_rows(b, c));

    const IntMatrix h = hermite_rows(a, c);
    std::size_t last_pivot = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::size_t p = 0;
      while (h[i][p] == 0)
        ++p;
      CHECK(h[i][p] > 0);
      if (i > 0)
        CHECK(p > last_pivot);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h[k][p] >= 0);
        CHECK(h[k][p] < h[i][p]);
      }
      last_pivot = p;
    }
  }
}

TEST_CASE("solve_left and left_kernel")
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + draw_below(rng, 4), c = 1 + draw_below(rng, 4);
    const IntMatrix a = random_matrix(rng, r, c, 4);
    IntVec x(r);
    for (auto& v : x)
      v = static_cast<long>(draw_below(rng, 7)) - 3;
    const IntVec b = row_times(x, a, c);
    auto y = solve_left(a, c, b);
    REQUIRE(y.has_value());
    CHECK(row_times(*y, a, c) == b);
    for (const auto& k : left_kernel(a, c))
      CHECK(row_times(k, a, c) == IntVec(c, Integer(0)));
  }
  // 2x = 1 has no integral solution
  CHECK_FALSE(solve_left({{Integer(2)}}, 1, {Integer(1)}).has_value());
  // the kernel of the all-ones column is the sum-zero lattice, rank n - 1
  IntMatrix ones(4, IntVec{Integer(1)});
  CHECK(left_kernel(ones, 1).size() == 3);
}
