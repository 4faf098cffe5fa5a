#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "omega_lift/weyl.hpp"
#include "support.hpp"

using namespace omega_lift;
using namespace testing_support;

namespace {

std::size_t group_order_by_closure(const RootSystemPtr& rs)
{
  std::set<WeylElement> seen{WeylElement::identity(rs)};
  std::vector<WeylElement> frontier{WeylElement::identity(rs)};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= rs->rank(); ++i) {
        auto v = w * WeylElement::simple_reflection(rs, i);
        if (seen.insert(v).second)
          next.push_back(v);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// m_ij from the product of Cartan entries.
int coxeter_exponent(long product)
{
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("Weyl group orders by closure")
{
  const std::vector<std::pair<CartanType, std::size_t>> cases = {
      {{Family::A, 1}, 2},  {{Family::A, 3}, 24}, {{Family::B, 3}, 48},
      {{Family::C, 2}, 8},  {{Family::D, 4}, 192}, {{Family::G, 2}, 12}};
  for (const auto& [t, n] : cases) {
    CAPTURE(t.name());
    CHECK(group_order_by_closure(RootSystem::build(t)) == n);
  }
}

TEST_CASE("Coxeter relations")
{
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    const auto c = cartan_matrix(rs);
    for (int i = 1; i <= rs->rank(); ++i)
      for (int j = 1; j <= rs->rank(); ++j) {
        const auto si = WeylElement::simple_reflection(rs, i), sj = WeylElement::simple_reflection(rs, j);
        const auto ui = static_cast<std::size_t>(i - 1), uj = static_cast<std::size_t>(j - 1);
        const Integer prod = c[ui][uj] * c[uj][ui];
        const int m = i == j ? 1 : coxeter_exponent(prod.get_si());
        CHECK((si * sj).order() == m);
      }
  }
}

TEST_CASE("linear action agrees with the root permutation")
{
  std::mt19937_64 rng(11);
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = random_element(rs, rng), v = random_element(rs, rng);
      for (std::size_t k = 0; k < rs->num_roots(); k += 3)
        CHECK(u.apply(rs->root(k)) == rs->root(u.apply_root(k)));
      const Vec x = rs->coweight(1) + Rational(3) * rs->coweight(rs->rank());
      CHECK((u * v).apply(x) == u.apply(v.apply(x)));
      // the action is orthogonal
      CHECK(dot(u.apply(x), u.apply(x)) == dot(x, x));
      // coordinates beyond the root space are fixed
      Vec y = resize_vec(x, rs->dim() + 2);
      y[rs->dim()] = 5;
      y[rs->dim() + 1] = Q(-1, 3);
      const Vec uy = u.apply(y);
      CHECK(uy[rs->dim()] == 5);
      CHECK(uy[rs->dim() + 1] == Q(-1, 3));
    }
  }
}

TEST_CASE("length, reduced words and inverses")
{
  std::mt19937_64 rng(12);
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    for (int trial = 0; trial < 10; ++trial) {
      const auto w = random_element(rs, rng);
      const auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(static_cast<std::size_t>(w.length()) == w.inversion_set().size());
      CHECK(WeylElement::from_word(rs, word) == w);
      CHECK((w * w.inverse()).is_identity());
      CHECK(w.pow(-1) == w.inverse());
      CHECK(w.pow(w.order()).is_identity());
      CHECK(w.inverse().length() == w.length());
      for (int n = 1; n < w.order(); ++n)
        CHECK_FALSE(w.pow(n).is_identity());
      // the last letter is the smallest right descent
      if (!word.empty()) {
        int smallest = 0;
        for (int i = 1; i <= rs->rank() && smallest == 0; ++i)
          if (!rs->is_positive(w.apply_root(rs->simple_index(i))))
            smallest = i;
        CHECK(word.back() == smallest);
      }
    }
  }
}

TEST_CASE("longest elements")
{
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    const auto w0 = longest_element(rs);
    CHECK(static_cast<std::size_t>(w0.length()) == rs->num_positive());
    CHECK(w0.order() == 2);
    for (std::size_t k = 0; k < rs->num_positive(); ++k)
      CHECK_FALSE(rs->is_positive(w0.apply_root(k)));
  }
  // W_{1,2} of B3 is the dihedral group of order 8: longest element has length 4
  const auto b3 = RS(Family::B, 3);
  CHECK(longest_element(b3, {2, 3}).length() == 4);
  CHECK(longest_element(b3, {1, 2}).length() == 3);
  CHECK(longest_element(b3, {}).is_identity());
  // -1 is in W exactly outside A_l (l > 1), D_l (l odd) and E6
  for (const auto& t : small_types()) {
    const auto rs = RootSystem::build(t);
    // a vector with trivial stabilizer under diagram symmetries
    Vec x = zero_vec(rs->dim());
    for (int i = 1; i <= rs->rank(); ++i)
      x += Rational(i) * rs->coweight(i);
    const bool minus_one = longest_element(rs).apply(x) == -x;
    const bool expected = !((t.family == Family::A && t.rank > 1) || (t.family == Family::D && t.rank % 2 == 1) ||
                            (t.family == Family::E && t.rank == 6));
    CAPTURE(t.name());
    CHECK(minus_one == expected);
  }
}

TEST_CASE("Weyl parts of alcove stabilizers permute the extended simple roots")
{
  for (const auto& t : small_types()) {
    const auto rs = RootSystem::build(t);
    std::vector<std::size_t> ext;
    for (int j = 1; j <= rs->rank(); ++j)
      ext.push_back(rs->simple_index(j));
    ext.push_back(rs->negate_index(rs->highest_index()));
    std::sort(ext.begin(), ext.end());
    for (int i : rs->minuscule()) {
      CAPTURE(t.name());
      CAPTURE(i);
      const auto w = omega_weyl_part(rs, i);
      std::vector<std::size_t> img;
      for (auto k : ext)
        img.push_back(w.apply_root(k));
      std::sort(img.begin(), img.end());
      CHECK(img == ext);
      // -alpha_0 is sent to alpha_i
      CHECK(w.apply_root(rs->negate_index(rs->highest_index())) == rs->simple_index(i));
    }
  }
  // A_l: w_1 is a Coxeter-type (l+1)-cycle and w_a = w_1^a
  for (int l = 1; l <= 6; ++l) {
    const auto rs = RS(Family::A, l);
    const auto w1 = omega_weyl_part(rs, 1);
    CHECK(w1.order() == l + 1);
    for (int a = 2; a <= l; ++a)
      CHECK(omega_weyl_part(rs, a) == w1.pow(a));
  }
  // D_l, l odd: w_l has order 4; l even: every w_i is an involution
  for (int l = 4; l <= 8; ++l) {
    const auto rs = RS(Family::D, l);
    CHECK(omega_weyl_part(rs, l).order() == (l % 2 == 1 ? 4 : 2));
    if (l % 2 == 0)
      CHECK(omega_weyl_part(rs, l - 1) == omega_weyl_part(rs, l) * omega_weyl_part(rs, 1));
  }
}

TEST_CASE("F-sets measure the failure of length additivity")
{
  std::mt19937_64 rng(13);
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_element(rs, rng), v = random_element(rs, rng);
      const auto f = f_set(u, v);
      CHECK((u * v).length() == u.length() + v.length() - 2 * static_cast<int>(f.size()));
      for (auto k : f) {
        CHECK(rs->is_positive(k));
        CHECK_FALSE(rs->is_positive(v.apply_root(k)));
        CHECK(rs->is_positive((u * v).apply_root(k)));
      }
      CHECK(f_w_set(u, 1) == f_set(u, u));
      CHECK(f_w_set(u, 3) == f_set(u, u.pow(3)));
    }
    // reduced products have empty F-set
    const auto w0 = longest_element(rs);
    CHECK(f_set(w0, WeylElement::identity(rs)).empty());
    CHECK(f_set(w0, w0).size() == rs->num_positive());
  }
}

TEST_CASE("portable draws")
{
  std::mt19937_64 a(5), b(5);
  std::map<std::size_t, int> counts;
  for (int k = 0; k < 6000; ++k) {
    const auto x = draw_below(a, 6);
    CHECK(x == draw_below(b, 6));
    ++counts[x];
  }
  CHECK(counts.size() == 6);
  for (const auto& [v, c] : counts)
    CHECK(c > 800);
  CHECK(draw_below(a, 1) == 0);
  CHECK_THROWS_AS(draw_below(a, 0), std::invalid_argument);

  const auto rs = RS(Family::E, 6);
  std::mt19937_64 r1(77), r2(77);
  CHECK(random_element(rs, r1) == random_element(rs, r2));
}
