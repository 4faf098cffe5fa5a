#pragma once

#include <initializer_list>
#include <vector>

#include "omega_lift/rootsys.hpp"
#include "omega_lift/weyl.hpp"

namespace testing_support {

using namespace omega_lift;

inline Rational Q(long p, long q = 1)
{
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Vec V(std::initializer_list<Rational> xs) { return Vec(xs); }

inline RootSystemPtr RS(Family f, int l) { return RootSystem::build({f, l}); }

/// sum_j c_j v_j over the simple roots (or coroots when coroots = true).
inline Vec simple_combination(const RootSystemPtr& rs, const std::vector<Rational>& c, bool coroots = false)
{
  Vec s = zero_vec(rs->dim());
  for (int j = 1; j <= rs->rank(); ++j)
    s += c.at(static_cast<std::size_t>(j - 1)) * (coroots ? rs->simple_coroot(j) : rs->simple_root(j));
  return s;
}

/// Fraction-free determinant of a square integer matrix.
inline Integer determinant(std::vector<std::vector<Integer>> m)
{
  const std::size_t n = m.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? Integer(1) : sign * m[n - 1][n - 1];
}

/// Cartan matrix <alpha_i, alpha_j^vee> computed straight from the simple roots.
inline std::vector<std::vector<Integer>> cartan_matrix(const RootSystemPtr& rs)
{
  const auto l = static_cast<std::size_t>(rs->rank());
  std::vector<std::vector<Integer>> c(l, std::vector<Integer>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const Vec& a = rs->simple_root(static_cast<int>(i + 1));
      const Vec& b = rs->simple_root(static_cast<int>(j + 1));
      const Rational q = 2 * dot(a, b) / dot(b, b);
      c[i][j] = q.get_num();
    }
  return c;
}

inline std::vector<CartanType> small_types()
{
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5}, {Family::B, 2}, {Family::B, 4},
          {Family::C, 3}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8},
          {Family::F, 4}, {Family::G, 2}};
}

}  // namespace testing_support
