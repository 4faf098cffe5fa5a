#include "omega_lift/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace omega_lift::intmat {
namespace {

bool is_zero_row(const IntVec& r)
{
  for (const auto& x : r)
    if (sgn(x) != 0)
      return false;
  return true;
}

void axpy_row(IntVec& target, const Integer& q, const IntVec& src)
{
  if (q == 0)
    return;
  for (std::size_t k = 0; k < target.size(); ++k)
    if (sgn(src[k]) != 0)
      target[k] -= q * src[k];
}

Integer floor_div(const Integer& a, const Integer& b)
{
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix identity(std::size_t n)
{
  IntMatrix m(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols)
{
  IntMatrix c(a.size(), IntVec(b_cols, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b.size())
      throw std::invalid_argument("intmat::multiply: shape mismatch");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0)
        continue;
      for (std::size_t j = 0; j < b_cols; ++j)
        c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntVec row_times(const IntVec& x, const IntMatrix& a, std::size_t cols)
{
  if (x.size() != a.size())
    throw std::invalid_argument("intmat::row_times: shape mismatch");
  IntVec r(cols, Integer(0));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(x[k]) == 0)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      r[j] += x[k] * a[k][j];
  }
  return r;
}

IntMatrix hermite_rows(IntMatrix rows, std::size_t cols)
{
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("hermite_rows: ragged matrix");

  std::size_t p = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && p < rows.size(); ++c) {
    while (true) {
      // smallest nonzero |entry| in column c among rows p..
      std::size_t best = rows.size();
      for (std::size_t i = p; i < rows.size(); ++i)
        if (sgn(rows[i][c]) != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      std::swap(rows[p], rows[best]);
      bool clean = true;
      for (std::size_t i = p + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0)
          continue;
        axpy_row(rows[i], floor_div(rows[i][c], rows[p][c]), rows[p]);
        if (sgn(rows[i][c]) != 0)
          clean = false;
      }
      if (clean) {
        if (sgn(rows[p][c]) < 0)
          for (auto& x : rows[p])
            x = -x;
        pivot_cols.push_back(c);
        ++p;
        break;
      }
    }
  }
  rows.resize(p);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t c = pivot_cols[k];
    for (std::size_t i = 0; i < k; ++i)
      axpy_row(rows[i], floor_div(rows[i][c], rows[k][c]), rows[k]);
  }
  return rows;
}

SmithForm smith(const IntMatrix& a_in, std::size_t cols)
{
  const std::size_t nrows = a_in.size();
  IntMatrix a = a_in;
  for (const auto& r : a)
    if (r.size() != cols)
      throw std::invalid_argument("smith: ragged matrix");

  SmithForm out;
  out.left = identity(nrows);
  out.right = identity(cols);
  out.right_inverse = identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    std::swap(a[i], a[j]);
    std::swap(out.left[i], out.left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (auto& r : a)
      std::swap(r[i], r[j]);
    for (auto& r : out.right)
      std::swap(r[i], r[j]);
    std::swap(out.right_inverse[i], out.right_inverse[j]);
  };
  // row_i -= q * row_t
  auto sub_row = [&](std::size_t i, std::size_t t, const Integer& q) {
    axpy_row(a[i], q, a[t]);
    axpy_row(out.left[i], q, out.left[t]);
  };
  // col_j -= q * col_t
  auto sub_col = [&](std::size_t j, std::size_t t, const Integer& q) {
    if (q == 0)
      return;
    for (auto& r : a)
      r[j] -= q * r[t];
    for (auto& r : out.right)
      r[j] -= q * r[t];
    // V^{-1}: row_t += q * row_j
    for (std::size_t k = 0; k < cols; ++k)
      out.right_inverse[t][k] += q * out.right_inverse[j][k];
  };

  std::size_t t = 0;
  for (; t < nrows && t < cols; ++t) {
    bool found_any = false;
    while (true) {
      // move the smallest nonzero entry of the trailing block to (t, t)
      std::size_t bi = nrows, bj = cols;
      for (std::size_t i = t; i < nrows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (bi == nrows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == nrows)
        break;
      found_any = true;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (sgn(a[i][t]) == 0)
          continue;
        sub_row(i, t, floor_div(a[i][t], a[t][t]));
        if (sgn(a[i][t]) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0)
          continue;
        sub_col(j, t, floor_div(a[t][j], a[t][t]));
        if (sgn(a[t][j]) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // enforce d_t | every trailing entry
      bool divides = true;
      for (std::size_t i = t + 1; i < nrows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            // row_t += row_i
            sub_row(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (!found_any)
      break;
    if (sgn(a[t][t]) < 0) {
      for (auto& x : a[t])
        x = -x;
      for (auto& x : out.left[t])
        x = -x;
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.rank = out.diagonal.size();
  return out;
}

std::optional<IntVec> solve_left(const IntMatrix& a, std::size_t cols, const IntVec& b)
{
  if (b.size() != cols)
    throw std::invalid_argument("solve_left: target has wrong length");
  const SmithForm s = smith(a, cols);
  // x a = b  <=>  y D = b V  with y = x U^{-1}
  const IntVec bv = row_times(b, s.right, cols);
  IntVec y(a.size(), Integer(0));
  for (std::size_t i = 0; i < cols; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(bv[i].get_mpz_t(), s.diagonal[i].get_mpz_t()))
        return std::nullopt;
      y[i] = bv[i] / s.diagonal[i];
    } else if (sgn(bv[i]) != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, s.left, a.size());
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t cols)
{
  const SmithForm s = smith(a, cols);
  IntMatrix k;
  for (std::size_t i = s.rank; i < a.size(); ++i)
    k.push_back(s.left[i]);
  return hermite_rows(std::move(k), a.size());
}

}  // namespace omega_lift::intmat
