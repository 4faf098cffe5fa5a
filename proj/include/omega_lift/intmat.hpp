#pragma once

// Exact integer matrix routines: Hermite and Smith normal forms with
// unimodular transforms, integer solves and left kernels. Matrices are
// row-major lists of rows; the column count is passed explicitly so that
// empty matrices keep their shape.

#include <cstddef>
#include <optional>
#include <vector>

#include "omega_lift/rational.hpp"

namespace omega_lift::intmat {

using IntVec = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;

IntMatrix identity(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols);
IntVec row_times(const IntVec& x, const IntMatrix& a, std::size_t cols);

/// Canonical row-style Hermite normal form of the row lattice: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_rows(IntMatrix rows, std::size_t cols);

struct SmithForm {
  IntMatrix left;           // U, rows x rows, unimodular
  IntMatrix right;          // V, cols x cols, unimodular
  IntMatrix right_inverse;  // V^{-1}
  IntVec diagonal;          // d_0 | d_1 | ... | d_{rank-1}, all positive
  std::size_t rank = 0;
};

/// U * a * V = diag(diagonal, 0...).
SmithForm smith(const IntMatrix& a, std::size_t cols);

/// Some integer x with x * a = b, or nullopt when none exists.
std::optional<IntVec> solve_left(const IntMatrix& a, std::size_t cols, const IntVec& b);

/// Hermite-reduced basis of { x : x * a = 0 }.
IntMatrix left_kernel(const IntMatrix& a, std::size_t cols);

}  // namespace omega_lift::intmat
