#pragma once

// Element calculator for the normalizer model of an almost-simple lattice.
//
//   expr   := term ('*' term)*
//   term   := atom ('^' ['-'] integer)?
//   atom   := '(' expr ')' | '1' | rho_i | eps_i | N(weyl) | sgn(cochar)
//   weyl   := w0 | w_i | s_i | i (',' i)*         (a word of simple indices)
//   cochar := eps_i | coroot_i | '[' rational (',' rational)* ']'
//
// i is a positive integer or the letter l (the rank).

#include <string>

#include "omega_lift/tits.hpp"

namespace omega_lift {

/// Throws std::invalid_argument on parse errors and on coweights outside the lattice.
TitsElement evaluate_expression(const std::string& text, const LatticePtr& lattice);

}  // namespace omega_lift
