#pragma once

// Matrix model of the torus normalizer of GL_n over Z[varpi, varpi^-1]. It is
// independent of the cocycle formula: Springer lifts are evaluated as products
// of n_alpha = u_alpha(1) u_{-alpha}(-1) u_alpha(1) along a reduced word.

#include <map>
#include <vector>

#include "omega_lift/tits.hpp"

namespace omega_lift {

/// Integer Laurent polynomial in varpi: exponent -> nonzero coefficient.
using Laurent = std::map<int, Integer>;

Laurent operator*(const Laurent& a, const Laurent& b);
Laurent& operator+=(Laurent& a, const Laurent& b);

class LaurentMatrix {
 public:
  explicit LaurentMatrix(std::size_t n);
  static LaurentMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Laurent& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Laurent v);
  /// +/- identity check helpers.
  bool is_scalar(int c) const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  std::size_t n_;
  std::vector<Laurent> e_;
};

/// I + c E_{ij} for the root e_i - e_j.
LaurentMatrix oracle_root_element(std::size_t n, std::size_t i, std::size_t j, const Integer& c);
/// n_alpha for the root alpha = e_i - e_j of A_{n-1}.
LaurentMatrix oracle_nalpha(std::size_t n, const Vec& alpha);
/// Product of n_{alpha_i} over the word (1-based simple indices).
LaurentMatrix oracle_word_lift(const RootSystemPtr& rs, const std::vector<int>& word);
/// Lift over the deterministic reduced word of w.
LaurentMatrix oracle_springer_lift(const WeylElement& w);
/// diag(varpi^{-lambda_i}).
LaurentMatrix oracle_torus(const Vec& lambda);
/// diag((-1)^{mu_i}).
LaurentMatrix oracle_sign(const Vec& mu);
/// torus * sign * springer for an element over the GL_n lattice Z^n.
LaurentMatrix oracle_image(const TitsElement& x);

}  // namespace omega_lift
