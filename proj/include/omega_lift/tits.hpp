#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "omega_lift/rootsys.hpp"
#include "omega_lift/weyl.hpp"

namespace omega_lift {

using SignBits = std::vector<std::uint8_t>;

/// lambda(varpi^-1) * mu(-1) * N(w) in the normalizer of the split torus.
/// The sign part is mu mod 2*Lambda in lattice coordinates.
class TitsElement {
 public:
  TitsElement(LatticePtr lattice, Vec lambda, SignBits sign, WeylElement w);

  static TitsElement identity(const LatticePtr& lattice);
  static TitsElement torus(const LatticePtr& lattice, const Vec& lambda);
  static TitsElement sign(const LatticePtr& lattice, const Vec& mu);
  /// The Springer lift N(w), which is (0, 0, w) by definition.
  static TitsElement springer(const LatticePtr& lattice, const WeylElement& w);

  const LatticePtr& lattice() const { return lattice_; }
  const Vec& lambda() const { return lambda_; }
  const SignBits& sign_bits() const { return sign_; }
  const WeylElement& weyl() const { return w_; }
  bool is_identity() const;

  friend bool operator==(const TitsElement& a, const TitsElement& b);

 private:
  LatticePtr lattice_;
  Vec lambda_;
  SignBits sign_;
  WeylElement w_;
};

/// Sum of the coroots of the given roots.
Vec coroot_sum(const RootSystemPtr& rs, const std::vector<std::size_t>& roots);

/// Class of w * mu in Lambda / 2 Lambda for mu given by its class.
SignBits act_on_sign(const CocharLattice& lattice, const WeylElement& w, const SignBits& bits);

TitsElement multiply(const TitsElement& x, const TitsElement& y);
TitsElement operator*(const TitsElement& x, const TitsElement& y);
TitsElement inverse(const TitsElement& x);
/// Repeated squaring; negative n goes through the inverse.
TitsElement power(const TitsElement& x, long n);
/// (sum_{j<n} w^j lambda, sum_{j<n} w^j mu + w^n c, w^n) with c the
/// cocycle_sum of w up to n; n >= 0.
TitsElement power_closed_form(const TitsElement& x, long n);

/// sum_{m=1}^{r-1} sum_{alpha in F_w(m)} alpha^vee, before reduction mod 2.
Vec cocycle_sum(const WeylElement& w, int r);

/// Random element: random Weyl part, lattice coordinates in [-bound, bound],
/// uniform sign bits.
TitsElement random_tits_element(const LatticePtr& lattice, std::mt19937_64& rng, int bound = 3);

}  // namespace omega_lift
