#pragma once

#include <optional>
#include <vector>

#include "omega_lift/rootsys.hpp"
#include "omega_lift/weyl.hpp"

namespace omega_lift {

/// t_lambda * w in the extended affine Weyl group Lambda x| W.
struct ExtAffElem {
  Vec lambda;
  WeylElement w;

  friend ExtAffElem operator*(const ExtAffElem& a, const ExtAffElem& b);
  friend bool operator==(const ExtAffElem& a, const ExtAffElem& b)
  {
    return a.w == b.w && a.lambda == b.lambda;
  }
};

/// root(root_index) + level * delta.
struct AffineRoot {
  std::size_t root_index = 0;
  Integer level;

  friend bool operator==(const AffineRoot& a, const AffineRoot& b)
  {
    return a.root_index == b.root_index && a.level == b.level;
  }
};

/// (lambda, w) . (alpha + k delta) = w alpha + (k - (w alpha, lambda)) delta.
AffineRoot act_affine(const RootSystemPtr& rs, const ExtAffElem& g, const AffineRoot& a);

/// Node 0 is -alpha_0 + delta, node j is alpha_j.
std::vector<AffineRoot> affine_simple_roots(const RootSystemPtr& rs);

/// Permutation of the affine simple nodes induced by g, or nullopt when g does
/// not stabilize the set.
std::optional<std::vector<int>> node_permutation(const RootSystemPtr& rs, const ExtAffElem& g);

struct OmegaMember {
  int coweight = 0;  // i of rho_i, 0 for the identity
  ExtAffElem elem;
  intmat::IntVec kappa;  // class of lambda in Lambda / Q^vee
  std::vector<int> nodes;
  int order = 1;  // order in the group table
};

/// The stabilizer of the fundamental alcove in Lambda x| W for Q^vee <= Lambda <= P^vee.
class OmegaGroup {
 public:
  explicit OmegaGroup(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const LatticeQuotient& quotient() const { return quotient_; }
  const std::vector<OmegaMember>& members() const { return members_; }
  const OmegaMember& member(std::size_t k) const { return members_.at(k); }
  std::size_t size() const { return members_.size(); }
  std::size_t product(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t index_of_class(const intmat::IntVec& c) const;
  std::size_t index_of_coweight(int i) const;  // throws when rho_i is not a member
  bool is_cyclic() const { return quotient_.invariant_factors().size() <= 1; }
  /// Smallest-index member whose class generates, when the group is cyclic and nontrivial.
  std::optional<std::size_t> canonical_generator() const { return generator_; }

 private:
  LatticePtr lattice_;
  LatticeQuotient quotient_;
  std::vector<OmegaMember> members_;
  std::vector<std::vector<std::size_t>> table_;
  std::optional<std::size_t> generator_;
};

OmegaGroup omega_ad(const RootSystemPtr& rs);
OmegaGroup omega_for_lattice(const LatticePtr& lattice);

/// sum_{j=0}^{r-1} w^j(eps).
Vec orbit_sum(const WeylElement& w, const Vec& eps, int r);

}  // namespace omega_lift
