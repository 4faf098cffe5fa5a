#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega_lift/intmat.hpp"
#include "omega_lift/rational.hpp"

namespace omega_lift {

enum class Family : std::uint8_t { A, B, C, D, E, F, G };

/// Ranks above this are rejected unless a larger cap is passed explicitly.
inline constexpr int kDefaultRankCap = 9;

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "A2", "E7", ...
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

char family_letter(Family f);
Family parse_family(char c);
CartanType parse_cartan_type(const std::string& text);  // "D5", "e6"

/// Throws std::invalid_argument unless (family, rank) is an admissible Dynkin
/// type with rank <= rank_cap.
void validate(const CartanType& t, int rank_cap = kDefaultRankCap);

/// Reduced root system in its Bourbaki-plate realization. Roots are indexed:
/// indices [0, N) are the positive roots ordered by height, then by their
/// simple-root coefficients; index k + N is the negative of root k.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const CartanType& t,
                                                 int rank_cap = kDefaultRankCap);
  /// Rank-0 system (no roots, zero-dimensional ambient space) used for tori.
  static std::shared_ptr<const RootSystem> empty();

  const std::optional<CartanType>& cartan_type() const { return type_; }
  std::string name() const;
  int rank() const { return static_cast<int>(simple_.size()); }
  std::size_t dim() const { return dim_; }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const std::vector<Vec>& roots() const { return roots_; }
  const Vec& root(std::size_t idx) const { return roots_.at(idx); }
  bool is_positive(std::size_t idx) const { return idx < num_positive(); }
  std::size_t negate_index(std::size_t idx) const;
  std::optional<std::size_t> find(const Vec& v) const;
  std::size_t index_of(const Vec& v) const;  // throws when v is not a root

  /// Simple root alpha_j, j is 1-based.
  const Vec& simple_root(int j) const { return simple_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Vec>& simple_roots() const { return simple_; }
  std::size_t simple_index(int j) const { return simple_idx_.at(static_cast<std::size_t>(j - 1)); }

  const Vec& coroot(std::size_t idx) const { return coroots_.at(idx); }
  const Vec& simple_coroot(int j) const { return coroot(simple_index(j)); }
  const Vec& highest_root() const { return roots_.at(highest_idx_); }
  std::size_t highest_index() const { return highest_idx_; }

  /// Fundamental coweight epsilon_i (1-based): (eps_i, alpha_j) = delta_ij, eps_i in span(Delta).
  const Vec& coweight(int i) const { return coweights_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Vec>& coweights() const { return coweights_; }

  /// Coefficients of v over Delta; v is projected to span(Delta) first.
  std::vector<Rational> simple_coefficients(const Vec& v) const;
  /// Simple-root coefficients of root idx (integers).
  const std::vector<Integer>& root_coefficients(std::size_t idx) const { return coeffs_.at(idx); }
  int height(std::size_t idx) const;

  /// Indices i (1-based) with (alpha_0, eps_i) = 1.
  std::vector<int> minuscule() const;

  /// Orthogonal projection of the first dim() coordinates onto span(Delta).
  Vec project(const Vec& x) const;

  /// Simple roots paired with x, i.e. the coordinates of x in the coweight basis.
  std::vector<Rational> coweight_coordinates(const Vec& x) const;

  const std::vector<std::vector<std::uint16_t>>& simple_reflection_tables() const { return srefl_; }

 private:
  RootSystem() = default;
  void finish(std::vector<Vec> simple, std::vector<Vec> all_roots);

  std::optional<CartanType> type_;
  std::size_t dim_ = 0;
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  std::vector<std::vector<Integer>> coeffs_;
  std::vector<Vec> simple_;
  std::vector<std::size_t> simple_idx_;
  std::vector<Vec> coweights_;
  std::size_t highest_idx_ = 0;
  std::map<Vec, std::size_t> lookup_;
  std::vector<std::vector<std::uint16_t>> srefl_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// (x, y) realized as the ambient dot product.
Rational pairing(const Vec& x, const Vec& y);

/// alpha^vee = 2 alpha / (alpha, alpha).
Vec coroot_of(const Vec& alpha);

/// Finitely generated subgroup of the rational ambient space containing the
/// coroot lattice. The basis is the canonical Hermite form, so equal lattices
/// have identical bases.
class CocharLattice {
 public:
  /// The coroots are not implicitly added; every coroot must already be a
  /// member of the span of `generators`. `dim` may exceed rs->dim() (extra
  /// coordinates are fixed by the Weyl group).
  CocharLattice(RootSystemPtr rs, std::size_t dim, const std::vector<Vec>& generators);

  const RootSystemPtr& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  /// Integer coordinates of v in the basis, or nullopt when v is not a member.
  std::optional<intmat::IntVec> coordinates(const Vec& v) const;
  Vec from_coordinates(const intmat::IntVec& c) const;

  /// Coordinates reduced mod 2 (the class of v in Lambda / 2 Lambda).
  /// Throws std::invalid_argument when v is not a member.
  std::vector<std::uint8_t> mod2_class(const Vec& v) const;
  Vec sign_representative(const std::vector<std::uint8_t>& bits) const;

  /// mod2_class of the coroot of root idx (cached).
  const std::vector<std::uint8_t>& coroot_class(std::size_t root_idx) const
  {
    return coroot_bits_.at(root_idx);
  }

  friend bool operator==(const CocharLattice& a, const CocharLattice& b);

 private:
  RootSystemPtr rs_;
  std::size_t dim_;
  Integer scale_;              // basis_ = echelon_ / scale_
  intmat::IntMatrix echelon_;  // canonical HNF of scale_ * Lambda
  std::vector<std::size_t> pivots_;
  std::vector<Vec> basis_;
  std::vector<std::vector<std::uint8_t>> coroot_bits_;
};

using LatticePtr = std::shared_ptr<const CocharLattice>;

/// <Q^vee, eps_i : i in S>. Every i in S (1-based) must be minuscule.
LatticePtr lattice_for_isogeny(const RootSystemPtr& rs, const std::vector<int>& coweights);
LatticePtr coroot_lattice(const RootSystemPtr& rs);
LatticePtr coweight_lattice(const RootSystemPtr& rs);

/// Structure of Lambda / Q^vee via Smith normal form.
class LatticeQuotient {
 public:
  explicit LatticeQuotient(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  /// Torsion invariant factors (> 1), each dividing the next.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  /// |Lambda / Q^vee|; throws std::logic_error when the quotient is infinite.
  Integer order() const;
  /// One entry per class coordinate: the invariant factors, then 0 per free part.
  std::vector<Integer> moduli() const;

  /// Class of v in Lambda / Q^vee (v must be in Lambda).
  intmat::IntVec class_of(const Vec& v) const;
  intmat::IntVec add(const intmat::IntVec& a, const intmat::IntVec& b) const;
  intmat::IntVec normalize(intmat::IntVec c) const;
  intmat::IntVec zero() const;
  /// A lattice vector whose class is c.
  Vec lift(const intmat::IntVec& c) const;
  /// All classes, in lexicographic order of coordinates (finite case).
  std::vector<intmat::IntVec> elements() const;

 private:
  LatticePtr lattice_;
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
  intmat::IntMatrix projection_;  // rank x (#factors + free_rank)
  std::vector<Vec> lifts_;        // one per class coordinate
};

/// Split connected reductive root datum realized in a rational ambient space:
/// the root system occupies the first rs->dim() coordinates and the remaining
/// coordinates are central directions.
struct RootDatum {
  std::string name;
  RootSystemPtr rs;
  LatticePtr lattice;
  std::vector<Vec> central_cochars;  // basis of { lambda in Lambda : (alpha, lambda) = 0 }

  static RootDatum make(std::string name, RootSystemPtr rs, std::size_t dim,
                        const std::vector<Vec>& generators);
  static RootDatum almost_simple(std::string name, LatticePtr lattice);
  static RootDatum general_linear(int n);
  /// GSp(2n): type C_n roots plus one central coordinate.
  static RootDatum general_symplectic(int n);
  static RootDatum split_torus(int dim);
  /// Product with a split torus of dimension k.
  RootDatum times_torus(int k) const;

  std::size_t dim() const { return lattice->dim(); }
  /// X^*(Z) torsion-free, i.e. X^*(T) / Q has no torsion.
  bool has_connected_center() const;
  /// Cocharacter map to the adjoint torus (projection to span of the roots).
  Vec to_adjoint(const Vec& lambda) const;
};

}  // namespace omega_lift
