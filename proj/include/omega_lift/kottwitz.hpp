#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omega_lift/omega.hpp"
#include "omega_lift/tits.hpp"

namespace omega_lift {

enum class Strategy { trivial, cyclic_power, direct_iota, free_splitting, connected_center_lift };

std::string to_string(Strategy s);

/// kappa(lambda(varpi^-1) mu(-1) N(w)) = +[lambda] in Lambda / Q^vee.
intmat::IntVec kappa(const LatticeQuotient& q, const TitsElement& x);

/// (eps_i, 0, w_i) for member k = rho_i of Omega; the identity for k = 0.
TitsElement iota(const OmegaGroup& omega, std::size_t k);

std::string member_label(const OmegaGroup& omega, std::size_t k);

struct Witness {
  std::string check;
  std::string relation;
  std::vector<std::string> operands;
  std::optional<TitsElement> lhs;
  std::optional<TitsElement> rhs;
  std::optional<Vec> value;
};

/// Unset fields do not apply to the certificate's strategy.
struct Checks {
  std::optional<bool> kappa_identity;
  std::optional<bool> homomorphy;
  std::optional<bool> iota_homomorphic;  // reported, never required
  std::optional<bool> orbit_sums_zero;
  std::optional<bool> tits_powers_trivial;
  std::optional<bool> closed_form_powers;
  std::optional<bool> orders_preserved;
  std::optional<bool> weyl_parts_trivial;
  std::optional<bool> generators_commute;
  std::optional<bool> diagram_commutes;

  bool passed() const;
};

struct SectionEntry {
  std::string label;
  std::optional<std::size_t> omega_index;
  intmat::IntVec kappa_class;
  TitsElement element;
};

struct Sampling {
  std::uint64_t seed = 0;
  int triples = 0;
  bool associative = true;
};

struct SectionCertificate {
  std::string type;     // "B" for almost-simple data, the datum name otherwise
  int rank = 0;         // semisimple rank
  std::string isogeny;  // "adjoint", "sc", "coweights:i,j" or "datum"
  LatticePtr lattice;
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  std::optional<OmegaGroup> omega;  // finite case
  Strategy strategy = Strategy::trivial;
  std::vector<SectionEntry> section;
  Checks checks;
  std::vector<Witness> witnesses;
  std::optional<Sampling> sampling;
  std::optional<std::uint64_t> seed;

  bool passed() const;
};

struct IotaReport {
  bool homomorphic = true;
  std::vector<Witness> witnesses;
};

/// Exhaustive test of iota(ab) = iota(a) iota(b) over Omega x Omega.
IotaReport iota_homomorphy_report(const OmegaGroup& omega);

/// Homomorphic section of kappa over Q^vee <= Lambda <= P^vee.
SectionCertificate build_section(const LatticePtr& lattice, const std::string& isogeny = "");

/// Lambda / Q^vee free of positive rank: s(class) = (lift, 0, 1).
SectionCertificate free_section(const RootDatum& datum);

/// Connected center and free Lambda / Q^vee: lifts of the adjoint section.
SectionCertificate good_section(const RootDatum& datum);

/// (xy)z = x(yz) on seeded random triples; returns a witness on failure.
std::optional<Witness> sample_associativity(const LatticePtr& lattice, std::uint64_t seed, int triples,
                                            int* checked = nullptr);

/// Attach a sampling block, deriving the stream from seed and the certificate identity.
void attach_sampling(SectionCertificate& cert, std::uint64_t seed, int triples);

}  // namespace omega_lift
