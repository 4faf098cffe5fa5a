#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omega_lift/kottwitz.hpp"

namespace omega_lift {

struct IsogenyCase {
  std::string label;  // "sc", "adjoint" or "coweights:i,j"
  LatticePtr lattice;
};

/// "adjoint", "sc" or "coweights:i[,j...]"; throws std::invalid_argument otherwise.
IsogenyCase parse_isogeny(const RootSystemPtr& rs, const std::string& spec);

/// Every distinct lattice <Q^vee, S>, S a set of minuscule indices, labelled by
/// the first S producing it (smallest |S|, then lexicographic).
std::vector<IsogenyCase> isogeny_lattices(const RootSystemPtr& rs);

/// Admissible types of the given families with rank <= max_rank, in family order.
std::vector<CartanType> sweep_types(const std::string& families, int max_rank);

/// build_section plus a seeded associativity sample of `samples` triples.
SectionCertificate certify(const IsogenyCase& c, std::uint64_t seed, int samples);

/// Certificates for every (type, lattice) of the sweep, in a fixed order
/// regardless of the number of worker threads.
std::vector<SectionCertificate> run_sweep(const std::string& families, int max_rank, std::uint64_t seed, int samples,
                                          int jobs);

}  // namespace omega_lift
