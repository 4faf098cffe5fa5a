#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "omega_lift/rootsys.hpp"

namespace omega_lift {

/// Element of the finite Weyl group, stored as the permutation it induces on
/// the indexed root set. Elements of different root systems never mix.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement simple_reflection(RootSystemPtr rs, int i);  // i is 1-based
  /// s_{i_1} s_{i_2} ... s_{i_m}; indices 1-based.
  static WeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);

  const RootSystemPtr& root_system() const { return rs_; }
  const std::vector<std::uint16_t>& perm() const { return perm_; }

  std::size_t apply_root(std::size_t idx) const { return perm_[idx]; }
  /// Linear action; coordinates beyond rs->dim() are fixed.
  Vec apply(const Vec& x) const;

  bool is_identity() const;
  int length() const;
  /// Positive roots sent to negative roots, as sorted indices.
  std::vector<std::size_t> inversion_set() const;
  /// Smallest-index right descent peeled off first, so the word ends with it.
  std::vector<int> reduced_word() const;
  int order() const;
  WeylElement pow(long n) const;
  WeylElement inverse() const;

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement& u, const WeylElement& v);
  friend bool operator<(const WeylElement& u, const WeylElement& v);

 private:
  WeylElement(RootSystemPtr rs, std::vector<std::uint16_t> perm) : rs_(std::move(rs)), perm_(std::move(perm)) {}

  RootSystemPtr rs_;
  std::vector<std::uint16_t> perm_;
};

/// Longest element of the parabolic subgroup W_J (J holds 1-based indices).
WeylElement longest_element(const RootSystemPtr& rs, const std::vector<int>& subset);
WeylElement longest_element(const RootSystemPtr& rs);

/// w_{Delta_i} w_Delta, the Weyl part of rho_i.
WeylElement omega_weyl_part(const RootSystemPtr& rs, int i);

/// { alpha > 0 : v alpha < 0, u v alpha > 0 }, sorted root indices.
std::vector<std::size_t> f_set(const WeylElement& u, const WeylElement& v);
/// f_set(w, w^i), i >= 1.
std::vector<std::size_t> f_w_set(const WeylElement& w, int i);

/// Portable draw in [0, n); mt19937_64 output is fixed by the standard, the
/// standard distributions are not.
std::size_t draw_below(std::mt19937_64& rng, std::size_t n);

/// Product of a random word of length 2N + rank.
WeylElement random_element(const RootSystemPtr& rs, std::mt19937_64& rng);

}  // namespace omega_lift
