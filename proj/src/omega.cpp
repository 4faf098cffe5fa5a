#include "omega_lift/omega.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega_lift/errors.hpp"

namespace omega_lift {

ExtAffElem operator*(const ExtAffElem& a, const ExtAffElem& b)
{
  return {a.lambda + a.w.apply(b.lambda), a.w * b.w};
}

AffineRoot act_affine(const RootSystemPtr& rs, const ExtAffElem& g, const AffineRoot& a)
{
  const std::size_t img = g.w.apply_root(a.root_index);
  const Rational shift = dot(resize_vec(rs->root(img), g.lambda.size()), g.lambda);
  if (shift.get_den() != 1)
    throw std::invalid_argument("act_affine: translation pairs non-integrally with a root");
  return {img, a.level - shift.get_num()};
}

std::vector<AffineRoot> affine_simple_roots(const RootSystemPtr& rs)
{
  std::vector<AffineRoot> out;
  if (rs->rank() == 0)
    return out;
  out.push_back({rs->negate_index(rs->highest_index()), Integer(1)});
  for (int j = 1; j <= rs->rank(); ++j)
    out.push_back({rs->simple_index(j), Integer(0)});
  return out;
}

std::optional<std::vector<int>> node_permutation(const RootSystemPtr& rs, const ExtAffElem& g)
{
  const auto nodes = affine_simple_roots(rs);
  std::vector<int> perm;
  for (const auto& a : nodes) {
    const AffineRoot b = act_affine(rs, g, a);
    auto it = std::find(nodes.begin(), nodes.end(), b);
    if (it == nodes.end())
      return std::nullopt;
    perm.push_back(static_cast<int>(it - nodes.begin()));
  }
  return perm;
}

OmegaGroup::OmegaGroup(LatticePtr lattice) : lattice_(lattice), quotient_(lattice)
{
  const auto& rs = lattice_->root_system();
  if (lattice_->dim() != rs->dim())
    throw std::invalid_argument("OmegaGroup: lattice has central directions; not an almost-simple lattice");
  for (const auto& b : lattice_->basis())
    for (int j = 1; j <= rs->rank(); ++j)
      if (dot(b, rs->simple_root(j)).get_den() != 1)
        throw std::invalid_argument("OmegaGroup: lattice is not contained in the coweight lattice");
  if (!quotient_.is_finite())
    throw std::invalid_argument("OmegaGroup: Lambda / Q^vee is infinite; not an almost-simple lattice");

  members_.push_back({0, {zero_vec(rs->dim()), WeylElement::identity(rs)}, quotient_.zero(), {}, 1});
  for (int i : rs->minuscule())
    if (lattice_->contains(rs->coweight(i))) {
      ExtAffElem e{rs->coweight(i), omega_weyl_part(rs, i)};
      members_.push_back({i, e, quotient_.class_of(e.lambda), {}, 1});
    }
  if (Integer(members_.size()) != quotient_.order())
    throw InternalError("Omega has " + std::to_string(members_.size()) + " members but the quotient has order " +
                        quotient_.order().get_str());
  for (auto& m : members_) {
    auto p = node_permutation(rs, m.elem);
    if (!p)
      throw InternalError("rho_" + std::to_string(m.coweight) + " does not stabilize the affine simple roots");
    m.nodes = *p;
  }

  table_.assign(members_.size(), std::vector<std::size_t>(members_.size()));
  for (std::size_t a = 0; a < members_.size(); ++a)
    for (std::size_t b = 0; b < members_.size(); ++b) {
      const std::size_t c = index_of_class(quotient_.add(members_[a].kappa, members_[b].kappa));
      if (!(members_[a].elem * members_[b].elem == members_[c].elem))
        throw InternalError("product of Omega members is not the member of its class");
      table_[a][b] = c;
    }

  for (std::size_t k = 1; k < members_.size(); ++k) {
    std::size_t x = k;
    int n = 1;
    while (x != 0) {
      x = table_[x][k];
      ++n;
    }
    members_[k].order = n;
  }

  if (is_cyclic() && members_.size() > 1)
    for (std::size_t k = 1; k < members_.size(); ++k)
      if (static_cast<std::size_t>(members_[k].order) == members_.size()) {
        generator_ = k;
        break;
      }
}

std::size_t OmegaGroup::index_of_class(const intmat::IntVec& c) const
{
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k].kappa == c)
      return k;
  throw InternalError("class without an Omega member");
}

std::size_t OmegaGroup::index_of_coweight(int i) const
{
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k].coweight == i)
      return k;
  throw std::invalid_argument("rho_" + std::to_string(i) + " is not in Omega for this lattice");
}

OmegaGroup omega_ad(const RootSystemPtr& rs) { return OmegaGroup(coweight_lattice(rs)); }

OmegaGroup omega_for_lattice(const LatticePtr& lattice) { return OmegaGroup(lattice); }

Vec orbit_sum(const WeylElement& w, const Vec& eps, int r)
{
  if (r < 1)
    throw std::invalid_argument("orbit_sum: r must be positive");
  Vec s = zero_vec(eps.size());
  Vec x = eps;
  for (int j = 0; j < r; ++j) {
    s += x;
    x = w.apply(x);
  }
  return s;
}

}  // namespace omega_lift
