#include "omega_lift/tits.hpp"

#include <stdexcept>

#include "omega_lift/errors.hpp"

namespace omega_lift {
namespace {

void same_lattice(const TitsElement& x, const TitsElement& y)
{
  if (x.lattice() != y.lattice() && !(*x.lattice() == *y.lattice()))
    throw std::invalid_argument("Tits elements over different lattices");
}

void xor_into(SignBits& a, const SignBits& b)
{
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] ^= b[k];
}

}  // namespace

TitsElement::TitsElement(LatticePtr lattice, Vec lambda, SignBits sign, WeylElement w)
    : lattice_(std::move(lattice)), lambda_(std::move(lambda)), sign_(std::move(sign)), w_(std::move(w))
{
  if (!lattice_)
    throw std::invalid_argument("TitsElement: null lattice");
  if (w_.root_system() != lattice_->root_system())
    throw std::invalid_argument("TitsElement: Weyl element of another root system");
  if (sign_.size() != lattice_->rank())
    throw std::invalid_argument("TitsElement: sign class of wrong length");
  if (!lattice_->contains(lambda_))
    throw std::invalid_argument("TitsElement: " + format_vec(lambda_) + " is not in the cocharacter lattice");
}

TitsElement TitsElement::identity(const LatticePtr& lattice)
{
  return TitsElement(lattice, zero_vec(lattice->dim()), SignBits(lattice->rank(), 0),
                     WeylElement::identity(lattice->root_system()));
}

TitsElement TitsElement::torus(const LatticePtr& lattice, const Vec& lambda)
{
  return TitsElement(lattice, lambda, SignBits(lattice->rank(), 0), WeylElement::identity(lattice->root_system()));
}

TitsElement TitsElement::sign(const LatticePtr& lattice, const Vec& mu)
{
  return TitsElement(lattice, zero_vec(lattice->dim()), lattice->mod2_class(mu),
                     WeylElement::identity(lattice->root_system()));
}

TitsElement TitsElement::springer(const LatticePtr& lattice, const WeylElement& w)
{
  return TitsElement(lattice, zero_vec(lattice->dim()), SignBits(lattice->rank(), 0), w);
}

bool TitsElement::is_identity() const
{
  if (!w_.is_identity() || !is_zero(lambda_))
    return false;
  for (auto b : sign_)
    if (b)
      return false;
  return true;
}

bool operator==(const TitsElement& a, const TitsElement& b)
{
  return a.w_ == b.w_ && a.lambda_ == b.lambda_ && a.sign_ == b.sign_;
}

Vec coroot_sum(const RootSystemPtr& rs, const std::vector<std::size_t>& roots)
{
  Vec s = zero_vec(rs->dim());
  for (auto k : roots)
    s += rs->coroot(k);
  return s;
}

SignBits act_on_sign(const CocharLattice& lattice, const WeylElement& w, const SignBits& bits)
{
  bool any = false;
  for (auto b : bits)
    any = any || b;
  if (!any || w.is_identity())
    return bits;
  return lattice.mod2_class(w.apply(lattice.sign_representative(bits)));
}

TitsElement multiply(const TitsElement& x, const TitsElement& y)
{
  same_lattice(x, y);
  const auto& lat = *x.lattice();
  const WeylElement& u = x.weyl();
  const WeylElement uv = u * y.weyl();

  Vec lam = x.lambda() + u.apply(y.lambda());
  if (!lat.contains(lam))
    throw InternalError("translation part left the cocharacter lattice");

  SignBits s = act_on_sign(lat, u, y.sign_bits());
  xor_into(s, x.sign_bits());
  // the cocycle prod alpha^vee(-1) sits right of N(uv); moving it left applies uv
  for (auto k : f_set(u, y.weyl()))
    xor_into(s, lat.coroot_class(uv.apply_root(k)));
  return TitsElement(x.lattice(), std::move(lam), std::move(s), uv);
}

TitsElement operator*(const TitsElement& x, const TitsElement& y) { return multiply(x, y); }

TitsElement inverse(const TitsElement& x)
{
  const auto& lat = *x.lattice();
  const WeylElement wi = x.weyl().inverse();
  // N(w) N(w^-1) = c(-1), c the coroots of F(w, w^-1)
  SignBits s = x.sign_bits();
  for (auto k : f_set(x.weyl(), wi))
    xor_into(s, lat.coroot_class(k));
  s = act_on_sign(lat, wi, s);
  return TitsElement(x.lattice(), -wi.apply(x.lambda()), std::move(s), wi);
}

TitsElement power(const TitsElement& x, long n)
{
  if (n < 0)
    return power(inverse(x), -n);
  TitsElement result = TitsElement::identity(x.lattice());
  TitsElement base = x;
  while (n > 0) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

Vec cocycle_sum(const WeylElement& w, int r)
{
  if (r < 1)
    throw std::invalid_argument("cocycle_sum: r must be positive");
  const auto& rs = w.root_system();
  Vec s = zero_vec(rs->dim());
  WeylElement wm = w;
  for (int m = 1; m < r; ++m) {
    s += coroot_sum(rs, f_set(w, wm));
    wm = wm * w;
  }
  return s;
}

TitsElement power_closed_form(const TitsElement& x, long n)
{
  if (n < 0)
    throw std::invalid_argument("power_closed_form: negative exponent");
  const auto& lat = x.lattice();
  if (n == 0)
    return TitsElement::identity(lat);
  const WeylElement& w = x.weyl();
  const Vec mu = lat->sign_representative(x.sign_bits());
  Vec lam = zero_vec(lat->dim());
  Vec sig = zero_vec(lat->dim());
  Vec lam_j = x.lambda();
  Vec mu_j = mu;
  for (long j = 0; j < n; ++j) {
    lam += lam_j;
    sig += mu_j;
    lam_j = w.apply(lam_j);
    mu_j = w.apply(mu_j);
  }
  const WeylElement wn = w.pow(n);
  sig += wn.apply(resize_vec(cocycle_sum(w, static_cast<int>(n)), lat->dim()));
  return TitsElement(lat, std::move(lam), lat->mod2_class(sig), wn);
}

TitsElement random_tits_element(const LatticePtr& lattice, std::mt19937_64& rng, int bound)
{
  const auto span = static_cast<std::size_t>(2 * bound + 1);
  intmat::IntVec c(lattice->rank());
  for (auto& x : c)
    x = static_cast<long>(draw_below(rng, span)) - bound;
  SignBits bits(lattice->rank());
  for (auto& b : bits)
    b = static_cast<std::uint8_t>(draw_below(rng, 2));
  return TitsElement(lattice, lattice->from_coordinates(c), std::move(bits),
                     random_element(lattice->root_system(), rng));
}

}  // namespace omega_lift
