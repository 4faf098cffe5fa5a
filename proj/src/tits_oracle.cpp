#include "omega_lift/tits_oracle.hpp"

#include <stdexcept>

namespace omega_lift {
namespace {

void require_type_a(const RootSystemPtr& rs)
{
  const auto& t = rs->cartan_type();
  if (!t || t->family != Family::A)
    throw std::invalid_argument("matrix oracle needs a type A root system, got " + rs->name());
}

int integral(const Rational& q)
{
  if (q.get_den() != 1 || !q.get_num().fits_sint_p())
    throw std::invalid_argument("matrix oracle needs integral coordinates");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

Laurent operator*(const Laurent& a, const Laurent& b)
{
  Laurent c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Integer& slot = c[ea + eb];
      slot += ca * cb;
      if (sgn(slot) == 0)
        c.erase(ea + eb);
    }
  return c;
}

Laurent& operator+=(Laurent& a, const Laurent& b)
{
  for (const auto& [e, v] : b) {
    Integer& slot = a[e];
    slot += v;
    if (sgn(slot) == 0)
      a.erase(e);
  }
  return a;
}

LaurentMatrix::LaurentMatrix(std::size_t n) : n_(n), e_(n * n) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n)
{
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, Laurent{{0, Integer(1)}});
  return m;
}

void LaurentMatrix::set(std::size_t i, std::size_t j, Laurent v)
{
  for (auto it = v.begin(); it != v.end();)
    it = sgn(it->second) == 0 ? v.erase(it) : std::next(it);
  e_.at(i * n_ + j) = std::move(v);
}

bool LaurentMatrix::is_scalar(int c) const
{
  const Laurent diag{{0, Integer(c)}};
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? diag : Laurent{}))
        return false;
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b)
{
  if (a.n_ != b.n_)
    throw std::invalid_argument("LaurentMatrix: size mismatch");
  LaurentMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Laurent& aik = a.at(i, k);
      if (aik.empty())
        continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b.at(k, j).empty())
          c.e_[i * a.n_ + j] += aik * b.at(k, j);
    }
  return c;
}

LaurentMatrix oracle_root_element(std::size_t n, std::size_t i, std::size_t j, const Integer& c)
{
  LaurentMatrix m = LaurentMatrix::identity(n);
  m.set(i, j, Laurent{{0, c}});
  return m;
}

LaurentMatrix oracle_nalpha(std::size_t n, const Vec& alpha)
{
  if (alpha.size() != n)
    throw std::invalid_argument("oracle_nalpha: root of wrong dimension");
  std::size_t i = n, j = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k] == 1 && i == n)
      i = k;
    else if (alpha[k] == -1 && j == n)
      j = k;
    else if (sgn(alpha[k]) != 0)
      throw std::invalid_argument("oracle_nalpha: not a root of A_{n-1}");
  }
  if (i == n || j == n)
    throw std::invalid_argument("oracle_nalpha: not a root of A_{n-1}");
  return oracle_root_element(n, i, j, Integer(1)) * oracle_root_element(n, j, i, Integer(-1)) *
         oracle_root_element(n, i, j, Integer(1));
}

LaurentMatrix oracle_word_lift(const RootSystemPtr& rs, const std::vector<int>& word)
{
  require_type_a(rs);
  LaurentMatrix m = LaurentMatrix::identity(rs->dim());
  for (int i : word)
    m = m * oracle_nalpha(rs->dim(), rs->simple_root(i));
  return m;
}

LaurentMatrix oracle_springer_lift(const WeylElement& w)
{
  return oracle_word_lift(w.root_system(), w.reduced_word());
}

LaurentMatrix oracle_torus(const Vec& lambda)
{
  LaurentMatrix m(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    m.set(i, i, Laurent{{-integral(lambda[i]), Integer(1)}});
  return m;
}

LaurentMatrix oracle_sign(const Vec& mu)
{
  LaurentMatrix m(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    m.set(i, i, Laurent{{0, Integer(integral(mu[i]) % 2 == 0 ? 1 : -1)}});
  return m;
}

LaurentMatrix oracle_image(const TitsElement& x)
{
  const auto& lat = x.lattice();
  require_type_a(lat->root_system());
  if (lat->dim() != lat->root_system()->dim())
    throw std::invalid_argument("oracle_image: lattice must live in the GL_n ambient space");
  for (std::size_t i = 0; i < lat->dim(); ++i)
    if (!lat->contains(unit_vec(lat->dim(), i)) || lat->rank() != lat->dim())
      throw std::invalid_argument("oracle_image: lattice must be Z^n");
  return oracle_torus(x.lambda()) * oracle_sign(lat->sign_representative(x.sign_bits())) *
         oracle_springer_lift(x.weyl());
}

}  // namespace omega_lift
