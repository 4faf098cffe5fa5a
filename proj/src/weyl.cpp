#include "omega_lift/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega_lift {
namespace {

void same_system(const WeylElement& u, const WeylElement& v)
{
  if (u.root_system() != v.root_system())
    throw std::invalid_argument("Weyl elements of different root systems");
}

}  // namespace

WeylElement WeylElement::identity(RootSystemPtr rs)
{
  std::vector<std::uint16_t> p(rs->num_roots());
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k] = static_cast<std::uint16_t>(k);
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i)
{
  if (i < 1 || i > rs->rank())
    throw std::invalid_argument("simple reflection index " + std::to_string(i) + " out of range for " +
                                rs->name());
  auto p = rs->simple_reflection_tables()[static_cast<std::size_t>(i - 1)];
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word)
{
  WeylElement w = identity(rs);
  for (int i : word)
    w = w * simple_reflection(rs, i);
  return w;
}

Vec WeylElement::apply(const Vec& x) const
{
  const std::size_t d = rs_->dim();
  if (x.size() < d)
    throw std::invalid_argument("WeylElement::apply: vector shorter than the ambient space");
  Vec out = x;
  const Vec head(x.begin(), x.begin() + static_cast<long>(d));
  for (int j = 1; j <= rs_->rank(); ++j) {
    const Rational c = dot(head, rs_->coweight(j));
    if (sgn(c) == 0)
      continue;
    const std::size_t sj = rs_->simple_index(j);
    const Vec& img = rs_->root(perm_[sj]);
    const Vec& a = rs_->root(sj);
    for (std::size_t k = 0; k < d; ++k)
      out[k] += c * (img[k] - a[k]);
  }
  return out;
}

bool WeylElement::is_identity() const
{
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != k)
      return false;
  return true;
}

int WeylElement::length() const
{
  const std::size_t np = rs_->num_positive();
  int n = 0;
  for (std::size_t k = 0; k < np; ++k)
    if (perm_[k] >= np)
      ++n;
  return n;
}

std::vector<std::size_t> WeylElement::inversion_set() const
{
  const std::size_t np = rs_->num_positive();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < np; ++k)
    if (perm_[k] >= np)
      out.push_back(k);
  return out;
}

std::vector<int> WeylElement::reduced_word() const
{
  std::vector<int> peeled;
  WeylElement w = *this;
  const std::size_t np = rs_->num_positive();
  while (true) {
    int descent = 0;
    for (int j = 1; j <= rs_->rank(); ++j)
      if (w.perm_[rs_->simple_index(j)] >= np) {
        descent = j;
        break;
      }
    if (descent == 0)
      break;
    peeled.push_back(descent);
    w = w * simple_reflection(rs_, descent);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

int WeylElement::order() const
{
  WeylElement w = *this;
  int n = 1;
  while (!w.is_identity()) {
    w = w * *this;
    ++n;
  }
  return n;
}

WeylElement WeylElement::pow(long n) const
{
  if (n < 0)
    return inverse().pow(-n);
  WeylElement result = identity(rs_);
  WeylElement base = *this;
  while (n > 0) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

WeylElement WeylElement::inverse() const
{
  std::vector<std::uint16_t> p(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k)
    p[perm_[k]] = static_cast<std::uint16_t>(k);
  return WeylElement(rs_, std::move(p));
}

WeylElement operator*(const WeylElement& u, const WeylElement& v)
{
  same_system(u, v);
  std::vector<std::uint16_t> p(v.perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k] = u.perm_[v.perm_[k]];
  return WeylElement(u.rs_, std::move(p));
}

bool operator==(const WeylElement& u, const WeylElement& v)
{
  return u.rs_ == v.rs_ && u.perm_ == v.perm_;
}

bool operator<(const WeylElement& u, const WeylElement& v)
{
  same_system(u, v);
  return u.perm_ < v.perm_;
}

WeylElement longest_element(const RootSystemPtr& rs, const std::vector<int>& subset)
{
  WeylElement w = WeylElement::identity(rs);
  const std::size_t np = rs->num_positive();
  for (int j : subset)
    if (j < 1 || j > rs->rank())
      throw std::invalid_argument("longest_element: index out of range");
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : subset)
      if (w.apply_root(rs->simple_index(j)) < np) {
        w = w * WeylElement::simple_reflection(rs, j);
        grew = true;
        break;
      }
  }
  return w;
}

WeylElement longest_element(const RootSystemPtr& rs)
{
  std::vector<int> all;
  for (int j = 1; j <= rs->rank(); ++j)
    all.push_back(j);
  return longest_element(rs, all);
}

WeylElement omega_weyl_part(const RootSystemPtr& rs, int i)
{
  if (i < 1 || i > rs->rank())
    throw std::invalid_argument("omega_weyl_part: index out of range");
  std::vector<int> rest;
  for (int j = 1; j <= rs->rank(); ++j)
    if (j != i)
      rest.push_back(j);
  return longest_element(rs, rest) * longest_element(rs);
}

std::vector<std::size_t> f_set(const WeylElement& u, const WeylElement& v)
{
  same_system(u, v);
  const std::size_t np = u.root_system()->num_positive();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < np; ++k) {
    const std::size_t vk = v.apply_root(k);
    if (vk >= np && u.apply_root(vk) < np)
      out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> f_w_set(const WeylElement& w, int i)
{
  if (i < 1)
    throw std::invalid_argument("f_w_set: exponent must be positive");
  return f_set(w, w.pow(i));
}

std::size_t draw_below(std::mt19937_64& rng, std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("draw_below: empty range");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

WeylElement random_element(const RootSystemPtr& rs, std::mt19937_64& rng)
{
  WeylElement w = WeylElement::identity(rs);
  if (rs->rank() == 0)
    return w;
  const std::size_t steps = 2 * rs->num_positive() + static_cast<std::size_t>(rs->rank());
  for (std::size_t s = 0; s < steps; ++s)
    w = w * WeylElement::simple_reflection(rs, static_cast<int>(draw_below(rng, static_cast<std::size_t>(rs->rank()))) + 1);
  return w;
}

}  // namespace omega_lift
