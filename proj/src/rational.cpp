#include "omega_lift/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace omega_lift {

Vec zero_vec(std::size_t dim) { return Vec(dim, Rational(0)); }

Vec unit_vec(std::size_t dim, std::size_t i)
{
  Vec v = zero_vec(dim);
  v.at(i) = 1;
  return v;
}

Rational dot(const Vec& x, const Vec& y)
{
  if (x.size() != y.size())
    throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0)
      s += x[i] * y[i];
  return s;
}

Vec& operator+=(Vec& x, const Vec& y)
{
  if (x.size() != y.size())
    throw std::invalid_argument("vector addition: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0)
      x[i] += y[i];
  return x;
}

Vec& operator-=(Vec& x, const Vec& y)
{
  if (x.size() != y.size())
    throw std::invalid_argument("vector subtraction: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0)
      x[i] -= y[i];
  return x;
}

Vec operator+(const Vec& x, const Vec& y)
{
  Vec r = x;
  r += y;
  return r;
}

Vec operator-(const Vec& x, const Vec& y)
{
  Vec r = x;
  r -= y;
  return r;
}

Vec operator-(const Vec& x)
{
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = -x[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& x)
{
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = c * x[i];
  return r;
}

bool is_zero(const Vec& x)
{
  for (const auto& q : x)
    if (sgn(q) != 0)
      return false;
  return true;
}

Vec resize_vec(const Vec& x, std::size_t dim)
{
  Vec r = x;
  if (dim < r.size()) {
    for (std::size_t i = dim; i < r.size(); ++i)
      if (sgn(r[i]) != 0)
        throw std::invalid_argument("resize_vec: truncating a nonzero coordinate");
  }
  r.resize(dim, Rational(0));
  return r;
}

std::string to_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  auto strip = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t'))
      t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t'))
      t.pop_back();
  };
  strip(s);
  if (s.empty())
    throw std::invalid_argument("parse_rational: empty string");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  if (num.empty() || den.empty() || !valid_int(num) || !valid_int(den))
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  if (num[0] == '+')
    num.erase(num.begin());
  if (den[0] == '+')
    den.erase(den.begin());
  Integer n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("parse_rational: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_vec(const Vec& x)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i)
      os << ", ";
    os << x[i].get_str();
  }
  os << ']';
  return os.str();
}

Integer lcm_of_denominators(const Vec& x)
{
  Integer l = 1;
  for (const auto& q : x)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace omega_lift
