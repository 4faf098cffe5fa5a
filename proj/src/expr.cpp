#include "omega_lift/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "omega_lift/kottwitz.hpp"

namespace omega_lift {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const LatticePtr& lattice)
      : s_(text), lat_(lattice), rs_(lattice->root_system())
  {
  }

  TitsElement run()
  {
    TitsElement x = expr();
    skip();
    if (p_ != s_.size())
      fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const
  {
    throw std::invalid_argument("expression error at position " + std::to_string(p_) + ": " + why);
  }

  void skip()
  {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_])))
      ++p_;
  }

  bool eat(char c)
  {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }

  std::string ident()
  {
    skip();
    const std::size_t start = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
      ++p_;
    if (start == p_)
      fail("expected an identifier");
    return s_.substr(start, p_ - start);
  }

  long integer()
  {
    skip();
    const std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_])))
      ++p_;
    if (start == p_)
      fail("expected an integer");
    return std::stol(s_.substr(start, p_ - start));
  }

  int index(const std::string& text) const
  {
    if (text == "l")
      return rs_->rank();
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("bad index '" + text + "'");
    const int i = std::stoi(text);
    if (i < 1 || i > rs_->rank())
      fail("index " + text + " out of range 1.." + std::to_string(rs_->rank()));
    return i;
  }

  // "eps_3" -> {"eps", 3}
  std::pair<std::string, int> indexed(const std::string& id) const
  {
    const auto us = id.find('_');
    if (us == std::string::npos)
      return {id, 0};
    return {id.substr(0, us), index(id.substr(us + 1))};
  }

  Vec padded(const Vec& v) const { return resize_vec(v, lat_->dim()); }

  Vec coweight_in_lattice(int i) const
  {
    const Vec e = padded(rs_->coweight(i));
    if (!lat_->contains(e))
      fail("eps_" + std::to_string(i) + " is not in the cocharacter lattice");
    return e;
  }

  TitsElement expr()
  {
    TitsElement x = term();
    while (eat('*'))
      x = x * term();
    return x;
  }

  TitsElement term()
  {
    TitsElement x = atom();
    if (eat('^')) {
      const bool neg = eat('-');
      const long n = integer();
      x = power(x, neg ? -n : n);
    }
    return x;
  }

  TitsElement atom()
  {
    if (eat('('))  {
      TitsElement x = expr();
      expect(')');
      return x;
    }
    skip();
    if (p_ < s_.size() && s_[p_] == '1') {
      ++p_;
      return TitsElement::identity(lat_);
    }
    const std::string id = ident();
    if (id == "N") {
      expect('(');
      WeylElement w = weyl();
      expect(')');
      return TitsElement::springer(lat_, w);
    }
    if (id == "sgn") {
      expect('(');
      const Vec mu = cochar();
      expect(')');
      if (!lat_->contains(mu))
        fail("sign argument is not in the cocharacter lattice");
      return TitsElement::sign(lat_, mu);
    }
    const auto [name, i] = indexed(id);
    if (name == "rho" && i > 0) {
      const OmegaGroup om(lat_);
      return iota(om, om.index_of_coweight(i));
    }
    if (name == "eps" && i > 0)
      return TitsElement::torus(lat_, coweight_in_lattice(i));
    fail("unknown atom '" + id + "'");
  }

  WeylElement weyl()
  {
    skip();
    if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      std::vector<int> word;
      do
        word.push_back(index(std::to_string(integer())));
      while (eat(','));
      return WeylElement::from_word(rs_, word);
    }
    const std::string id = ident();
    if (id == "w0")
      return longest_element(rs_);
    const auto [name, i] = indexed(id);
    if (name == "w" && i > 0)
      return omega_weyl_part(rs_, i);
    if (name == "s" && i > 0)
      return WeylElement::simple_reflection(rs_, i);
    fail("unknown Weyl element '" + id + "'");
  }

  Vec cochar()
  {
    if (eat('[')) {
      Vec v;
      do {
        skip();
        const std::size_t start = p_;
        while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '-' || s_[p_] == '/'))
          ++p_;
        v.push_back(parse_rational(s_.substr(start, p_ - start)));
      } while (eat(','));
      expect(']');
      if (v.size() != lat_->dim())
        fail("vector has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(lat_->dim()));
      return v;
    }
    const auto [name, i] = indexed(ident());
    if (name == "eps" && i > 0)
      return padded(rs_->coweight(i));
    if (name == "coroot" && i > 0)
      return padded(rs_->simple_coroot(i));
    fail("expected eps_i, coroot_i or a vector");
  }

  const std::string& s_;
  LatticePtr lat_;
  RootSystemPtr rs_;
  std::size_t p_ = 0;
};

}  // namespace

TitsElement evaluate_expression(const std::string& text, const LatticePtr& lattice)
{
  return Parser(text, lattice).run();
}

}  // namespace omega_lift
