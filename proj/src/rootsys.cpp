#include "omega_lift/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "omega_lift/errors.hpp"

namespace omega_lift {
namespace {

Vec e_(std::size_t n, std::size_t i) { return unit_vec(n, i); }

std::vector<Vec> with_negatives(const std::vector<Vec>& pos)
{
  std::vector<Vec> out = pos;
  for (const auto& v : pos)
    out.push_back(-v);
  return out;
}

// +/- e_i +/- e_j, i < j
void add_pm_pairs(std::vector<Vec>& roots, std::size_t n, std::size_t upto)
{
  for (std::size_t i = 0; i < upto; ++i)
    for (std::size_t j = i + 1; j < upto; ++j) {
      roots.push_back(e_(n, i) + e_(n, j));
      roots.push_back(e_(n, i) - e_(n, j));
      roots.push_back(e_(n, j) - e_(n, i));
      roots.push_back(-(e_(n, i) + e_(n, j)));
    }
}

std::vector<Vec> e8_roots()
{
  std::vector<Vec> roots;
  add_pm_pairs(roots, 8, 8);
  const Rational h(1, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0)
      continue;
    Vec v(8);
    for (std::size_t i = 0; i < 8; ++i)
      v[i] = (mask >> i) & 1u ? -h : h;
    roots.push_back(v);
  }
  return roots;
}

// Gaussian elimination over Q; throws InternalError on a singular matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a)
{
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0)
      ++p;
    if (p == n)
      throw InternalError("singular Gram matrix of simple roots");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0)
        continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(char c)
{
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G')
    throw std::invalid_argument(std::string("unknown Cartan family '") + c + "'");
  return static_cast<Family>(c - 'A');
}

std::string CartanType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

CartanType parse_cartan_type(const std::string& text)
{
  if (text.size() < 2)
    throw std::invalid_argument("malformed Cartan type '" + text + "'");
  CartanType t{parse_family(text[0]), 0};
  try {
    std::size_t used = 0;
    t.rank = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1)
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed Cartan type '" + text + "'");
  }
  return t;
}

void validate(const CartanType& t, int rank_cap)
{
  const int l = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = l >= 1; break;
    case Family::B:
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("inadmissible Cartan type " + t.name());
  if (l > rank_cap)
    throw std::invalid_argument("rank of " + t.name() + " exceeds the configured cap " +
                                std::to_string(rank_cap));
}

std::shared_ptr<const RootSystem> RootSystem::build(const CartanType& t, int rank_cap)
{
  validate(t, rank_cap);
  const auto l = static_cast<std::size_t>(t.rank);
  std::vector<Vec> simple;
  std::vector<Vec> roots;
  std::size_t n = l;

  switch (t.family) {
    case Family::A:
      n = l + 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j)
            roots.push_back(e_(n, i) - e_(n, j));
      for (std::size_t i = 0; i < l; ++i)
        simple.push_back(e_(n, i) - e_(n, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      add_pm_pairs(roots, n, n);
      if (t.family != Family::D) {
        const Rational k = t.family == Family::B ? 1 : 2;
        for (std::size_t i = 0; i < n; ++i) {
          roots.push_back(k * e_(n, i));
          roots.push_back(-(k * e_(n, i)));
        }
      }
      for (std::size_t i = 0; i + 1 < l; ++i)
        simple.push_back(e_(n, i) - e_(n, i + 1));
      if (t.family == Family::B)
        simple.push_back(e_(n, l - 1));
      else if (t.family == Family::C)
        simple.push_back(Rational(2) * e_(n, l - 1));
      else
        simple.push_back(e_(n, l - 2) + e_(n, l - 1));
      break;
    }
    case Family::E: {
      n = 8;
      const Rational h(1, 2);
      simple.push_back(Vec{h, -h, -h, -h, -h, -h, -h, h});
      simple.push_back(e_(8, 0) + e_(8, 1));
      for (std::size_t i = 1; i < 7; ++i)
        simple.push_back(e_(8, i) - e_(8, i - 1));
      simple.resize(l);
      std::vector<Vec> constraints;
      if (l <= 7)
        constraints.push_back(e_(8, 6) + e_(8, 7));
      if (l == 6)
        constraints.push_back(e_(8, 5) - e_(8, 6));
      for (const auto& r : e8_roots()) {
        bool keep = true;
        for (const auto& c : constraints)
          keep = keep && sgn(dot(r, c)) == 0;
        if (keep)
          roots.push_back(r);
      }
      break;
    }
    case Family::F: {
      n = 4;
      add_pm_pairs(roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        roots.push_back(e_(4, i));
        roots.push_back(-e_(4, i));
      }
      const Rational h(1, 2);
      for (unsigned mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (std::size_t i = 0; i < 4; ++i)
          v[i] = (mask >> i) & 1u ? -h : h;
        roots.push_back(v);
      }
      simple = {e_(4, 1) - e_(4, 2), e_(4, 2) - e_(4, 3), e_(4, 3), Vec{h, -h, -h, -h}};
      break;
    }
    case Family::G: {
      n = 3;
      std::vector<Vec> pos;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          pos.push_back(e_(3, i) - e_(3, j));
      for (std::size_t i = 0; i < 3; ++i)
        pos.push_back(Rational(3) * e_(3, i) - Vec{1, 1, 1});
      roots = with_negatives(pos);
      simple = {e_(3, 0) - e_(3, 1), Vec{-2, 1, 1}};
      break;
    }
  }

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = t;
  rs->dim_ = n;
  rs->finish(std::move(simple), std::move(roots));
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::empty()
{
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->dim_ = 0;
  return rs;
}

void RootSystem::finish(std::vector<Vec> simple, std::vector<Vec> all_roots)
{
  const std::size_t l = simple.size();
  simple_ = std::move(simple);

  std::vector<std::vector<Rational>> gram(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      gram[i][j] = dot(simple_[i], simple_[j]);
  const auto ginv = invert(gram);
  coweights_.assign(l, zero_vec(dim_));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k)
      coweights_[i] += ginv[i][k] * simple_[k];

  struct Entry {
    Vec root;
    std::vector<Integer> coeff;
    Integer height;
  };
  std::vector<Entry> positive;
  std::set<Vec> seen;
  for (const auto& r : all_roots) {
    if (!seen.insert(r).second)
      throw InternalError("duplicate root in realization of " + name());
    std::vector<Integer> c(l);
    int sign = 0;
    Integer h = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const Rational q = dot(r, coweights_[j]);
      if (q.get_den() != 1)
        throw InternalError("non-integral simple-root coefficient in " + name());
      c[j] = q.get_num();
      h += c[j];
      const int s = sgn(c[j]);
      if (s != 0) {
        if (sign != 0 && s != sign)
          throw InternalError("root with mixed-sign coefficients in " + name());
        sign = s;
      }
    }
    if (sign > 0)
      positive.push_back({r, c, h});
  }
  if (positive.size() * 2 != all_roots.size())
    throw InternalError("root set is not symmetric in " + name());

  std::sort(positive.begin(), positive.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height)
      return a.height < b.height;
    return a.coeff > b.coeff;
  });

  const std::size_t np = positive.size();
  roots_.clear();
  coeffs_.clear();
  for (const auto& e : positive) {
    roots_.push_back(e.root);
    coeffs_.push_back(e.coeff);
  }
  for (std::size_t k = 0; k < np; ++k) {
    roots_.push_back(-roots_[k]);
    std::vector<Integer> c = coeffs_[k];
    for (auto& x : c)
      x = -x;
    coeffs_.push_back(c);
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    lookup_.emplace(roots_[k], k);
    coroots_.push_back(coroot_of(roots_[k]));
  }

  simple_idx_.clear();
  for (const auto& a : simple_) {
    auto it = lookup_.find(a);
    if (it == lookup_.end() || it->second >= np)
      throw InternalError("simple root missing from the positive system of " + name());
    simple_idx_.push_back(it->second);
  }

  if (np > 0) {
    highest_idx_ = np - 1;
    for (std::size_t k = 0; k < np; ++k)
      for (std::size_t j = 0; j < l; ++j)
        if (coeffs_[highest_idx_][j] < coeffs_[k][j])
          throw InternalError("highest root does not dominate in " + name());
  }

  srefl_.assign(l, std::vector<std::uint16_t>(roots_.size()));
  for (std::size_t j = 0; j < l; ++j) {
    const Vec& a = simple_[j];
    const Vec& av = coroots_[simple_idx_[j]];
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const Vec img = roots_[k] - dot(roots_[k], av) * a;
      srefl_[j][k] = static_cast<std::uint16_t>(index_of(img));
    }
  }
}

std::string RootSystem::name() const { return type_ ? type_->name() : std::string("T"); }

std::size_t RootSystem::negate_index(std::size_t idx) const
{
  const std::size_t np = num_positive();
  return idx < np ? idx + np : idx - np;
}

std::optional<std::size_t> RootSystem::find(const Vec& v) const
{
  auto it = lookup_.find(v);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const Vec& v) const
{
  auto it = lookup_.find(v);
  if (it == lookup_.end())
    throw std::invalid_argument("not a root of " + name() + ": " + format_vec(v));
  return it->second;
}

std::vector<Rational> RootSystem::simple_coefficients(const Vec& v) const
{
  const Vec x = resize_vec(Vec(v.begin(), v.begin() + static_cast<long>(std::min(v.size(), dim_))), dim_);
  std::vector<Rational> c(simple_.size());
  for (std::size_t j = 0; j < simple_.size(); ++j)
    c[j] = dot(x, coweights_[j]);
  return c;
}

int RootSystem::height(std::size_t idx) const
{
  Integer h = 0;
  for (const auto& c : coeffs_.at(idx))
    h += c;
  return static_cast<int>(h.get_si());
}

std::vector<int> RootSystem::minuscule() const
{
  std::vector<int> out;
  if (roots_.empty())
    return out;
  for (std::size_t i = 0; i < coweights_.size(); ++i)
    if (dot(highest_root(), coweights_[i]) == 1)
      out.push_back(static_cast<int>(i + 1));
  return out;
}

Vec RootSystem::project(const Vec& x) const
{
  if (x.size() < dim_)
    throw std::invalid_argument("project: vector shorter than the ambient space");
  const Vec head(x.begin(), x.begin() + static_cast<long>(dim_));
  Vec out = zero_vec(dim_);
  for (std::size_t j = 0; j < simple_.size(); ++j) {
    const Rational c = dot(head, coweights_[j]);
    if (sgn(c) != 0)
      out += c * simple_[j];
  }
  return out;
}

std::vector<Rational> RootSystem::coweight_coordinates(const Vec& x) const
{
  const Vec head(x.begin(), x.begin() + static_cast<long>(std::min(x.size(), dim_)));
  std::vector<Rational> c(simple_.size());
  for (std::size_t j = 0; j < simple_.size(); ++j)
    c[j] = dot(resize_vec(head, dim_), simple_[j]);
  return c;
}

Rational pairing(const Vec& x, const Vec& y) { return dot(x, y); }

Vec coroot_of(const Vec& alpha)
{
  const Rational n = dot(alpha, alpha);
  if (sgn(n) == 0)
    throw std::invalid_argument("coroot of the zero vector");
  return Rational(2) / n * alpha;
}

// ---------------------------------------------------------------- lattices

CocharLattice::CocharLattice(RootSystemPtr rs, std::size_t dim, const std::vector<Vec>& generators)
    : rs_(std::move(rs)), dim_(dim)
{
  if (!rs_)
    throw std::invalid_argument("CocharLattice: null root system");
  if (dim_ < rs_->dim())
    throw std::invalid_argument("CocharLattice: ambient dimension below that of the root system");
  scale_ = 1;
  for (const auto& g : generators) {
    if (g.size() != dim_)
      throw std::invalid_argument("CocharLattice: generator of wrong dimension");
    const Integer d = lcm_of_denominators(g);
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), d.get_mpz_t());
  }
  intmat::IntMatrix rows;
  for (const auto& g : generators) {
    intmat::IntVec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const Rational q = g[i] * scale_;
      r[i] = q.get_num();
    }
    rows.push_back(std::move(r));
  }
  echelon_ = intmat::hermite_rows(std::move(rows), dim_);
  // shrink the scale to the smallest one that keeps the basis integral
  Integer g = 0;
  for (const auto& r : echelon_)
    for (const auto& x : r)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scale_.get_mpz_t());
  if (g > 1) {
    scale_ /= g;
    for (auto& r : echelon_)
      for (auto& x : r)
        x /= g;
  }
  for (const auto& r : echelon_) {
    std::size_t p = 0;
    while (sgn(r[p]) == 0)
      ++p;
    pivots_.push_back(p);
    Vec b(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      b[i] = Rational(r[i], scale_);
    for (auto& q : b)
      q.canonicalize();
    basis_.push_back(std::move(b));
  }
  coroot_bits_.reserve(rs_->num_roots());
  for (std::size_t k = 0; k < rs_->num_roots(); ++k) {
    const Vec c = resize_vec(rs_->coroot(k), dim_);
    if (!contains(c))
      throw std::invalid_argument("CocharLattice: coroot " + format_vec(rs_->coroot(k)) +
                                  " is not in the lattice");
    coroot_bits_.push_back(mod2_class(c));
  }
}

std::optional<intmat::IntVec> CocharLattice::coordinates(const Vec& v) const
{
  if (v.size() != dim_)
    throw std::invalid_argument("CocharLattice: vector of wrong dimension");
  intmat::IntVec w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Rational q = v[i] * scale_;
    if (q.get_den() != 1)
      return std::nullopt;
    w[i] = q.get_num();
  }
  intmat::IntVec c(echelon_.size());
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(w[p]) == 0)
      continue;
    if (!mpz_divisible_p(w[p].get_mpz_t(), echelon_[k][p].get_mpz_t()))
      return std::nullopt;
    c[k] = w[p] / echelon_[k][p];
    for (std::size_t i = p; i < dim_; ++i)
      if (sgn(echelon_[k][i]) != 0)
        w[i] -= c[k] * echelon_[k][i];
  }
  for (const auto& x : w)
    if (sgn(x) != 0)
      return std::nullopt;
  return c;
}

bool CocharLattice::contains(const Vec& v) const { return coordinates(v).has_value(); }

Vec CocharLattice::from_coordinates(const intmat::IntVec& c) const
{
  if (c.size() != basis_.size())
    throw std::invalid_argument("CocharLattice: coordinate vector of wrong length");
  Vec v = zero_vec(dim_);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0)
      v += Rational(c[k]) * basis_[k];
  return v;
}

std::vector<std::uint8_t> CocharLattice::mod2_class(const Vec& v) const
{
  auto c = coordinates(v);
  if (!c)
    throw std::invalid_argument("mod2_class: " + format_vec(v) + " is not in the lattice");
  std::vector<std::uint8_t> bits(c->size());
  for (std::size_t k = 0; k < c->size(); ++k)
    bits[k] = mpz_odd_p((*c)[k].get_mpz_t()) ? 1 : 0;
  return bits;
}

Vec CocharLattice::sign_representative(const std::vector<std::uint8_t>& bits) const
{
  if (bits.size() != basis_.size())
    throw std::invalid_argument("sign_representative: wrong number of bits");
  Vec v = zero_vec(dim_);
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k])
      v += basis_[k];
  return v;
}

bool operator==(const CocharLattice& a, const CocharLattice& b)
{
  return a.rs_ == b.rs_ && a.dim_ == b.dim_ && a.scale_ == b.scale_ && a.echelon_ == b.echelon_;
}

LatticePtr lattice_for_isogeny(const RootSystemPtr& rs, const std::vector<int>& coweights)
{
  const auto minus = rs->minuscule();
  std::vector<Vec> gens;
  for (int j = 1; j <= rs->rank(); ++j)
    gens.push_back(rs->simple_coroot(j));
  for (int i : coweights) {
    if (i < 1 || i > rs->rank())
      throw std::invalid_argument("coweight index " + std::to_string(i) + " out of range for " +
                                  rs->name());
    if (std::find(minus.begin(), minus.end(), i) == minus.end())
      throw std::invalid_argument("coweight eps_" + std::to_string(i) + " of " + rs->name() +
                                  " is not minuscule");
    gens.push_back(rs->coweight(i));
  }
  return std::make_shared<const CocharLattice>(rs, rs->dim(), gens);
}

LatticePtr coroot_lattice(const RootSystemPtr& rs) { return lattice_for_isogeny(rs, {}); }

LatticePtr coweight_lattice(const RootSystemPtr& rs)
{
  std::vector<Vec> gens = rs->coweights();
  return std::make_shared<const CocharLattice>(rs, rs->dim(), gens);
}

// ---------------------------------------------------------------- quotient

LatticeQuotient::LatticeQuotient(LatticePtr lattice) : lattice_(std::move(lattice))
{
  const auto& rs = *lattice_->root_system();
  const std::size_t r = lattice_->rank();
  intmat::IntMatrix m;
  for (int j = 1; j <= rs.rank(); ++j) {
    auto c = lattice_->coordinates(resize_vec(rs.simple_coroot(j), lattice_->dim()));
    if (!c)
      throw InternalError("simple coroot outside the lattice");
    m.push_back(*c);
  }
  const auto snf = intmat::smith(m, r);

  std::vector<std::size_t> torsion_cols;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.diagonal[i] > 1) {
      torsion_cols.push_back(i);
      factors_.push_back(snf.diagonal[i]);
    }
  free_rank_ = r - snf.rank;

  // free coordinates: canonical Hermite form of the functionals they define
  intmat::IntMatrix free_fns;
  for (std::size_t i = snf.rank; i < r; ++i) {
    intmat::IntVec f(r);
    for (std::size_t k = 0; k < r; ++k)
      f[k] = snf.right[k][i];
    free_fns.push_back(std::move(f));
  }
  free_fns = intmat::hermite_rows(std::move(free_fns), r);
  if (free_fns.size() != free_rank_)
    throw InternalError("free part of the quotient lost rank");

  const std::size_t ncls = factors_.size() + free_rank_;
  projection_.assign(r, intmat::IntVec(ncls, Integer(0)));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t t = 0; t < torsion_cols.size(); ++t)
      projection_[k][t] = snf.right[k][torsion_cols[t]];
    for (std::size_t f = 0; f < free_rank_; ++f)
      projection_[k][factors_.size() + f] = free_fns[f][k];
  }
  for (std::size_t c = 0; c < ncls; ++c) {
    intmat::IntVec target(ncls, Integer(0));
    target[c] = 1;
    auto x = intmat::solve_left(projection_, ncls, target);
    if (!x)
      throw InternalError("quotient map is not surjective");
    lifts_.push_back(lattice_->from_coordinates(*x));
  }
}

Integer LatticeQuotient::order() const
{
  if (!is_finite())
    throw std::logic_error("LatticeQuotient::order: quotient is infinite");
  Integer n = 1;
  for (const auto& d : factors_)
    n *= d;
  return n;
}

std::vector<Integer> LatticeQuotient::moduli() const
{
  std::vector<Integer> m = factors_;
  m.resize(factors_.size() + free_rank_, Integer(0));
  return m;
}

intmat::IntVec LatticeQuotient::normalize(intmat::IntVec c) const
{
  for (std::size_t t = 0; t < factors_.size(); ++t)
    mpz_fdiv_r(c[t].get_mpz_t(), c[t].get_mpz_t(), factors_[t].get_mpz_t());
  return c;
}

intmat::IntVec LatticeQuotient::class_of(const Vec& v) const
{
  auto c = lattice_->coordinates(v);
  if (!c)
    throw std::invalid_argument("class_of: " + format_vec(v) + " is not in the lattice");
  return normalize(intmat::row_times(*c, projection_, factors_.size() + free_rank_));
}

intmat::IntVec LatticeQuotient::add(const intmat::IntVec& a, const intmat::IntVec& b) const
{
  intmat::IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] + b.at(i);
  return normalize(std::move(c));
}

intmat::IntVec LatticeQuotient::zero() const
{
  return intmat::IntVec(factors_.size() + free_rank_, Integer(0));
}

Vec LatticeQuotient::lift(const intmat::IntVec& c) const
{
  if (c.size() != lifts_.size())
    throw std::invalid_argument("lift: class of wrong length");
  Vec v = zero_vec(lattice_->dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0)
      v += Rational(c[i]) * lifts_[i];
  return v;
}

std::vector<intmat::IntVec> LatticeQuotient::elements() const
{
  if (!is_finite())
    throw std::logic_error("LatticeQuotient::elements: quotient is infinite");
  std::vector<intmat::IntVec> out{zero()};
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    std::vector<intmat::IntVec> next;
    for (const auto& c : out)
      for (Integer k = 0; k < factors_[t]; ++k) {
        auto d = c;
        d[t] = k;
        next.push_back(d);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- root data

RootDatum RootDatum::make(std::string name, RootSystemPtr rs, std::size_t dim,
                          const std::vector<Vec>& generators)
{
  RootDatum d;
  d.name = std::move(name);
  d.rs = std::move(rs);
  d.lattice = std::make_shared<const CocharLattice>(d.rs, dim, generators);
  const auto& basis = d.lattice->basis();
  intmat::IntMatrix pair(basis.size(), intmat::IntVec(static_cast<std::size_t>(d.rs->rank())));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int j = 1; j <= d.rs->rank(); ++j) {
      const Rational q = dot(basis[k], resize_vec(d.rs->simple_root(j), dim));
      if (q.get_den() != 1)
        throw std::invalid_argument("root datum " + d.name + ": non-integral root pairing");
      pair[k][static_cast<std::size_t>(j - 1)] = q.get_num();
    }
  for (const auto& x : intmat::left_kernel(pair, static_cast<std::size_t>(d.rs->rank())))
    d.central_cochars.push_back(d.lattice->from_coordinates(x));
  return d;
}

RootDatum RootDatum::almost_simple(std::string name, LatticePtr lattice)
{
  RootDatum d = make(std::move(name), lattice->root_system(), lattice->dim(), lattice->basis());
  d.lattice = std::move(lattice);
  return d;
}

RootDatum RootDatum::general_linear(int n)
{
  if (n < 1)
    throw std::invalid_argument("GL_n needs n >= 1");
  if (n == 1) {
    RootDatum d = split_torus(1);
    d.name = "GL1";
    return d;
  }
  auto rs = RootSystem::build({Family::A, n - 1});
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(unit_vec(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  return make("GL" + std::to_string(n), rs, static_cast<std::size_t>(n), gens);
}

RootDatum RootDatum::general_symplectic(int n)
{
  auto rs = RootSystem::build({Family::C, n});
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(unit_vec(dim, static_cast<std::size_t>(i)));
  // similitude cocharacter t -> diag(1,...,1, t,...,t) in the centred coordinates
  Vec sim(dim, Rational(-1, 2));
  sim[dim - 1] = Rational(1, 2);
  gens.push_back(sim);
  return make("GSp" + std::to_string(2 * n), rs, dim, gens);
}

RootDatum RootDatum::split_torus(int dim)
{
  if (dim < 0)
    throw std::invalid_argument("negative torus dimension");
  std::vector<Vec> gens;
  for (int i = 0; i < dim; ++i)
    gens.push_back(unit_vec(static_cast<std::size_t>(dim), static_cast<std::size_t>(i)));
  return make("Gm^" + std::to_string(dim), RootSystem::empty(), static_cast<std::size_t>(dim), gens);
}

RootDatum RootDatum::times_torus(int k) const
{
  if (k < 0)
    throw std::invalid_argument("negative torus dimension");
  const std::size_t dim = lattice->dim() + static_cast<std::size_t>(k);
  std::vector<Vec> gens;
  for (const auto& b : lattice->basis())
    gens.push_back(resize_vec(b, dim));
  for (std::size_t i = lattice->dim(); i < dim; ++i)
    gens.push_back(unit_vec(dim, i));
  return make(name + "xGm^" + std::to_string(k), rs, dim, gens);
}

bool RootDatum::has_connected_center() const
{
  // X^*(T) = Hom(Lambda, Z); the root lattice sits in it through the pairing.
  const auto& basis = lattice->basis();
  intmat::IntMatrix rows;
  for (int j = 1; j <= rs->rank(); ++j) {
    intmat::IntVec r(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      r[k] = dot(basis[k], resize_vec(rs->simple_root(j), dim())).get_num();
    rows.push_back(std::move(r));
  }
  const auto snf = intmat::smith(rows, basis.size());
  for (const auto& d : snf.diagonal)
    if (d != 1)
      return false;
  return true;
}

Vec RootDatum::to_adjoint(const Vec& lambda) const { return rs->project(lambda); }

}  // namespace omega_lift
