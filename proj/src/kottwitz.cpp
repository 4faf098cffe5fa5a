#include "omega_lift/kottwitz.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "omega_lift/errors.hpp"

namespace omega_lift {
namespace {

bool all_true(const std::optional<bool>& b) { return !b || *b; }

std::string class_label(const intmat::IntVec& c)
{
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? "," : "") + c[i].get_str();
  return s + "]";
}

// Every integer vector with entries in [-r, r], in lexicographic order.
std::vector<intmat::IntVec> box(std::size_t n, int r)
{
  std::vector<intmat::IntVec> out{intmat::IntVec()};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<intmat::IntVec> next;
    for (const auto& v : out)
      for (int x = -r; x <= r; ++x) {
        auto w = v;
        w.push_back(Integer(x));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

// s(c) = prod_k s(e_k)^{c_k} for a section given on free generators.
TitsElement on_class(const LatticePtr& lattice, const std::vector<TitsElement>& gens, const intmat::IntVec& c)
{
  TitsElement x = TitsElement::identity(lattice);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (sgn(c[k]) != 0)
      x = x * power(gens[k], c[k].get_si());
  return x;
}

intmat::IntVec add_vec(const intmat::IntVec& a, const intmat::IntVec& b)
{
  intmat::IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] + b[i];
  return c;
}

std::uint64_t fnv1a(const std::string& s)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Checks shared by the free-quotient strategies; gens are the images of the
// unit classes, radius bounds the classes examined.
void check_free_section(SectionCertificate& cert, const LatticeQuotient& q, const std::vector<TitsElement>& gens,
                        int radius)
{
  const auto& lat = cert.lattice;
  const std::size_t n = gens.size();
  const auto classes = box(n, radius);

  bool kappa_ok = true;
  for (const auto& c : classes) {
    const TitsElement x = on_class(lat, gens, c);
    if (kappa(q, x) != q.normalize(c)) {
      kappa_ok = false;
      cert.witnesses.push_back({"kappa_identity", "kappa(s(c)) = c", {class_label(c)}, x, std::nullopt, std::nullopt});
    }
  }
  cert.checks.kappa_identity = kappa_ok;

  bool commute = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const TitsElement ab = gens[a] * gens[b];
      const TitsElement ba = gens[b] * gens[a];
      if (!(ab == ba)) {
        commute = false;
        cert.witnesses.push_back({"generators_commute", "s(e_a) s(e_b) = s(e_b) s(e_a)",
                                  {std::to_string(a + 1), std::to_string(b + 1)}, ab, ba, std::nullopt});
      }
    }
  if (n > 1)
    cert.checks.generators_commute = commute;

  bool hom = true;
  const auto small = box(n, std::min(radius, 1));
  for (const auto& c : small)
    for (const auto& d : small) {
      const TitsElement lhs = on_class(lat, gens, c) * on_class(lat, gens, d);
      const TitsElement rhs = on_class(lat, gens, add_vec(c, d));
      if (!(lhs == rhs)) {
        hom = false;
        if (cert.witnesses.size() < 32)
          cert.witnesses.push_back({"homomorphy", "s(c) s(d) = s(c + d)", {class_label(c), class_label(d)}, lhs, rhs,
                                    std::nullopt});
      }
    }
  cert.checks.homomorphy = hom;
}

constexpr int kFreeRadius = 2;

}  // namespace

std::string to_string(Strategy s)
{
  switch (s) {
    case Strategy::trivial: return "trivial";
    case Strategy::cyclic_power: return "cyclic_power";
    case Strategy::direct_iota: return "direct_iota";
    case Strategy::free_splitting: return "free_splitting";
    case Strategy::connected_center_lift: return "connected_center_lift";
  }
  throw InternalError("unknown strategy");
}

bool Checks::passed() const
{
  return all_true(kappa_identity) && all_true(homomorphy) && all_true(orbit_sums_zero) &&
         all_true(tits_powers_trivial) && all_true(closed_form_powers) && all_true(orders_preserved) &&
         all_true(weyl_parts_trivial) && all_true(generators_commute) && all_true(diagram_commutes);
}

bool SectionCertificate::passed() const { return checks.passed() && (!sampling || sampling->associative); }

intmat::IntVec kappa(const LatticeQuotient& q, const TitsElement& x) { return q.class_of(x.lambda()); }

TitsElement iota(const OmegaGroup& omega, std::size_t k)
{
  const auto& m = omega.member(k);
  return TitsElement(omega.lattice(), m.elem.lambda, SignBits(omega.lattice()->rank(), 0), m.elem.w);
}

std::string member_label(const OmegaGroup& omega, std::size_t k)
{
  const int i = omega.member(k).coweight;
  return i == 0 ? std::string("1") : "rho_" + std::to_string(i);
}

IotaReport iota_homomorphy_report(const OmegaGroup& omega)
{
  IotaReport r;
  for (std::size_t a = 0; a < omega.size(); ++a)
    for (std::size_t b = 0; b < omega.size(); ++b) {
      const TitsElement lhs = iota(omega, a) * iota(omega, b);
      const TitsElement rhs = iota(omega, omega.product(a, b));
      if (!(lhs == rhs)) {
        r.homomorphic = false;
        r.witnesses.push_back({"iota_homomorphic", "iota(a) iota(b) = iota(ab)",
                               {member_label(omega, a), member_label(omega, b)}, lhs, rhs, std::nullopt});
      }
    }
  return r;
}

SectionCertificate build_section(const LatticePtr& lattice, const std::string& isogeny)
{
  SectionCertificate cert;
  const auto& rs = lattice->root_system();
  cert.type = rs->cartan_type() ? std::string(1, family_letter(rs->cartan_type()->family)) : rs->name();
  cert.rank = rs->rank();
  cert.isogeny = isogeny;
  cert.lattice = lattice;
  cert.omega.emplace(lattice);
  const OmegaGroup& om = *cert.omega;
  cert.invariant_factors = om.quotient().invariant_factors();
  cert.free_rank = 0;
  const std::size_t n = om.size();
  const auto& q = om.quotient();

  std::vector<TitsElement> s;
  if (n == 1) {
    cert.strategy = Strategy::trivial;
    s.push_back(TitsElement::identity(lattice));
  } else if (om.is_cyclic()) {
    cert.strategy = Strategy::cyclic_power;
    const std::size_t g = *om.canonical_generator();
    const TitsElement x = iota(om, g);
    s.assign(n, TitsElement::identity(lattice));
    std::size_t k = 0;
    TitsElement y = TitsElement::identity(lattice);
    for (std::size_t j = 0; j < n; ++j) {
      s[k] = y;
      k = om.product(k, g);
      y = y * x;
    }
    if (!y.is_identity())
      cert.witnesses.push_back({"tits_powers_trivial", "iota(g)^n = 1", {member_label(om, g), std::to_string(n)}, y,
                                TitsElement::identity(lattice), std::nullopt});
  } else if (q.invariant_factors() == std::vector<Integer>{2, 2}) {
    cert.strategy = Strategy::direct_iota;
    for (std::size_t k = 0; k < n; ++k)
      s.push_back(iota(om, k));
  } else {
    throw InternalError("Omega is neither cyclic nor a Klein four-group");
  }
  for (std::size_t k = 0; k < n; ++k)
    cert.section.push_back({member_label(om, k), k, om.member(k).kappa, s[k]});

  bool kappa_ok = true;
  for (std::size_t k = 0; k < n; ++k)
    if (kappa(q, s[k]) != om.member(k).kappa) {
      kappa_ok = false;
      cert.witnesses.push_back({"kappa_identity", "kappa(s(a)) = a", {member_label(om, k)}, s[k], std::nullopt,
                                std::nullopt});
    }
  cert.checks.kappa_identity = kappa_ok;

  bool hom = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const TitsElement lhs = s[a] * s[b];
      const TitsElement& rhs = s[om.product(a, b)];
      if (!(lhs == rhs)) {
        hom = false;
        cert.witnesses.push_back({"homomorphy", "s(a) s(b) = s(ab)", {member_label(om, a), member_label(om, b)}, lhs,
                                  rhs, std::nullopt});
      }
    }
  cert.checks.homomorphy = hom;

  IotaReport rep = iota_homomorphy_report(om);
  cert.checks.iota_homomorphic = rep.homomorphic;
  for (auto& w : rep.witnesses)
    cert.witnesses.push_back(std::move(w));

  bool orbit_ok = true, powers_ok = true, closed_ok = true, orders_ok = true;
  for (std::size_t k = 1; k < n; ++k) {
    const auto& m = om.member(k);
    const int r = m.order;
    const Vec osum = orbit_sum(m.elem.w, m.elem.lambda, m.elem.w.order());
    if (!is_zero(osum)) {
      orbit_ok = false;
      cert.witnesses.push_back({"orbit_sums_zero", "sum_j w^j(eps) = 0", {member_label(om, k)}, std::nullopt,
                                std::nullopt, osum});
    }
    const TitsElement x = iota(om, k);
    const TitsElement xr = power(x, r);
    if (!xr.is_identity()) {
      powers_ok = false;
      cert.witnesses.push_back({"tits_powers_trivial", "iota(a)^ord(a) = 1", {member_label(om, k)}, xr,
                                TitsElement::identity(lattice), std::nullopt});
    }
    for (long e = 0; e <= r + 1; ++e) {
      const TitsElement it = power(x, e);
      const TitsElement cf = power_closed_form(x, e);
      if (!(it == cf)) {
        closed_ok = false;
        cert.witnesses.push_back({"closed_form_powers", "iterated power = closed form",
                                  {member_label(om, k), std::to_string(e)}, it, cf, std::nullopt});
      }
    }
    bool order_ok = m.elem.w.order() == r;
    TitsElement y = s[k];
    for (int e = 1; e < r; ++e) {
      order_ok = order_ok && !y.is_identity();
      y = y * s[k];
    }
    if (!order_ok || !y.is_identity()) {
      orders_ok = false;
      cert.witnesses.push_back({"orders_preserved", "ord s(a) = ord a = ord w", {member_label(om, k)}, s[k],
                                std::nullopt, std::nullopt});
    }
  }
  cert.checks.orbit_sums_zero = orbit_ok;
  cert.checks.tits_powers_trivial = powers_ok;
  cert.checks.closed_form_powers = closed_ok;
  cert.checks.orders_preserved = orders_ok;
  return cert;
}

SectionCertificate free_section(const RootDatum& datum)
{
  const LatticeQuotient q(datum.lattice);
  if (!q.invariant_factors().empty())
    throw std::invalid_argument("free_section: " + datum.name + " has torsion in Lambda / Q^vee");
  if (q.free_rank() == 0)
    throw std::invalid_argument("free_section: Lambda / Q^vee of " + datum.name +
                                " is trivial; Omega has no free part");
  SectionCertificate cert;
  cert.type = datum.name;
  cert.rank = datum.rs->rank();
  cert.isogeny = "datum";
  cert.lattice = datum.lattice;
  cert.free_rank = q.free_rank();
  cert.strategy = Strategy::free_splitting;

  std::vector<TitsElement> gens;
  for (std::size_t k = 0; k < q.free_rank(); ++k) {
    intmat::IntVec c = q.zero();
    c[k] = 1;
    gens.push_back(TitsElement::torus(datum.lattice, q.lift(c)));
    cert.section.push_back({"e_" + std::to_string(k + 1), std::nullopt, c, gens.back()});
  }
  bool trivial_weyl = true;
  for (const auto& g : gens)
    trivial_weyl = trivial_weyl && g.weyl().is_identity();
  cert.checks.weyl_parts_trivial = trivial_weyl;
  check_free_section(cert, q, gens, kFreeRadius);
  return cert;
}

SectionCertificate good_section(const RootDatum& datum)
{
  if (datum.rs->rank() == 0)
    return free_section(datum);
  if (!datum.has_connected_center())
    throw std::invalid_argument("good_section: the center of " + datum.name + " is not connected");
  const LatticeQuotient q(datum.lattice);
  if (!q.invariant_factors().empty() || q.free_rank() == 0)
    throw std::invalid_argument("good_section: Lambda / Q^vee of " + datum.name + " is not free of positive rank");

  SectionCertificate cert;
  cert.type = datum.name;
  cert.rank = datum.rs->rank();
  cert.isogeny = "datum";
  cert.lattice = datum.lattice;
  cert.free_rank = q.free_rank();
  cert.strategy = Strategy::connected_center_lift;

  const LatticePtr lat_ad = coweight_lattice(datum.rs);
  const SectionCertificate ad = build_section(lat_ad, "adjoint");
  const OmegaGroup& om_ad = *ad.omega;
  const auto& q_ad = om_ad.quotient();
  const std::size_t dim = datum.dim();

  auto pr_element = [&](const TitsElement& x) {
    const Vec mu = datum.to_adjoint(datum.lattice->sign_representative(x.sign_bits()));
    return TitsElement(lat_ad, datum.to_adjoint(x.lambda()), lat_ad->mod2_class(mu), x.weyl());
  };
  auto pr_omega = [&](const intmat::IntVec& c) {
    return om_ad.index_of_class(q_ad.class_of(datum.to_adjoint(q.lift(c))));
  };

  // classes of the central cocharacters, for the kappa adjustment
  intmat::IntMatrix central_classes;
  for (const auto& z : datum.central_cochars)
    central_classes.push_back(q.class_of(z));

  std::vector<TitsElement> gens;
  bool lifted = true;
  for (std::size_t k = 0; k < q.free_rank(); ++k) {
    intmat::IntVec sigma = q.zero();
    sigma[k] = 1;
    const std::size_t idx = pr_omega(sigma);
    const TitsElement& target = ad.section[idx].element;

    Vec lam = q.lift(sigma);
    lam += resize_vec(target.lambda() - datum.to_adjoint(lam), dim);
    intmat::IntVec defect = q.zero();
    const auto have = q.class_of(lam);
    for (std::size_t i = 0; i < defect.size(); ++i)
      defect[i] = sigma[i] - have[i];
    if (defect != q.zero()) {
      auto z = intmat::solve_left(central_classes, defect.size(), defect);
      if (!z) {
        lifted = false;
        cert.witnesses.push_back({"kappa_identity", "central adjustment exists", {"e_" + std::to_string(k + 1)},
                                  std::nullopt, std::nullopt, lam});
      } else {
        for (std::size_t j = 0; j < z->size(); ++j)
          lam += Rational((*z)[j]) * datum.central_cochars[j];
      }
    }

    std::optional<SignBits> mu;
    const std::size_t r = datum.lattice->rank();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r) && !mu; ++m) {
      SignBits bits(r);
      for (std::size_t b = 0; b < r; ++b)
        bits[b] = static_cast<std::uint8_t>((m >> b) & 1u);
      const Vec img = datum.to_adjoint(datum.lattice->sign_representative(bits));
      if (lat_ad->mod2_class(img) == target.sign_bits())
        mu = bits;
    }
    if (!mu) {
      lifted = false;
      cert.witnesses.push_back({"diagram_commutes", "sign class lifts through pr", {"e_" + std::to_string(k + 1)},
                                target, std::nullopt, std::nullopt});
      mu = SignBits(r, 0);
    }
    gens.emplace_back(datum.lattice, lam, *mu, target.weyl());
    cert.section.push_back({"e_" + std::to_string(k + 1), std::nullopt, sigma, gens.back()});
  }

  check_free_section(cert, q, gens, kFreeRadius);

  bool diagram = lifted;
  for (const auto& c : box(q.free_rank(), kFreeRadius)) {
    const TitsElement lhs = pr_element(on_class(datum.lattice, gens, c));
    const TitsElement& rhs = ad.section[pr_omega(c)].element;
    if (!(lhs == rhs)) {
      diagram = false;
      if (cert.witnesses.size() < 32)
        cert.witnesses.push_back({"diagram_commutes", "pr(s(c)) = s_ad(pr(c))", {class_label(c)}, lhs, rhs,
                                  std::nullopt});
    }
  }
  cert.checks.diagram_commutes = diagram && ad.passed();
  return cert;
}

std::optional<Witness> sample_associativity(const LatticePtr& lattice, std::uint64_t seed, int triples, int* checked)
{
  std::mt19937_64 rng(seed);
  for (int t = 0; t < triples; ++t) {
    const TitsElement x = random_tits_element(lattice, rng);
    const TitsElement y = random_tits_element(lattice, rng);
    const TitsElement z = random_tits_element(lattice, rng);
    const TitsElement lhs = (x * y) * z;
    const TitsElement rhs = x * (y * z);
    if (checked)
      *checked = t + 1;
    if (!(lhs == rhs))
      return Witness{"associativity", "(xy)z = x(yz)", {"sample " + std::to_string(t)}, lhs, rhs, std::nullopt};
  }
  return std::nullopt;
}

void attach_sampling(SectionCertificate& cert, std::uint64_t seed, int triples)
{
  const std::uint64_t key = fnv1a(cert.type + std::to_string(cert.rank) + ":" + cert.isogeny);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  const std::uint64_t stream = (std::uint64_t{words[0]} << 32) | words[1];

  Sampling s;
  s.seed = seed;
  s.triples = triples;
  if (auto w = sample_associativity(cert.lattice, stream, triples)) {
    s.associative = false;
    cert.witnesses.push_back(std::move(*w));
  }
  cert.sampling = s;
  cert.seed = seed;
}

}  // namespace omega_lift
