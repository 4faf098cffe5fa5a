#include "omega_lift/serialize.hpp"

namespace omega_lift {
namespace {

Json opt(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::string factors_text(const std::vector<Integer>& f, std::size_t free_rank)
{
  std::string s;
  for (const auto& d : f)
    s += (s.empty() ? "Z/" : "xZ/") + d.get_str();
  for (std::size_t k = 0; k < free_rank; ++k)
    s += s.empty() ? "Z" : "xZ";
  return s.empty() ? "1" : s;
}

}  // namespace

Json to_json(const Vec& v)
{
  Json a = Json::array();
  for (const auto& q : v)
    a.push_back(to_string(q));
  return a;
}

Json to_json(const intmat::IntVec& v)
{
  Json a = Json::array();
  for (const auto& x : v)
    a.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return a;
}

Json to_json(const TitsElement& x)
{
  Json j;
  j["lambda"] = to_json(x.lambda());
  Json bits = Json::array();
  for (auto b : x.sign_bits())
    bits.push_back(static_cast<int>(b));
  j["sign"] = bits;
  j["weyl"] = x.weyl().reduced_word();
  return j;
}

Json to_json(const Witness& w)
{
  Json j;
  j["check"] = w.check;
  j["relation"] = w.relation;
  j["operands"] = w.operands;
  j["lhs"] = w.lhs ? to_json(*w.lhs) : Json(nullptr);
  j["rhs"] = w.rhs ? to_json(*w.rhs) : Json(nullptr);
  if (w.value)
    j["value"] = to_json(*w.value);
  return j;
}

Json to_json(const Checks& c)
{
  Json j;
  j["kappa_identity"] = opt(c.kappa_identity);
  j["homomorphy"] = opt(c.homomorphy);
  j["iota_homomorphic"] = opt(c.iota_homomorphic);
  j["orbit_sums_zero"] = opt(c.orbit_sums_zero);
  j["tits_powers_trivial"] = opt(c.tits_powers_trivial);
  j["closed_form_powers"] = opt(c.closed_form_powers);
  j["orders_preserved"] = opt(c.orders_preserved);
  j["weyl_parts_trivial"] = opt(c.weyl_parts_trivial);
  j["generators_commute"] = opt(c.generators_commute);
  j["diagram_commutes"] = opt(c.diagram_commutes);
  return j;
}

Json to_json(const OmegaGroup& om)
{
  Json j;
  j["structure"] = to_json(om.quotient().invariant_factors());
  j["free_rank"] = 0;
  j["order"] = om.size();
  j["canonical_generator"] = om.canonical_generator() ? Json(*om.canonical_generator()) : Json(nullptr);
  Json els = Json::array();
  for (std::size_t k = 0; k < om.size(); ++k) {
    const auto& m = om.member(k);
    Json e;
    e["index"] = k;
    e["label"] = member_label(om, k);
    e["lambda"] = to_json(m.elem.lambda);
    e["weyl_word"] = m.elem.w.reduced_word();
    e["kappa_class"] = to_json(m.kappa);
    e["order"] = m.order;
    e["node_permutation"] = m.nodes;
    els.push_back(e);
  }
  j["elements"] = els;
  j["table"] = om.table();
  return j;
}

Json to_json(const SectionCertificate& cert)
{
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["seed"] = cert.seed ? Json(*cert.seed) : Json(nullptr);
  j["type"] = cert.type;
  j["rank"] = cert.rank;
  Json lat;
  lat["isogeny"] = cert.isogeny;
  lat["dim"] = cert.lattice->dim();
  Json gens = Json::array();
  for (const auto& b : cert.lattice->basis())
    gens.push_back(to_json(b));
  lat["generators"] = gens;
  j["lattice"] = lat;
  j["conventions"] = {{"normal_form", "lambda(varpi^-1) mu(-1) N(w)"}, {"kappa", "+[lambda] mod Q^vee"}};
  if (cert.omega) {
    j["omega"] = to_json(*cert.omega);
  } else {
    Json o;
    o["structure"] = to_json(cert.invariant_factors);
    o["free_rank"] = cert.free_rank;
    j["omega"] = o;
  }
  j["strategy"] = to_string(cert.strategy);
  Json sec = Json::array();
  for (const auto& e : cert.section) {
    Json s;
    s["omega_index"] = e.omega_index ? Json(*e.omega_index) : Json(nullptr);
    s["label"] = e.label;
    s["kappa_class"] = to_json(e.kappa_class);
    s["element"] = to_json(e.element);
    sec.push_back(s);
  }
  j["section"] = sec;
  j["checks"] = to_json(cert.checks);
  Json wit = Json::array();
  for (const auto& w : cert.witnesses)
    wit.push_back(to_json(w));
  j["witnesses"] = wit;
  if (cert.sampling) {
    Json s;
    s["seed"] = cert.sampling->seed;
    s["associativity_triples"] = cert.sampling->triples;
    s["associative"] = cert.sampling->associative;
    j["sampling"] = s;
  } else {
    j["sampling"] = nullptr;
  }
  j["passed"] = cert.passed();
  return j;
}

Json to_json(const LaurentMatrix& m)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) {
      Json entry = Json::object();
      for (const auto& [e, c] : m.at(i, k))
        entry[std::to_string(e)] = c.get_str();
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string tsv_header()
{
  return "type\trank\tisogeny\tomega\tstrategy\tiota_homomorphic\tpassed\n";
}

std::string tsv_row(const SectionCertificate& cert)
{
  std::string iota_h = cert.checks.iota_homomorphic ? (*cert.checks.iota_homomorphic ? "true" : "false") : "-";
  return cert.type + "\t" + std::to_string(cert.rank) + "\t" + cert.isogeny + "\t" +
         factors_text(cert.invariant_factors, cert.free_rank) + "\t" + to_string(cert.strategy) + "\t" + iota_h +
         "\t" + (cert.passed() ? "true" : "false") + "\n";
}

}  // namespace omega_lift
