#include "omega_lift/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace omega_lift {

IsogenyCase parse_isogeny(const RootSystemPtr& rs, const std::string& spec)
{
  if (spec == "adjoint")
    return {spec, coweight_lattice(rs)};
  if (spec == "sc")
    return {spec, coroot_lattice(rs)};
  const std::string prefix = "coweights:";
  if (spec.rfind(prefix, 0) != 0)
    throw std::invalid_argument("isogeny must be adjoint, sc or coweights:i[,j...], got '" + spec + "'");
  std::vector<int> idx;
  std::string rest = spec.substr(prefix.size());
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t comma = std::min(rest.find(',', pos), rest.size());
    const std::string tok = rest.substr(pos, comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("malformed coweight list in '" + spec + "'");
    idx.push_back(std::stoi(tok));
    pos = comma + 1;
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::string label = prefix;
  for (std::size_t k = 0; k < idx.size(); ++k)
    label += (k ? "," : "") + std::to_string(idx[k]);
  return {label, lattice_for_isogeny(rs, idx)};
}

std::vector<IsogenyCase> isogeny_lattices(const RootSystemPtr& rs)
{
  const auto minus = rs->minuscule();
  const LatticePtr full = coweight_lattice(rs);
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << minus.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t k = 0; k < minus.size(); ++k)
      if (mask & (1u << k))
        s.push_back(minus[k]);
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<IsogenyCase> out;
  for (const auto& s : subsets) {
    const LatticePtr lat = lattice_for_isogeny(rs, s);
    bool seen = false;
    for (const auto& c : out)
      seen = seen || *c.lattice == *lat;
    if (seen)
      continue;
    std::string label;
    if (s.empty())
      label = "sc";
    else if (*lat == *full)
      label = "adjoint";
    else {
      label = "coweights:";
      for (std::size_t k = 0; k < s.size(); ++k)
        label += (k ? "," : "") + std::to_string(s[k]);
    }
    out.push_back({label, lat});
  }
  return out;
}

std::vector<CartanType> sweep_types(const std::string& families, int max_rank)
{
  std::vector<Family> fams;
  for (char ch : families) {
    if (ch == ',' || ch == ' ')
      continue;
    const Family f = parse_family(ch);
    if (std::find(fams.begin(), fams.end(), f) == fams.end())
      fams.push_back(f);
  }
  std::sort(fams.begin(), fams.end());
  std::vector<CartanType> out;
  for (Family f : fams)
    for (int l = 1; l <= max_rank; ++l) {
      const CartanType t{f, l};
      try {
        validate(t, max_rank);
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.push_back(t);
    }
  return out;
}

SectionCertificate certify(const IsogenyCase& c, std::uint64_t seed, int samples)
{
  SectionCertificate cert = build_section(c.lattice, c.label);
  attach_sampling(cert, seed, samples);
  return cert;
}

std::vector<SectionCertificate> run_sweep(const std::string& families, int max_rank, std::uint64_t seed, int samples,
                                          int jobs)
{
  std::vector<IsogenyCase> cases;
  for (const auto& t : sweep_types(families, max_rank)) {
    const auto rs = RootSystem::build(t, max_rank);
    for (auto& c : isogeny_lattices(rs))
      cases.push_back(std::move(c));
  }
  std::vector<std::optional<SectionCertificate>> slots(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        slots[k] = certify(cases[k], seed, samples);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i)
      pool.emplace_back(worker);
    for (auto& th : pool)
      th.join();
  }
  std::vector<SectionCertificate> out;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    if (errors[k])
      std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace omega_lift
