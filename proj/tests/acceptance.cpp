// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (rational and integer arithmetic), so no tolerance appears below.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "expected.hpp"
#include "omega_lift/cli.hpp"
#include "omega_lift/sweep.hpp"
#include "omega_lift/tits_oracle.hpp"

using namespace omega_lift;
using namespace testing_support;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kAssociativityTriples = 1000;
constexpr int kOraclePairs = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what)
  {
    if (!cond) {
      ok = false;
      if (failures.size() < 8)
        failures.push_back(what);
    }
  }
};

struct SweptCase {
  std::string name;
  SectionCertificate cert;
};

std::vector<SweptCase>& swept()
{
  static std::vector<SweptCase> cases;
  return cases;
}

void run_main_sweep()
{
  std::vector<CartanType> types;
  for (int l = 1; l <= 8; ++l)
    types.push_back({Family::A, l});
  for (int l = 2; l <= 8; ++l)
    types.push_back({Family::B, l});
  for (int l = 2; l <= 8; ++l)
    types.push_back({Family::C, l});
  for (int l = 4; l <= 9; ++l)
    types.push_back({Family::D, l});
  for (int l = 6; l <= 8; ++l)
    types.push_back({Family::E, l});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  for (const auto& t : types) {
    const auto rs = RootSystem::build(t);
    for (const auto& c : isogeny_lattices(rs))
      swept().push_back({t.name() + " " + c.label, certify(c, kSeed, kAssociativityTriples)});
  }
}

Outcome sweep_sections()
{
  Outcome o;
  std::size_t largest = 0;
  for (const auto& s : swept()) {
    const auto& ch = s.cert.checks;
    o.require(ch.kappa_identity == true && ch.homomorphy == true && ch.orbit_sums_zero == true &&
                  ch.tits_powers_trivial == true && s.cert.checks.passed(),
              s.name);
    largest = std::max(largest, s.cert.omega->size());
  }
  o.require(largest == 9, "largest table is not 9x9");
  o.detail = std::to_string(swept().size()) + " certificates, largest table " + std::to_string(largest) + "x" +
             std::to_string(largest);
  return o;
}

Outcome hand_computed_values()
{
  Outcome o;
  int count = 0;
  auto sum_for = [](const RootSystemPtr& rs, int i) {
    const auto w = omega_weyl_part(rs, i);
    return cocycle_sum(w, w.order());
  };
  auto in_twice = [](const LatticePtr& lat, const Vec& v) {
    return lat->mod2_class(v) == SignBits(lat->rank(), 0);
  };
  auto check = [&](bool cond, const std::string& what) {
    ++count;
    o.require(cond, what);
  };
  for (int l = 2; l <= 8; ++l) {
    const auto b = RS(Family::B, l);
    check(sum_for(b, 1) == expected::b_sum(b), "B" + std::to_string(l));
    const auto c = RS(Family::C, l);
    check(sum_for(c, l) == expected::c_sum(c) && expected::c_sum(c) == Rational(2 * l) * c->coweight(l),
          "C" + std::to_string(l));
  }
  for (int l = 4; l <= 9; ++l) {
    const auto d = RS(Family::D, l);
    if (l % 2 == 0) {
      for (int i : {1, l - 1, l})
        check(sum_for(d, i) == expected::d_even_sum(d, i), "D" + std::to_string(l) + " rho_" + std::to_string(i));
    } else {
      const auto w = omega_weyl_part(d, l);
      const Vec gamma = cocycle_sum(w, 4);
      check(gamma == expected::d_odd_gamma(d), "D" + std::to_string(l) + " gamma");
      check(in_twice(coweight_lattice(d), gamma - Rational(2) * d->coweight(1)),
            "D" + std::to_string(l) + " gamma mod 2");
      check(w.apply(d->coweight(l)) == d->coweight(1) - d->coweight(l) &&
                w.pow(2).apply(d->coweight(l)) == d->coweight(l - 1) - d->coweight(1) &&
                w.pow(3).apply(d->coweight(l)) == -d->coweight(l - 1),
            "D" + std::to_string(l) + " orbit");
    }
  }
  const auto e6 = RS(Family::E, 6);
  check(sum_for(e6, 1) == expected::e6_sum(e6) && in_twice(coroot_lattice(e6), expected::e6_sum(e6)), "E6 sum");
  const auto w1 = omega_weyl_part(e6, 1);
  check(w1.apply(e6->coweight(1)) == e6->coweight(6) - e6->coweight(1), "E6 w_1(eps_1)");
  check(w1.pow(2).apply(e6->coweight(1)) == -e6->coweight(6), "E6 w_1^2(eps_1)");
  const auto e7 = RS(Family::E, 7);
  check(sum_for(e7, 7) == expected::e7_sum(e7) && expected::e7_sum(e7) == expected::e7_sum_in_roots(e7), "E7 sum");
  for (int n = 2; n <= 9; ++n)
    for (int a = 1; a < n; ++a) {
      if (n % a != 0)
        continue;
      const auto rs = RS(Family::A, n - 1);
      const Vec gamma = cocycle_sum(omega_weyl_part(rs, a), n / a);
      const std::string name = "A" + std::to_string(n - 1) + " a=" + std::to_string(a);
      check(gamma == expected::a_gamma(n, a), name + " gamma");
      const auto q = coroot_lattice(rs);
      check(n % 2 == 0 ? in_twice(q, gamma - Rational(n) * rs->coweight(a)) : in_twice(q, gamma), name + " mod 2");
    }
  o.detail = std::to_string(count) + " exact identities";
  return o;
}

Outcome non_homomorphy()
{
  Outcome o;
  for (int l = 2; l <= 8; ++l)
    o.require(!iota_homomorphy_report(omega_ad(RS(Family::A, l))).homomorphic, "PGL" + std::to_string(l + 1));
  for (int l = 5; l <= 9; l += 2) {
    const auto rs = RS(Family::D, l);
    const auto om = omega_ad(rs);
    const auto rep = iota_homomorphy_report(om);
    o.require(!rep.homomorphic, "D" + std::to_string(l) + " adjoint reported homomorphic");
    const std::string rl = member_label(om, om.index_of_coweight(l));
    bool pair = false;
    for (const auto& w : rep.witnesses)
      pair = pair || w.operands == std::vector<std::string>{rl, rl};
    o.require(pair, "D" + std::to_string(l) + " witness (rho_l, rho_l) missing");
    o.require(coroot_sum(rs, f_w_set(omega_weyl_part(rs, l), 2)) == expected::d_odd_witness(rs),
              "D" + std::to_string(l) + " F_w(2) sum");
  }
  o.require(iota_homomorphy_report(omega_ad(RS(Family::E, 6))).homomorphic, "E6 adjoint");
  for (int l = 4; l <= 8; l += 2)
    o.require(iota_homomorphy_report(omega_ad(RS(Family::D, l))).homomorphic, "D" + std::to_string(l) + " adjoint");
  int even_cases = 0;
  for (int n = 2; n <= 9; n += 2)
    for (int a = 2; a < n; a += 2) {
      if (n % a != 0)
        continue;
      const auto rs = RS(Family::A, n - 1);
      ++even_cases;
      o.require(iota_homomorphy_report(omega_for_lattice(lattice_for_isogeny(rs, {a}))).homomorphic,
                "A" + std::to_string(n - 1) + " a=" + std::to_string(a));
    }
  o.detail = "PGL_3..PGL_9, D5/D7/D9 with witnesses; E6, D4/D6/D8, " + std::to_string(even_cases) +
             " even A_l cases homomorphic";
  return o;
}

Outcome sl_cycle_powers()
{
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const auto rs = RS(Family::A, n - 1);
    const auto cycle = omega_weyl_part(rs, 1);
    const auto lift = oracle_springer_lift(cycle);
    auto m = LaurentMatrix::identity(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      m = m * lift;
    o.require(m.is_scalar(n % 2 == 0 ? -1 : 1), "n = " + std::to_string(n));
  }
  o.detail = "n-cycle lift to the n-th power: -I for n = 2, 4, 6 and +I for n = 3, 5";
  return o;
}

Outcome oracle_equivalence()
{
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const auto gl = RootDatum::general_linear(n);
    std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(n));
    for (int k = 0; k < kOraclePairs; ++k) {
      const auto x = random_tits_element(gl.lattice, rng), y = random_tits_element(gl.lattice, rng);
      o.require(oracle_image(x * y) == oracle_image(x) * oracle_image(y),
                "GL" + std::to_string(n) + " pair " + std::to_string(k));
    }
  }
  o.detail = std::to_string(kOraclePairs) + " pairs for each n = 3..6";
  return o;
}

Outcome associativity()
{
  Outcome o;
  for (const auto& s : swept())
    o.require(s.cert.sampling && s.cert.sampling->triples == kAssociativityTriples && s.cert.sampling->associative,
              s.name);
  o.detail = std::to_string(kAssociativityTriples) + " triples on each of " + std::to_string(swept().size()) +
             " lattices";
  return o;
}

Outcome alcove()
{
  Outcome o;
  int members = 0;
  std::vector<CartanType> types;
  for (int l = 1; l <= 8; ++l)
    types.push_back({Family::A, l});
  for (int l = 2; l <= 8; ++l) {
    types.push_back({Family::B, l});
    types.push_back({Family::C, l});
  }
  for (int l = 4; l <= 9; ++l)
    types.push_back({Family::D, l});
  types.push_back({Family::E, 6});
  types.push_back({Family::E, 7});
  for (const auto& t : types) {
    const auto rs = RootSystem::build(t);
    const auto om = omega_ad(rs);
    for (std::size_t k = 0; k < om.size(); ++k) {
      const auto& m = om.member(k);
      ++members;
      o.require(node_permutation(rs, m.elem).has_value(), t.name() + " " + member_label(om, k) + " leaves the alcove");
      o.require(m.nodes == expected::node_action(t.family, t.rank, m.coweight),
                t.name() + " " + member_label(om, k) + " node action");
    }
  }
  o.detail = std::to_string(members) + " members of Omega_ad";
  return o;
}

Outcome extensions()
{
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    o.require(free_section(RootDatum::general_linear(n)).passed(), "free_section GL" + std::to_string(n));
  for (int n : {2, 3}) {
    const auto cert = good_section(RootDatum::general_symplectic(n));
    o.require(cert.passed() && cert.checks.diagram_commutes == true, "good_section GSp" + std::to_string(2 * n));
  }
  for (int n = 2; n <= 6; ++n) {
    const auto gl = RootDatum::general_linear(n);
    const auto cert = good_section(gl);
    const auto ad = build_section(coweight_lattice(gl.rs), "adjoint");
    const auto& g = cert.section.at(0).element;
    const auto& target = ad.section.at(ad.omega->index_of_coweight(1)).element;
    o.require(ad.strategy == Strategy::cyclic_power, "PGL" + std::to_string(n) + " strategy");
    o.require(cert.passed() && cert.checks.diagram_commutes == true && gl.to_adjoint(g.lambda()) == target.lambda() &&
                  g.weyl() == target.weyl(),
              "good_section GL" + std::to_string(n));
  }
  o.detail = "GL_1..GL_6 free, GSp_4 and GSp_6, GL_2..GL_6 over PGL_n";
  return o;
}

Outcome determinism()
{
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("omega_lift_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto read = [](const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  auto invoke = [&](std::vector<std::string> args, const std::filesystem::path& file) {
    args.insert(args.begin(), "omega-lift");
    args.push_back("--out");
    args.push_back(file.string());
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back(a.c_str());
    std::ostringstream out, err;
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  };
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--max-rank", "6", "--samples", "100", "--seed", "7", "--jobs", "2"},
      {"verify", "--type", "D", "--rank", "7", "--samples", "200", "--seed", "7"},
      {"verify", "--type", "GSp", "--rank", "3", "--samples", "50", "--seed", "7"}};
  std::size_t bytes = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    const auto a = dir / ("a" + std::to_string(k)), b = dir / ("b" + std::to_string(k));
    const int ca = invoke(commands[k], a), cb = invoke(commands[k], b);
    const std::string ta = read(a), tb = read(b);
    o.require(ca == kExitPass && cb == kExitPass && !ta.empty() && ta == tb, commands[k][0]);
    bytes += ta.size();
  }
  std::filesystem::remove_all(dir);
  o.detail = std::to_string(commands.size()) + " command pairs, " + std::to_string(bytes) + " bytes compared";
  return o;
}

}  // namespace

int main()
{
  run_main_sweep();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"homomorphic sections over all swept lattices", sweep_sections},
      {"cocycle sums and orbit values", hand_computed_values},
      {"non-homomorphy witnesses", non_homomorphy},
      {"SL_n cycle powers in the matrix model", sl_cycle_powers},
      {"normal form against matrix oracle", oracle_equivalence},
      {"cocycle associativity", associativity},
      {"alcove stabilization and node actions", alcove},
      {"free and connected-center sections", extensions},
      {"byte-identical reruns", determinism}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s (%s)\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    for (const auto& f : o.failures)
      std::printf("     failed: %s\n", f.c_str());
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
