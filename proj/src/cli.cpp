#include "omega_lift/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omega_lift/errors.hpp"
#include "omega_lift/expr.hpp"
#include "omega_lift/serialize.hpp"
#include "omega_lift/sweep.hpp"

namespace omega_lift {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string type;
  int rank = 0;
  std::string isogeny = "adjoint";
  int max_rank = kDefaultRankCap;
  std::string families = "ABCDEFG";
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  int samples = 100;
  std::string expression;
};

std::uint64_t resolve_seed(const Options& o)
{
  if (o.seed)
    return *o.seed;
  if (const char* env = std::getenv("OMEGA_LIFT_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size())
        return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("OMEGA_LIFT_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open '" + o.out + "' for writing");
  f << text;
  if (!f)
    throw std::runtime_error("write to '" + o.out + "' failed");
}

// GL and GSp are accepted next to the Cartan families; --rank is n of GL_n / GSp_2n.
std::optional<RootDatum> reductive_datum(const Options& o)
{
  if (o.type == "GL")
    return RootDatum::general_linear(o.rank);
  if (o.type == "GSp")
    return RootDatum::general_symplectic(o.rank);
  return std::nullopt;
}

CartanType cartan(const Options& o)
{
  if (o.type.size() != 1)
    throw std::invalid_argument("unknown --type '" + o.type + "'");
  return {parse_family(o.type[0]), o.rank};
}

int cmd_verify(const Options& o, std::ostream& out)
{
  const std::uint64_t seed = resolve_seed(o);
  SectionCertificate cert;
  if (auto d = reductive_datum(o)) {
    cert = good_section(*d);
    attach_sampling(cert, seed, o.samples);
  } else {
    const auto rs = RootSystem::build(cartan(o));
    cert = certify(parse_isogeny(rs, o.isogeny), seed, o.samples);
  }
  if (o.format == "tsv")
    emit(o, tsv_header() + tsv_row(cert), out);
  else
    emit(o, to_json(cert).dump(2) + "\n", out);
  return cert.passed() ? kExitPass : kExitFail;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
  const std::uint64_t seed = resolve_seed(o);
  if (o.max_rank < 1)
    throw std::invalid_argument("--max-rank must be positive");
  const auto certs = run_sweep(o.families, o.max_rank, seed, o.samples, o.jobs);
  bool ok = true;
  for (const auto& c : certs)
    ok = ok && c.passed();
  if (o.format == "tsv") {
    std::string text = "# seed " + std::to_string(seed) + "\n" + tsv_header();
    for (const auto& c : certs)
      text += tsv_row(c);
    emit(o, text, out);
  } else {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed;
    j["config"] = {{"max_rank", o.max_rank}, {"families", o.families}, {"samples", o.samples}};
    Json summary = Json::array();
    Json all = Json::array();
    for (const auto& c : certs) {
      summary.push_back({{"type", c.type},
                         {"rank", c.rank},
                         {"isogeny", c.isogeny},
                         {"strategy", to_string(c.strategy)},
                         {"iota_homomorphic", c.checks.iota_homomorphic ? Json(*c.checks.iota_homomorphic) : Json()},
                         {"passed", c.passed()}});
      all.push_back(to_json(c));
    }
    j["summary"] = summary;
    j["certificates"] = all;
    j["passed"] = ok;
    emit(o, j.dump(2) + "\n", out);
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_element(const Options& o, std::ostream& out)
{
  const auto rs = RootSystem::build(cartan(o));
  const IsogenyCase c = parse_isogeny(rs, o.isogeny);
  const TitsElement x = evaluate_expression(o.expression, c.lattice);
  const LatticeQuotient q(c.lattice);
  if (o.format == "tsv") {
    std::ostringstream s;
    s << "lambda\t" << format_vec(x.lambda()) << "\nsign\t";
    for (auto b : x.sign_bits())
      s << static_cast<int>(b);
    s << "\nweyl\t[";
    const auto word = x.weyl().reduced_word();
    for (std::size_t k = 0; k < word.size(); ++k)
      s << (k ? "," : "") << word[k];
    s << "]\nkappa\t" << to_json(kappa(q, x)).dump() << "\n";
    emit(o, s.str(), out);
  } else {
    Json j;
    j["type"] = rs->name();
    j["isogeny"] = c.label;
    j["expression"] = o.expression;
    j["element"] = to_json(x);
    j["kappa_class"] = to_json(kappa(q, x));
    j["is_identity"] = x.is_identity();
    emit(o, j.dump(2) + "\n", out);
  }
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Sections of the Kottwitz map on the torus normalizer of split groups", "omega-lift"};
  app.require_subcommand(1);
  Options o;

  auto common_case = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan family A..G, or GL / GSp (verify only)")->required();
    sub->add_option("--rank", o.rank, "rank (n for GL_n and GSp_2n)")->required();
    sub->add_option("--isogeny", o.isogeny, "adjoint | sc | coweights:i[,j...]");
  };
  auto common_out = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "sampling seed (falls back to OMEGA_LIFT_SEED)");
    sub->add_option("--out", o.out, "write to this file instead of stdout");
    sub->add_option("--format", o.format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* verify = app.add_subcommand("verify", "certificate for one group");
  common_case(verify);
  common_out(verify);
  verify->add_option("--samples", o.samples, "associativity triples")->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "certificates for every type and lattice");
  sweep->add_option("--max-rank", o.max_rank, "largest rank");
  sweep->add_option("--families", o.families, "subset of ABCDEFG");
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--samples", o.samples, "associativity triples per certificate")->check(CLI::NonNegativeNumber);
  common_out(sweep);

  auto* element = app.add_subcommand("element", "evaluate an expression in the normalizer model");
  common_case(element);
  common_out(element);
  element->add_option("expression", o.expression, "e.g. 'rho_1 * rho_l' or 'N(w0)^2'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify)
      return cmd_verify(o, out);
    if (*sweep)
      return cmd_sweep(o, out);
    return cmd_element(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace omega_lift
