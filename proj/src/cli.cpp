#include "homkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "homkit/intdyn.hpp"
#include "homkit/number_field.hpp"
#include "homkit/report.hpp"
#include "homkit/verify.hpp"

namespace homkit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct NumberFieldArgs {
  std::string poly;
  std::optional<unsigned long> mu;
  std::optional<int> max_degree;
};

struct IntdynArgs {
  std::string sigma;
  bool infinite = false;
  bool gcd_stable = false;
  std::optional<int> max_degree;
  bool brute_force = false;
  bool hk = false;
};

std::vector<Integer> parse_sigma_list(const std::string& text) {
  std::vector<Integer> values;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) values.push_back(parse_integer(piece));
  if (values.empty() || (!text.empty() && text.back() == ',')) throw Error("malformed Sigma list '" + text + "'");
  return values;
}

std::size_t brute_force_bound() {
  const char* env = std::getenv("HOMKIT_MAX_N");
  if (env == nullptr) return kDefaultMaxBruteForceN;
  const Integer n = parse_integer(env);
  if (n < 1 || !n.fits_ulong_p()) throw Error("HOMKIT_MAX_N must be a positive integer");
  return n.get_ui();
}

Json optional_json(const auto& value) { return value ? Json(*value) : Json(nullptr); }

ReportDocument numberfield(const NumberFieldArgs& a) {
  const NumberFieldProfile p = build_profile(Poly::parse(a.poly), a.mu);
  const int n_max = a.max_degree.value_or(static_cast<int>(p.degree) + 3);
  ReportDocument doc;
  doc.input = {{"command", "numberfield"}, {"poly", a.poly}, {"mu", optional_json(a.mu)}, {"max_degree", n_max}};

  const GradedGroup h = theorem_a_homology(p, n_max);
  const TfgReport tfg = tfg_report(p);
  const SymbolicKTheory k = ring_cstar_ktheory(p);
  doc.results["profile"] = to_json(p);
  doc.results["groupoid_homology"] = to_json(h);
  doc.results["topological_full_group"] = {{"homology", to_json(tfg.low_degree_homology, 1)},
                                           {"simple", tfg.simple},
                                           {"abelianization", to_json(tfg.abelianization)},
                                           {"rationally_acyclic", tfg.rationally_acyclic}};
  doc.results["ring_ktheory"] = {{"groups", to_json(k.groups)}, {"formula", k.formula}, {"torsion_free", k.torsion_free}};

  doc.checks.push_back(make_check("closed form equals Kuenneth assembly through degree " + std::to_string(n_max),
                                  to_json(h).dump(), to_json(theorem_a_via_kunneth(p, n_max)).dump()));
  doc.warnings.push_back("irreducibility of " + p.polynomial.to_string() + " is assumed, not proved");
  if (p.mu_source == MuSource::Asserted)
    doc.warnings.push_back("|mu| = " + std::to_string(p.mu_order) + " is asserted by the caller");
  return doc;
}

ReportDocument intdyn(const IntdynArgs& a) {
  const SigmaProfile p = build_sigma(parse_sigma_list(a.sigma), a.infinite, a.gcd_stable);
  const int n_max = a.max_degree.value_or(a.infinite ? 4 : static_cast<int>(p.size()) + 2);
  if (n_max < 0) throw Error("--max-degree must be non-negative");
  if (a.infinite && (a.brute_force || a.hk)) throw Error("--brute-force and --hk need a finite Sigma");

  ReportDocument doc;
  doc.input = {{"command", "intdyn"},   {"sigma", a.sigma},           {"infinite", a.infinite},
               {"max_degree", n_max},   {"brute_force", a.brute_force}, {"hk", a.hk}};
  Json primes = Json::array();
  for (const auto& q : p.primes) primes.push_back(q.get_str());
  Json values = Json::array();
  for (const auto& s : p.sigma) values.push_back(s.get_str());
  doc.results["sigma"] = {{"values", values},
                          {"size", a.infinite ? Json("inf") : Json(p.size())},
                          {"g", p.g.get_str()},
                          {"primes", primes},
                          {"g_provisional", p.g_provisional()}};
  const GradedGroup h = homology_closed_form(p, n_max);
  doc.results["homology"] = to_json(h);

  if (a.infinite) {
    std::vector<SigmaProfile> chain;
    for (std::size_t k = 1; k <= p.size(); ++k)
      chain.push_back(build_sigma({p.sigma.begin(), p.sigma.begin() + static_cast<std::ptrdiff_t>(k)}, true));
    const Report stability = truncation_stability(chain, n_max);
    Json entries = Json::array();
    for (const auto& c : stability.checks) entries.push_back(to_json(c));
    doc.results["prefix_stability"] = entries;
    if (p.g_provisional()) doc.warnings.push_back("g = " + p.g.get_str() + " is computed from a finite prefix");
    if (!stability.pass()) doc.warnings.push_back("the prefix chain has not stabilized");
    return doc;
  }

  const Z2Graded e2 = torsion_ktheory_e2(p), kun = torsion_ktheory_kunneth(p);
  doc.results["torsion_ktheory"] = to_json(e2);
  doc.checks.push_back(make_check("torsion K-theory: E2 page equals Kuenneth", to_json(e2).dump(), to_json(kun).dump()));
  if (a.brute_force) {
    const GradedGroup b = homology_bruteforce(p, n_max, brute_force_bound());
    doc.results["homology_bruteforce"] = to_json(b);
    doc.checks.push_back(make_check("chain-level homology equals the closed form", to_json(h).dump(), to_json(b).dump()));
  }
  if (a.hk) doc.add(hk_check(p));
  return doc;
}

ReportDocument complex_homology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  const Json j = Json::parse(in);
  const ChainComplex c = complex_from_json(j);
  ReportDocument doc;
  doc.input = {{"command", "complex homology"}, {"input", path}};
  doc.results["complex"] = {{"ring", c.ring().to_string()}, {"lo", c.lo()}, {"ranks", c.ranks()}};
  doc.results["homology"] = to_json(homology(c));
  return doc;
}

ReportDocument verify(std::uint64_t seed) {
  ReportDocument doc;
  doc.input = {{"command", "verify all"}, {"seed", seed}};
  doc.add(verify_all(seed));
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology and K-theory calculators", "homkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  NumberFieldArgs nf;
  auto* nf_cmd = app.add_subcommand("numberfield", "Groupoid homology and K-theory for Q[x]/(f)");
  nf_cmd->fallthrough();
  nf_cmd->add_option("--poly", nf.poly, "Irreducible integer polynomial, e.g. x^3-2")->required();
  nf_cmd->add_option("--mu", nf.mu, "Number of roots of unity, when it cannot be computed");
  nf_cmd->add_option("--max-degree", nf.max_degree, "Highest homological degree");

  IntdynArgs id;
  auto* id_cmd = app.add_subcommand("intdyn", "Integral dynamics of a pairwise coprime family");
  id_cmd->fallthrough();
  id_cmd->add_option("--sigma", id.sigma, "Comma-separated pairwise coprime integers > 1")->required();
  id_cmd->add_flag("--infinite", id.infinite, "Treat the list as a prefix of an infinite family");
  id_cmd->add_flag("--gcd-stable", id.gcd_stable, "Declare that the prefix already attains g");
  id_cmd->add_option("--max-degree", id.max_degree, "Highest homological degree");
  id_cmd->add_flag("--brute-force", id.brute_force, "Also compute homology from chain complexes");
  id_cmd->add_flag("--hk", id.hk, "Compare parity sums of homology with K-theory");

  std::string input_path;
  auto* cx_cmd = app.add_subcommand("complex", "Chain complex tools");
  cx_cmd->fallthrough();
  cx_cmd->require_subcommand(1);
  auto* cx_hom = cx_cmd->add_subcommand("homology", "Homology of a JSON chain complex");
  cx_hom->fallthrough();
  cx_hom->add_option("--input", input_path, "Complex JSON file")->required();

  std::uint64_t seed = kDefaultSeed;
  auto* vf_cmd = app.add_subcommand("verify", "Property suites");
  vf_cmd->fallthrough();
  vf_cmd->require_subcommand(1);
  auto* vf_all = vf_cmd->add_subcommand("all", "Run every property family");
  vf_all->fallthrough();
  vf_all->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ReportDocument doc;
  try {
    if (*nf_cmd)
      doc = numberfield(nf);
    else if (*id_cmd)
      doc = intdyn(id);
    else if (*cx_hom)
      doc = complex_homology(input_path);
    else
      doc = verify(seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << "\n";
    return kExitUsage;
  }

  if (format == "json")
    out << doc.to_json().dump(2) << "\n";
  else
    out << doc.to_text();
  return doc.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace homkit
