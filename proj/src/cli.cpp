#include "hypercomplex/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/clifford.hpp"
#include "hypercomplex/equation_solver.hpp"
#include "hypercomplex/error.hpp"
#include "hypercomplex/identity_lab.hpp"
#include "hypercomplex/literal.hpp"
#include "hypercomplex/structure_probe.hpp"
#include "hypercomplex/tables.hpp"

namespace hypercomplex::cli {
namespace {

struct Config {
  std::string field = "Q";
  std::optional<std::string> gammas;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000;
  std::string format = "text";
  unsigned workers = 1;

  std::map<std::string, std::string> elements;  // --a, --x, ...
  std::string backend;
  bool complete = false;

  std::optional<std::string> from;
  std::optional<std::uint32_t> n;
  std::uint32_t r = 0;
  std::optional<std::string> mu;
  std::string images;
};

/// Thrown for input problems found after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json json;
  std::string text;
  bool expected = true;
};

using Action = std::function<Outcome(const Config&)>;

Field field_of(const Config& c) {
  try {
    return Field::parse(c.field);
  } catch (const Error& e) {
    throw UsageError("--field: " + std::string(e.what()));
  }
}

CdAlgebra algebra_of(const Config& c) {
  if (!c.gammas) throw UsageError("--gammas is required");
  const Field f = field_of(c);
  std::vector<Scalar> gammas;
  try {
    if (!c.gammas->empty()) gammas = parse_scalar_list(f, *c.gammas);
    return CdAlgebra::make(f, std::move(gammas));
  } catch (const Error& e) {
    throw UsageError("--gammas: " + std::string(e.what()));
  }
}

CdElement element_of(const Config& c, const CdAlgebra& alg, const std::string& name) {
  const auto it = c.elements.find(name);
  if (it == c.elements.end() || it->second.empty()) throw UsageError("--" + name + " is required");
  try {
    return alg.parse(it->second);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + std::string(e.what()));
  }
}

std::vector<std::uint32_t> uint_list(const std::string& text, const std::string& flag) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

CliffordAlgebra clifford_of(const Config& c) {
  const Field f = field_of(c);
  try {
    if (c.from) return parse_clpq(f, *c.from);
    if (!c.n) throw UsageError("give --from Cl(p,q) or --n with --r");
    std::vector<std::uint32_t> mu = c.mu ? uint_list(*c.mu, "--mu") : std::vector<std::uint32_t>(c.r, 0);
    return make_clifford(f, *c.n, c.r, std::move(mu));
  } catch (const ParseError& e) {
    throw UsageError("--from: " + std::string(e.what()));
  }
}

SweepOptions sweep_of(const Config& c) { return {c.trials, c.seed, std::max(1U, c.workers)}; }

Json scalars_json(std::span<const Scalar> values) {
  Json out = Json::array();
  for (const Scalar& s : values) out.push_back(s.to_string());
  return out;
}

std::string key_values(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

Outcome report_outcome(const IdentityReport& r, bool failures_expected) {
  return {r.to_json(), r.to_text(), failures_expected ? r.failures > 0 : r.failures == 0};
}

// Expectation table: identities that must hold on every algebra of the
// family, and the weak associativity laws that only hold up to octonions.
const std::map<std::string, std::function<IdentityReport(const CdAlgebra&, const SweepOptions&)>, std::less<>>&
cd_verifiers() {
  static const std::map<std::string, std::function<IdentityReport(const CdAlgebra&, const SweepOptions&)>,
                        std::less<>>
      table{
          {"hall", verify_hall},
          {"conjugation-sum", verify_conjugation_sum},
          {"vector-relations", verify_trace_form_relations},
          {"linearized-hall", verify_linearized_hall},
          {"moufang", verify_moufang},
          {"alternative", verify_alternative},
          {"flexible", verify_flexible},
          {"power-associative", verify_power_associative},
          {"quadratic", verify_quadratic},
          {"universal-root", verify_universal_root_equation},
      };
  return table;
}

bool failures_expected(std::string_view identity, const CdAlgebra& alg) {
  return (identity == "moufang" || identity == "alternative") && alg.levels() >= 4;
}

Outcome verify_identity(const std::string& identity, const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const IdentityReport r = cd_verifiers().at(identity)(alg, sweep_of(c));
  return report_outcome(r, failures_expected(identity, alg));
}

Outcome verify_commutator(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  return report_outcome(verify_commutator_solutions(element_of(c, alg, "a"), sweep_of(c)), false);
}

std::string term_text(const TableEntry& e) {
  const std::string symbol = e.k == 0 ? "1" : "e" + std::to_string(e.k);
  const std::string beta = e.beta.to_string();
  if (beta == "1") return symbol;
  if (beta == "-1") return "-" + symbol;
  return "(" + beta + ")*" + symbol;
}

Outcome algebra_table(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const StructureTable& t = alg.table();
  std::vector<std::vector<std::string>> cells(alg.dim(), std::vector<std::string>(alg.dim()));
  std::size_t width = 0;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      cells[i][j] = term_text(t(i, j));
      width = std::max(width, cells[i][j].size());
    }
  }
  std::string text = alg.signature() + "\n";
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      text += std::string(width - row[j].size() + (j == 0 ? 0 : 1), ' ') + row[j];
    }
    text += "\n";
  }
  return {cd_table_json(alg), text, true};
}

Outcome algebra_mul(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const CdElement x = element_of(c, alg, "x");
  const CdElement y = element_of(c, alg, "y");
  MulBackend backend = alg.default_backend();
  if (c.backend == "recursive") backend = MulBackend::recursive;
  if (c.backend == "table") backend = MulBackend::table;
  const CdElement xy = multiply(x, y, backend);
  Json j;
  j["algebra"] = alg.signature();
  j["backend"] = backend == MulBackend::table ? "table" : "recursive";
  j["x"] = x.to_string();
  j["y"] = y.to_string();
  j["product"] = xy.to_string();
  return {j, xy.to_string() + "\n", true};
}

Outcome algebra_inspect(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  Json j;
  j["algebra"] = alg.signature();
  j["field"] = alg.field().name();
  j["levels"] = alg.levels();
  j["dim"] = alg.dim();
  j["gammas"] = scalars_json(alg.gammas());
  j["basis_squares"] = scalars_json(alg.basis_squares());
  j["backend"] = alg.default_backend() == MulBackend::table ? "table" : "recursive";
  j["associative"] = is_associative(alg);
  j["alternative"] = j["associative"].get<bool>() || is_alternative(alg);
  j["commutant_dim"] = commutant_dimension(alg);
  return {j, key_values(j), true};
}

Outcome solve_sylvester(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const CdElement a = element_of(c, alg, "a");
  const CdElement b = element_of(c, alg, "b");
  const SolutionFamily family = sylvester_family(a, b);
  Json j;
  j["algebra"] = alg.signature();
  j["a"] = a.to_string();
  j["b"] = b.to_string();
  bool expected = true;
  std::string text;
  if (c.elements.contains("p")) {
    const CdElement p = element_of(c, alg, "p");
    const CdElement x = family(p);
    const CdElement residual = family.residual(p);
    j["p"] = p.to_string();
    j["x"] = x.to_string();
    j["residual"] = residual.to_string();
    expected = residual.is_zero();
    text = "x = " + x.to_string() + "\nax - xb = " + residual.to_string() + "\n";
  } else {
    const IdentityReport r =
        run_sweep("sylvester", alg.signature(), sweep_of(c), [&](SplitMix64& rng, std::uint64_t trial) {
          const CdElement p = random_element(alg, rng);
          const CdElement residual = family.residual(p);
          std::optional<Witness> w;
          if (!residual.is_zero()) {
            w = Witness{trial, {{"p", p.to_string()}}, "a x = x b", (a * family(p)).to_string(),
                        (family(p) * b).to_string()};
          }
          return w;
        });
    j["report"] = r.to_json();
    expected = r.failures == 0;
    text = r.to_text();
  }
  if (c.complete) {
    const CompletenessResult cr = sylvester_completeness(family);
    Json missed = Json::array();
    for (const CdElement& x : cr.missed) missed.push_back(x.to_string());
    j["completeness"] = {{"solutions", cr.solutions}, {"parameters", cr.parameters}, {"missed", missed}};
    expected = expected && cr.complete();
    text += "solutions " + std::to_string(cr.solutions) + ", parameters " + std::to_string(cr.parameters) +
            ", missed " + std::to_string(cr.missed.size()) + "\n";
  }
  return {j, text, expected};
}

Outcome solve_commutator_square(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const CdElement x = element_of(c, alg, "x");
  const CdElement y = element_of(c, alg, "y");
  const CdElement z = element_of(c, alg, "z");
  const CdElement w = square_commutator_decomposition(x, y, z);
  const CdElement zv = vector_part(z);
  const CdElement lhs = zv * w + w * zv;
  const CdElement xy = commutator(x, y);
  const CdElement rhs = xy * xy;
  Json j;
  j["algebra"] = alg.signature();
  j["w"] = w.to_string();
  j["lhs"] = lhs.to_string();
  j["rhs"] = rhs.to_string();
  j["holds"] = lhs == rhs;
  return {j, "w = " + w.to_string() + "\n", lhs == rhs};
}

Outcome clifford_table(const Config& c) {
  const CliffordAlgebra cl = clifford_of(c);
  const Json j = clifford_table_json(cl);
  std::string text = cl.name() + "\n";
  for (std::size_t a = 0; a < cl.dim(); ++a) {
    for (std::size_t b = 0; b < cl.dim(); ++b) {
      const auto [k, beta] = cl.monomial_product(a, b);
      text += cl.monomial_name(a) + " * " + cl.monomial_name(b) + " = " + cl.monomial(k, beta).to_string() + "\n";
    }
  }
  return {j, text, true};
}

Outcome clifford_iso(const Config& c) {
  const CliffordAlgebra cl = clifford_of(c);
  const CdAlgebra cd = algebra_of(c);
  std::vector<CdElement> images;
  std::stringstream in(c.images);
  std::string item;
  while (std::getline(in, item, ';')) {
    try {
      images.push_back(cd.parse(item));
    } catch (const Error& e) {
      throw UsageError("--images: " + std::string(e.what()));
    }
  }
  return report_outcome(verify_isomorphism(cl, cd, images), false);
}

template <class Result>
Outcome zero_divisor_outcome(const Result& r) {
  return {r.to_json(), r.algebra + ": " + r.summary() + "\n", true};
}

Outcome probe_zero_divisors(const Config& c) {
  if (c.from || c.n) return zero_divisor_outcome(find_zero_divisor(clifford_of(c), c.budget, c.seed));
  return zero_divisor_outcome(find_zero_divisor(algebra_of(c), c.budget, c.seed));
}

Outcome probe_cauchy_schwarz(const Config& c) {
  const CdAlgebra alg = algebra_of(c);
  const CauchySchwarzCounterexample cx = find_cauchy_schwarz_counterexample(alg, c.budget, c.seed);
  Json j;
  j["algebra"] = alg.signature();
  j["seed"] = c.seed;
  j["counterexample"] = cx.to_json();
  return {j,
          "x = " + cx.x.to_string() + ", y = " + cx.y.to_string() + ": " + cx.lhs.to_string() +
              " != " + cx.rhs.to_string() + "\n",
          true};
}

Outcome probe_classify(const Config& c) {
  const Classification cls = classify(algebra_of(c), sweep_of(c));
  Json j = cls.to_json();
  Json flat = j;
  flat["zero_divisor"] = cls.zero_divisor.summary();
  return {j, key_values(flat), true};
}

void add_common(CLI::App* sub, Config& c, bool randomized) {
  sub->add_option("--field", c.field, "Q, F<p> or Cyc<n>");
  sub->add_option("--gammas", c.gammas, "comma-separated doubling parameters");
  sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  if (randomized) {
    sub->add_option("--trials", c.trials);
    sub->add_option("--seed", c.seed);
    sub->add_option("--budget", c.budget);
    sub->add_option("--workers", c.workers);
  }
}

void add_element(CLI::App* sub, Config& c, const std::string& name) {
  sub->add_option_function<std::string>("--" + name, [&c, name](const std::string& v) { c.elements[name] = v; },
                                        "element literal");
}

void add_clifford(CLI::App* sub, Config& c) {
  sub->add_option("--from", c.from, "Cl(p,q)");
  sub->add_option("--n", c.n, "root of unity order");
  sub->add_option("--r", c.r, "number of generators");
  sub->add_option("--mu", c.mu, "comma-separated exponents, e_i^n = w^mu_i");
}

CLI::App* leaf(CLI::App* group, const std::string& name, const std::string& help, Action action, Action& chosen) {
  CLI::App* sub = group->add_subcommand(name, help);
  sub->callback([action, &chosen] { chosen = action; });
  return sub;
}

/// Joins `--flag value` into `--flag=value` so that values starting with '-'
/// such as "-1,-1" are never taken for flags.
std::vector<std::string> join_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool is_long = a.starts_with("--") && a.find('=') == std::string::npos && a != "--help";
    if (is_long && i + 1 < args.size() && !args[i + 1].starts_with("--")) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  Action chosen;
  CLI::App app{"Exact arithmetic and identity checks for Cayley-Dickson and Clifford algebras", "hypercomplex"};
  app.require_subcommand(1, 1);

  CLI::App* algebra = app.add_subcommand("algebra", "construct and inspect doubled algebras")->require_subcommand(1, 1);
  add_common(leaf(algebra, "table", "structure table", algebra_table, chosen), c, false);
  {
    CLI::App* mul = leaf(algebra, "mul", "product of --x and --y", algebra_mul, chosen);
    add_common(mul, c, false);
    add_element(mul, c, "x");
    add_element(mul, c, "y");
    mul->add_option("--backend", c.backend)->check(CLI::IsMember({"recursive", "table"}));
  }
  add_common(leaf(algebra, "inspect", "dimension, basis squares and structure", algebra_inspect, chosen), c, false);

  CLI::App* verify = app.add_subcommand("verify", "randomized identity sweeps")->require_subcommand(1, 1);
  for (const auto& [name, fn] : cd_verifiers()) {
    const std::string identity = name;
    add_common(leaf(verify, identity, identity + " identity",
                    [identity](const Config& cfg) { return verify_identity(identity, cfg); }, chosen),
               c, true);
  }
  {
    CLI::App* sub = leaf(verify, "commutator-solutions", "x = vw - wv solves x^2 a = a x^2", verify_commutator, chosen);
    add_common(sub, c, true);
    add_element(sub, c, "a");
  }

  CLI::App* solve = app.add_subcommand("solve", "equation solvers")->require_subcommand(1, 1);
  {
    CLI::App* sub = leaf(solve, "sylvester", "solutions of a x = x b", solve_sylvester, chosen);
    add_common(sub, c, true);
    for (const char* name : {"a", "b", "p"}) add_element(sub, c, name);
    sub->add_flag("--complete", c.complete, "enumerate every solution over a small prime field");
  }
  {
    CLI::App* sub =
        leaf(solve, "commutator-square", "w with vec(z) w + w vec(z) = (xy - yx)^2", solve_commutator_square, chosen);
    add_common(sub, c, false);
    for (const char* name : {"x", "y", "z"}) add_element(sub, c, name);
  }

  CLI::App* clifford = app.add_subcommand("clifford", "generalized Clifford algebras")->require_subcommand(1, 1);
  {
    CLI::App* sub = leaf(clifford, "table", "monomial multiplication table", clifford_table, chosen);
    add_common(sub, c, false);
    add_clifford(sub, c);
  }
  {
    CLI::App* sub = leaf(clifford, "iso", "check generator images define an isomorphism", clifford_iso, chosen);
    add_common(sub, c, false);
    add_clifford(sub, c);
    sub->add_option("--images", c.images, "semicolon-separated images of e1, e2, ...")->required();
  }

  CLI::App* probe = app.add_subcommand("probe", "structural probes")->require_subcommand(1, 1);
  {
    CLI::App* sub = leaf(probe, "zerodivisors", "search for u v = 0", probe_zero_divisors, chosen);
    add_common(sub, c, true);
    add_clifford(sub, c);
  }
  add_common(leaf(probe, "quadratic", "x^2 - t(x) x + n(x) = 0",
                  [](const Config& cfg) { return verify_identity("quadratic", cfg); }, chosen),
             c, true);
  {
    CLI::App* sub = leaf(probe, "cauchy-schwarz", "independent x, y with (x conj y + y conj x)^2 != 4 n(x) n(y)",
                         probe_cauchy_schwarz, chosen);
    sub->alias("prop2-8");
    add_common(sub, c, true);
  }
  add_common(leaf(probe, "classify", "diagnostic structure label", probe_classify, chosen), c, true);

  std::vector<std::string> reversed = join_values(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::expected;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  }

  try {
    const Outcome o = chosen(c);
    if (c.format == "json") {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.expected ? Exit::expected : Exit::unexpected;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return Exit::unexpected;
  }
}

}  // namespace hypercomplex::cli
