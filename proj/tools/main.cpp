#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fdalg/classify.hpp"
#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/io.hpp"
#include "fdalg/morita.hpp"
#include "fdalg/report.hpp"

namespace {

using namespace fdalg;

constexpr int exit_invalid = 1;
constexpr int exit_unavailable = 2;
constexpr int exit_check_failed = 3;
constexpr int exit_io = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_split:
    case ErrorKind::split_undecided:
    case ErrorKind::not_basic:
    case ErrorKind::char_zero:
    case ErrorKind::not_local:
    case ErrorKind::too_large:
      return exit_unavailable;
    case ErrorKind::io_error:
      return exit_io;
    case ErrorKind::internal:
    case ErrorKind::not_full:
      return exit_check_failed;
    default:
      return exit_invalid;
  }
}

struct Common {
  std::string field = "Q";
  std::vector<std::string> params;
  std::uint64_t seed = 0;

  LoadOptions load_options() const {
    LoadOptions o;
    o.field = FieldSpec::parse(field);
    for (const auto& p : params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::bad_parameter, "--param expects name=value");
      o.params[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return o;
  }
};

/// Parses and validates; invalid structure constants are an input error.
Algebra load_valid(const std::string& path, const Common& c) {
  Algebra a = load_algebra(path, c.load_options());
  const ValidationReport v = validate(a);
  if (!v.valid()) {
    throw Error(ErrorKind::invalid_algebra, std::to_string(v.associativity_failures.size()) +
                                                " associativity failures, " + std::to_string(v.unit_failures.size()) +
                                                " unit failures");
  }
  return a;
}

int run_check(const std::string& path, const Common& c) {
  Algebra a = load_algebra(path, c.load_options());
  const ValidationReport v = validate(a, ValidationMode::automatic, c.seed);
  std::cout << "dim " << a.dim() << " over " << a.field().to_string() << (v.full ? "" : " (sampled triples)") << "\n";
  for (const auto& [i, j, k] : v.associativity_failures) {
    std::cout << "associativity fails at (b" << i << " b" << j << ") b" << k << "\n";
  }
  for (std::size_t i : v.unit_failures) std::cout << "unit fails on b" << i << "\n";
  std::cout << (v.valid() ? "valid" : "invalid") << "\n";
  return v.valid() ? 0 : exit_invalid;
}

int run_report(const std::string& path, const Common& c, const std::string& json_out) {
  const Algebra a = load_valid(path, c);
  const Report r = build_report(a, c.seed);
  if (json_out == "-") {
    write_text("-", to_json(r).dump(2) + "\n");
  } else {
    std::cout << to_text(r);
    if (!json_out.empty()) write_text(json_out, to_json(r).dump(2) + "\n");
  }
  return r.theorems.passed() ? 0 : exit_check_failed;
}

int run_classify(const std::string& path, const Common& c, bool json) {
  const Algebra a = load_valid(path, c);
  const Verdict v = classify_truncated(a, c.seed);
  if (json) std::cout << to_json(v).dump(2) << "\n";
  else std::cout << to_text(v);
  if (v.kind == VerdictKind::unavailable) return exit_unavailable;
  if (v.witness && !v.witness->valid()) return exit_check_failed;
  return 0;
}

int run_verify(const std::string& path, const Common& c, bool json) {
  const Algebra a = load_valid(path, c);
  const TheoremReport t = verify_theorem_suite(a, c.seed);
  if (json) std::cout << to_json(t).dump(2) << "\n";
  else std::cout << to_text(t);
  return t.passed() ? 0 : exit_check_failed;
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t max_dim = 0;
  std::size_t generators = 0;
  std::size_t truncation = 0;
  bool radical_square_zero = false;
  std::string output = "-";
};

int run_generate(const GenerateArgs& g, const Common& c) {
  GeneratorSpec spec;
  spec.family = parse_family(g.family);
  spec.field = FieldSpec::parse(c.field);
  spec.n = g.n;
  spec.seed = c.seed;
  const LoadOptions o = c.load_options();
  if (auto it = o.params.find("q"); it != o.params.end()) spec.q = Scalar::parse(spec.field, it->second);
  if (g.max_dim) spec.quiver.max_dim = spec.local.max_dim = g.max_dim;
  if (g.generators) spec.local.generators = g.generators;
  if (g.truncation) spec.local.truncation = g.truncation;
  spec.quiver.radical_square_zero = g.radical_square_zero;
  if ((spec.family == Family::s3 || spec.family == Family::a_q || spec.family == Family::random_quiver ||
       spec.family == Family::random_local) && g.n != 0) {
    throw Error(ErrorKind::bad_parameter, std::string(to_string(spec.family)) + " takes no size argument");
  }
  write_text(g.output, write_algebra(generate(spec)));
  return 0;
}

int run_basic(const std::string& path, const Common& c, const std::string& output, bool json) {
  const Algebra a = load_valid(path, c);
  const MoritaReport m = verify_morita_invariance(a, c.seed);
  Algebra b = m.basic.algebra;
  if (!a.name().empty()) b = b.renamed("basic(" + a.name() + ")");
  write_text(output, write_algebra(b));
  std::ostream& info = output == "-" ? std::cerr : std::cout;
  info << (json ? to_json(m).dump(2) + "\n" : to_text(m));
  return m.passed() ? 0 : exit_check_failed;
}

std::vector<std::size_t> parse_multiplicities(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::bad_parameter, "--mult expects a comma-separated list of positive integers");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

int run_inflate(const std::string& path, const Common& c, const std::string& mult, const std::string& output) {
  const Algebra a = load_valid(path, c);
  write_text(output, write_algebra(inflate(a, parse_multiplicities(mult), c.seed)));
  return 0;
}

int run_fuzz(const Common& c, std::size_t count, const std::string& family, bool field_given) {
  if (family != "quiver" && family != "local") throw Error(ErrorKind::bad_parameter, "--family is quiver or local");
  const std::vector<FieldSpec> fields = field_given ? std::vector<FieldSpec>{FieldSpec::parse(c.field)}
                                                    : std::vector<FieldSpec>{FieldSpec::prime(2), FieldSpec::prime(3),
                                                                             FieldSpec::prime(5)};
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec spec;
    spec.family = family == "quiver" ? Family::random_quiver : Family::random_local;
    spec.field = fields[i % fields.size()];
    spec.seed = c.seed + i;
    spec.local.max_dim = 16;
    spec.local.generators = 1 + i % 3;
    spec.local.truncation = 2 + i % 3;
    const Algebra a = generate(spec);
    const TheoremReport t = verify_theorem_suite(a, spec.seed);
    if (!t.passed()) {
      ++failures;
      std::cout << "FAIL seed=" << spec.seed << " " << spec.describe() << "\n" << to_text(t);
    }
  }
  std::cout << count << " instances, " << failures << " failing\n";
  return failures ? exit_check_failed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutator-subspace invariants of finite-dimensional algebras"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", common.field, "Field for Cayley tables, quiver files and generators: Fp:p or Q");
    sub->add_option("--param", common.params, "Quiver parameter binding name=value (repeatable)");
    sub->add_option("--seed", common.seed, "Seed for randomized searches");
  };

  std::string path, json_out, output = "-", mult, family = "quiver";
  bool json = false;
  std::size_t count = 100;
  GenerateArgs gen;

  auto* check = app.add_subcommand("check", "Parse and validate an algebra");
  check->add_option("file", path, "Input file, - for stdin")->default_val("-");
  add_common(check);

  auto* report = app.add_subcommand("report", "Full invariant report");
  report->add_option("file", path, "Input file, - for stdin")->default_val("-");
  report->add_option("--json", json_out, "Also write the JSON report here (- for stdout only)");
  add_common(report);

  auto* classify = app.add_subcommand("classify", "Morita classification verdict with witness");
  classify->add_option("file", path, "Input file, - for stdin")->default_val("-");
  classify->add_flag("--json", json, "Print JSON");
  add_common(classify);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_option("file", path, "Input file, - for stdin")->default_val("-");
  verify->add_flag("--json", json, "Print JSON");
  add_common(verify);

  auto* generate_cmd = app.add_subcommand("generate", "Emit a corpus algebra in structure-constant format");
  generate_cmd->add_option("family", gen.family, "truncated, triangular, kronecker, a_q, cyclic_group, s3, matrix, "
                                                 "random_quiver or random_local")
      ->required();
  generate_cmd->add_option("n", gen.n, "Size parameter");
  generate_cmd->add_option("-o,--output", gen.output, "Output file, - for stdout");
  generate_cmd->add_option("--max-dim", gen.max_dim, "Dimension cap for random families");
  generate_cmd->add_option("--generators", gen.generators, "Loops of a random local algebra (1 to 3)");
  generate_cmd->add_option("--truncation", gen.truncation, "Word length that vanishes in a random local algebra");
  generate_cmd->add_flag("--radical-square-zero", gen.radical_square_zero, "Random quiver with all length-2 paths zero");
  add_common(generate_cmd);

  auto* basic = app.add_subcommand("basic", "Basic algebra and Morita invariance certificate");
  basic->add_option("file", path, "Input file, - for stdin")->default_val("-");
  basic->add_option("-o,--output", output, "Output file for the basic algebra, - for stdout");
  basic->add_flag("--json", json, "Print the certificate as JSON");
  add_common(basic);

  auto* inflate_cmd = app.add_subcommand("inflate", "Progenerator inflation over the basic idempotents");
  inflate_cmd->add_option("file", path, "Input file, - for stdin")->default_val("-");
  inflate_cmd->add_option("--mult", mult, "Multiplicities m1,m2,...")->required();
  inflate_cmd->add_option("-o,--output", output, "Output file, - for stdout");
  add_common(inflate_cmd);

  auto* fuzz = app.add_subcommand("fuzz", "Theorem checks on seeded random algebras");
  fuzz->add_option("--count", count, "Number of instances");
  fuzz->add_option("--family", family, "quiver or local");
  add_common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*check) return run_check(path, common);
    if (*report) return run_report(path, common, json_out);
    if (*classify) return run_classify(path, common, json);
    if (*verify) return run_verify(path, common, json);
    if (*generate_cmd) return run_generate(gen, common);
    if (*basic) return run_basic(path, common, output, json);
    if (*inflate_cmd) return run_inflate(path, common, mult, output);
    if (*fuzz) return run_fuzz(common, count, family, fuzz->count("--field") > 0);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_invalid;
}
