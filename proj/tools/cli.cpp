#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "spinc/errors.hpp"
#include "spinc/invariants.hpp"
#include "spinc/report.hpp"
#include "spinc/selfcheck.hpp"

namespace spinc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  std::istringstream in(text);
  int a = -1, b = -1;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw UsageError(std::string(flag) + " expects two integers 'a,b', got '" + text + "'");
  if (a < 0 || b < 0) throw UsageError(std::string(flag) + " entries must be non-negative");
  return {a, b};
}

struct Options {
  std::string format = "pretty";
  std::string out_path;
  bool json = false;
  std::string signature;
  std::string family;
  std::string params;
  int bound = 2;
  std::string forms_dir = FormLibrary::default_dir().string();
};

OutputFormat output_format(const Options& o) {
  if (o.json) return OutputFormat::Json;
  if (o.format == "json") return OutputFormat::Json;
  if (o.format == "csv") return OutputFormat::Csv;
  return OutputFormat::Pretty;
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  sub->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
}

int cmd_rep(const Options& o, std::ostream& out) {
  auto [p, q] = parse_pair(o.signature, "--signature");
  const Signature sig{p, q};
  if (!sig.valid()) throw UsageError("invalid signature " + sig.to_string() + ": p + q must be at least 1");
  if (sig.m() > kMaxAmbientDim)
    throw CapError("signature " + sig.to_string() + " exceeds the dimension cap p + q <= " + std::to_string(kMaxAmbientDim));
  write_rep(out, build_rep(sig), output_format(o));
  return kOk;
}

HolonomySpec parse_spec(const Options& o) {
  std::optional<Family> fam = parse_family(o.family);
  if (!fam) throw UsageError("unknown family '" + o.family + "'");
  HolonomySpec spec{*fam, 0, 0};
  if (takes_params(*fam)) {
    if (o.params.empty()) throw UsageError(o.family + " needs --params p',q'");
    std::tie(spec.p_prime, spec.q_prime) = parse_pair(o.params, "--params");
    if (spec.p_prime + spec.q_prime == 0) throw UsageError("--params must have p' + q' >= 1");
  } else if (!o.params.empty()) {
    throw UsageError(o.family + " takes no --params");
  }
  if (spec.ambient().m() > kMaxAmbientDim)
    throw CapError(spec.label() + " lives in so" + spec.ambient().to_string() + ", beyond the dimension cap p + q <= " +
                   std::to_string(kMaxAmbientDim));
  return spec;
}

FormLibrary load_forms(const Options& o) {
  try {
    return FormLibrary::load(o.forms_dir);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const HolonomySpec spec = parse_spec(o);
  write_invariants(out, invariants_for(spec, load_forms(o)), output_format(o));
  return kOk;
}

int cmd_table1(const Options& o, std::ostream& out) {
  if (o.bound < 1) throw UsageError("--bound must be at least 1");
  // Sp(p',q') lives in dimension 4(p'+q').
  if (4 * o.bound > kMaxAmbientDim)
    throw CapError("--bound " + std::to_string(o.bound) + " needs so of dimension " + std::to_string(4 * o.bound) +
                   ", beyond the cap " + std::to_string(kMaxAmbientDim));
  const FormLibrary forms = load_forms(o);
  std::vector<Table1Row> rows = table1(o.bound, forms);
  write_table1(out, o.bound, rows, output_format(o));
  for (const auto& r : rows)
    if (!r.match) return kCheckFailed;
  return kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<SuiteResult> suites = run_selfcheck(o.forms_dir);
  write_selfcheck(out, suites, output_format(o));
  for (const auto& s : suites)
    if (!s.passed()) {
      err << "selfcheck failed in suite " << s.name << ": " << s.first_failure << "\n";
      return kCheckFailed;
    }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford, spin and spin^c representations; invariant spinors of holonomy algebras", "spinc"};
  app.require_subcommand(1);
  Options o;

  CLI::App* rep = app.add_subcommand("rep", "Print the Clifford generator matrices Phi(e_1..e_m)");
  rep->add_option("--signature", o.signature, "Signature p,q")->required();
  add_output_flags(rep, o);

  CLI::App* inv = app.add_subcommand("invariants", "Compute the invariant spinors of one holonomy algebra");
  inv->add_option("--family", o.family,
                  "SO, SU, U, Sp, G2, G2split, G2complex, Spin7, Spin43 or Spin7complex")
      ->required();
  inv->add_option("--params", o.params, "p',q' (SO takes the signature p,q)");
  inv->add_option("--forms-dir", o.forms_dir, "Directory holding the calibration forms");
  add_output_flags(inv, o);

  CLI::App* tab = app.add_subcommand("table1", "Reproduce the holonomy table of parallel spinor counts");
  tab->add_option("--bound", o.bound, "Largest p'+q' for the SU, U and Sp rows (1..4)");
  tab->add_option("--forms-dir", o.forms_dir, "Directory holding the calibration forms");
  add_output_flags(tab, o);

  CLI::App* self = app.add_subcommand("selfcheck", "Run the built-in invariant suites");
  self->add_flag("--json", o.json, "Shorthand for --format json");
  self->add_option("--forms-dir", o.forms_dir, "Directory holding the calibration forms");
  add_output_flags(self, o);

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 wants reversed argv without argv[0]
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (rep->parsed()) return cmd_rep(o, *sink);
    if (inv->parsed()) return cmd_invariants(o, *sink);
    if (tab->parsed()) return cmd_table1(o, *sink);
    return cmd_selfcheck(o, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace spinc::cli
