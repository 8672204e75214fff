#include "hurmono/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hurmono/braid.hpp"
#include "hurmono/error.hpp"
#include "hurmono/golden.hpp"
#include "hurmono/report_io.hpp"
#include "hurmono/sheets.hpp"

namespace hurmono::cli {

namespace {

// Usage problem tied to one flag.
class FlagError : public Error {
 public:
  FlagError(const std::string& flag, const std::string& what) : Error(flag + ": " + what) {}
};

struct SpecFlags {
  std::string degrees;
  std::string genera;
  std::string profiles;
};

struct CommonFlags {
  std::string format = "text";
  int threads = 0;
  bool no_symmetry = false;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--degrees", flags.degrees, "Degrees of the source components, e.g. 2,1")->required();
  cmd->add_option("--genera", flags.genera, "Genera of the source components, e.g. 0,0")->required();
  cmd->add_option("--profiles", flags.profiles, "Ramification profiles, e.g. \"2,1;2,1;1,1,1^2\"")->required();
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--threads", flags.threads, "Worker threads (default: $HURMONO_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-symmetry-reduction", flags.no_symmetry, "Enumerate without fixing the first permutation");
}

HurwitzSpec build_spec(const SpecFlags& flags) {
  HurwitzSpec spec;
  auto field = [](const char* flag, auto&& parse) {
    try {
      return parse();
    } catch (const GuardExceeded&) {
      throw;
    } catch (const Error& e) {
      throw FlagError(flag, e.what());
    }
  };
  spec.degrees = field("--degrees", [&] { return parse_degrees(flags.degrees); });
  spec.genera = field("--genera", [&] { return parse_genera(flags.genera); });
  spec.profiles = field("--profiles", [&] { return parse_profiles(flags.profiles); });
  try {
    spec.validate();
  } catch (const GuardExceeded&) {
    throw;
  } catch (const Error& e) {
    const std::string what = e.what();
    const char* flag = what.find("genera") != std::string::npos   ? "--genera"
                       : what.find("degrees") != std::string::npos ? "--degrees"
                                                                   : "--profiles";
    throw FlagError(flag, what);
  }
  return spec;
}

EnumerationOptions options_from(const CommonFlags& flags) {
  EnumerationOptions opts;
  opts.threads = flags.threads;
  if (opts.threads == 0) {
    if (const char* env = std::getenv("HURMONO_THREADS")) {
      try {
        opts.threads = std::max(0, std::stoi(env));
      } catch (const std::exception&) {
        throw FlagError("HURMONO_THREADS", "not an integer");
      }
    }
  }
  if (flags.no_symmetry) opts.symmetry_reduction = false;
  return opts;
}

int cmd_sheets(const SpecFlags& spec_flags, const CommonFlags& flags, std::ostream& out) {
  const HurwitzSpec spec = build_spec(spec_flags);
  const std::vector<MarkedTuple> sheets = enumerate_sheets(spec, options_from(flags));
  if (flags.format == "json") {
    out << sheets_document(spec, sheets).dump(2) << '\n';
  } else if (flags.format == "csv") {
    out << sheets_csv(sheets);
  } else {
    out << sheets_text(spec, sheets);
  }
  return kOk;
}

int cmd_report(const SpecFlags& spec_flags, const CommonFlags& flags, int verbosity, std::ostream& out) {
  const HurwitzSpec spec = build_spec(spec_flags);
  if (spec.fibers() != 4) throw FlagError("--profiles", "monodromy requires exactly 4 marked fibers");
  const SheetGraph graph = build_sheet_graph(spec, options_from(flags));
  const std::vector<ComponentReport> comps = components(graph);
  if (flags.format == "json") {
    out << report_document(spec, graph.sheets.size(), comps).dump(2) << '\n';
  } else if (flags.format == "csv") {
    out << report_csv(comps);
  } else {
    out << report_text(spec, graph.sheets.size(), comps, verbosity);
  }
  return kOk;
}

int cmd_verify(std::optional<int> degree, const std::string& goldens_path, const CommonFlags& flags,
               std::ostream& out) {
  std::vector<GoldenRow> rows;
  if (goldens_path.empty()) {
    rows = embedded_goldens();
  } else {
    std::ifstream in(goldens_path);
    if (!in) throw FlagError("--goldens", "cannot open '" + goldens_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    rows = parse_goldens(buffer.str(), goldens_path);
  }
  const VerifySummary summary = verify_all(rows, degree, options_from(flags));
  if (flags.format == "json") {
    out << verify_document(summary).dump(2) << '\n';
  } else {
    out << verify_text(summary);
  }
  return summary.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheets, target-map monodromy and components of one-dimensional Hurwitz spaces"};
  app.name(args.empty() ? "hurmono" : args.front());
  app.require_subcommand(1);

  SpecFlags sheets_spec, report_spec;
  CommonFlags sheets_common, report_common, verify_common;
  int verbosity = 0;
  std::optional<int> verify_degree;
  std::string goldens_path;

  CLI::App* sheets = app.add_subcommand("sheets", "List the sheets over a fixed target curve");
  add_spec_flags(sheets, sheets_spec);
  add_common_flags(sheets, sheets_common);

  CLI::App* report = app.add_subcommand("report", "Components, degrees and genera of the Hurwitz curve");
  add_spec_flags(report, report_spec);
  add_common_flags(report, report_common);
  report->add_flag("-v,--verbose", verbosity, "Also print the sheet permutations per component");

  CLI::App* verify = app.add_subcommand("verify", "Recompute the golden result tables");
  verify->add_option("--degree", verify_degree, "Only rows of this degree");
  verify->add_option("--goldens", goldens_path, "Golden file to use instead of the built-in one");
  add_common_flags(verify, verify_common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sheets) return cmd_sheets(sheets_spec, sheets_common, out);
    if (*report) return cmd_report(report_spec, report_common, verbosity, out);
    return cmd_verify(verify_degree, goldens_path, verify_common, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace hurmono::cli
