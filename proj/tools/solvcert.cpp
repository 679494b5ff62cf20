// Command-line front end: certify, oracle, fixtures.
//
// Exit codes: 0 computed (any verdict), 2 input error or limit, 3 rule conflict.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "solvcert/fixtures.hpp"
#include "solvcert/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConflict = 3;

struct Flags {
  std::string file;
  std::uint64_t seed = 0;
  std::uint32_t trials = 64;
  std::int64_t bound = 10;
  bool oracle = false;
  bool no_oracle = false;
  std::size_t dim_cap = solvcert::kDefaultDimCap;
  std::size_t oracle_cap = solvcert::OracleLimits{}.unknown_cap;
  std::string format = "json";
  bool timing = false;
  bool certify = false;
};

/// "@name" selects a built-in fixture, "-" reads stdin, anything else is a path.
std::string read_input(const std::string& file) {
  if (!file.empty() && file[0] == '@') {
    const auto* f = solvcert::fixture_by_name(file.substr(1));
    if (!f) throw solvcert::InputError("unknown fixture '" + file.substr(1) + "'");
    return std::string(f->text);
  }
  std::stringstream buf;
  if (file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw solvcert::InputError("cannot open '" + file + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

solvcert::RunOptions options_from(const Flags& f) {
  solvcert::RunOptions opt;
  opt.search.seed = f.seed;
  opt.search.trials = f.trials;
  opt.search.coefficient_bound = f.bound;
  opt.limits.dim_cap = f.dim_cap;
  opt.limits.unknown_cap = f.oracle_cap;
  opt.timing = f.timing;
  if (f.oracle) opt.oracle = true;
  if (f.no_oracle) opt.oracle = false;
  return opt;
}

void emit(const solvcert::Json& doc, const std::string& format) {
  if (format == "text")
    std::cout << solvcert::render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("file", f.file, "presentation file, '-' for stdin, or @fixture")->required();
  cmd->add_option("--seed", f.seed, "seed for the non-singular search");
  cmd->add_option("--trials", f.trials, "random trials for the non-singular search")->check(CLI::PositiveNumber);
  cmd->add_option("--bound", f.bound, "coefficient bound B for random combinations")->check(CLI::PositiveNumber);
  cmd->add_option("--dim-cap", f.dim_cap, "largest quotient dimension the oracle materializes");
  cmd->add_option("--oracle-cap", f.oracle_cap, "largest n * dim A the oracle solves for");
  cmd->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timing", f.timing, "record wall time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvcert: solvability certificates for automorphism groups of local algebras"};
  app.require_subcommand(1);
  Flags flags;
  std::string filter;

  auto* certify = app.add_subcommand("certify", "run the certifier (and the oracle when it fits)");
  add_common(certify, flags);
  auto* oracle_flag = certify->add_flag("--oracle", flags.oracle, "always run the derivation oracle");
  certify->add_flag("--no-oracle", flags.no_oracle, "never run the derivation oracle")->excludes(oracle_flag);

  auto* oracle = app.add_subcommand("oracle", "compute Der(A) and its derived series");
  add_common(oracle, flags);
  oracle->add_flag("--certify", flags.certify, "also certify and cross-check");

  auto* fixtures = app.add_subcommand("fixtures", "run the built-in fixture corpus");
  fixtures->add_option("filter", filter, "substring of fixture names");
  fixtures->add_option("--seed", flags.seed, "seed for the non-singular search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*certify || *oracle) {
      auto opt = options_from(flags);
      if (*oracle) {
        opt.run_certifier = flags.certify;
        opt.oracle = true;
      }
      auto doc = solvcert::run_source(solvcert::parse_source(read_input(flags.file)), opt);
      emit(doc, flags.format);
      return 0;
    }
    auto selected = solvcert::find_fixtures(filter);
    if (selected.empty()) throw solvcert::InputError("no fixture matches '" + filter + "'");
    solvcert::RunOptions opt;
    opt.search.seed = flags.seed;
    std::printf("%-16s %-24s %-34s %-14s %s\n", "fixture", "verdict", "rules", "oracle", "agreement");
    for (const auto& f : selected) {
      auto o = solvcert::run_fixture(f, opt);
      std::printf("%-16s %-24s %-34s %-14s %s\n", o.name.c_str(), o.verdict.c_str(), o.rules.c_str(), o.oracle.c_str(),
                  o.agreement.c_str());
    }
    return 0;
  } catch (const solvcert::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const solvcert::ConflictError& e) {
    std::cerr << "conflict: " << e.what() << "\n";
    return kExitConflict;
  }
}
