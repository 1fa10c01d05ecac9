#include "qent/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qent/errors.hpp"
#include "qent/experiments.hpp"
#include "qent/verify/acceptance.hpp"

namespace qent::cli {
namespace {

constexpr const char* kSynopsis =
    "usage: qent {fig1|fig2|fig3|fig4|boundary} [--kind rebit|qubit|quaterbit] [--samples N] [--seed S]\n"
    "            [--workers W] [--bins B] [--out PATH] [--format csv|json]\n"
    "       qent verify [--seed S] [--workers W] [--samples N]\n";

struct ExperimentFlags {
  std::string kind;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::uint32_t workers = 1;
  std::optional<std::size_t> bins;
  std::string out;
  std::string format = "csv";
};

struct Command {
  const char* name;
  const char* help;
  ExperimentName experiment;
  const char* default_kind;
};

constexpr Command kCommands[] = {
    {"fig1", "P(R) of random mixed states and the R >= 3 separability wall", ExperimentName::Fig1RDist, "qubit"},
    {"fig2", "P(E) of random mixed states with a pure-state overlay", ExperimentName::Fig2EDist, "qubit"},
    {"fig3", "P(C^2) of random pure states against the closed form", ExperimentName::Fig3C2Pure, "rebit"},
    {"fig4", "entanglement surface of pure two-quaterbit states", ExperimentName::Fig4QuaterbitSurface, "quaterbit"},
    {"boundary", "rebit (R, C^2) scatter against the maximal-concurrence bound", ExperimentName::BoundaryScan,
     "rebit"},
};

std::string positive_integer(std::string& v) {
  const bool digits = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
  if (digits && v.find_first_not_of('0') != std::string::npos) return {};
  return "must be a positive integer, got " + v;
}

const CLI::Validator kAtLeastOne{positive_integer, "POSITIVE"};

int usage_error(std::ostream& err, const std::string& message) {
  err << "qent: " << message << "\n" << kSynopsis;
  return kExitUsage;
}

void add_experiment_flags(CLI::App& sub, ExperimentFlags& f, const char* default_kind) {
  f.kind = default_kind;
  sub.add_option("--kind", f.kind, "rebit, qubit or quaterbit")->capture_default_str();
  sub.add_option("--samples", f.samples, "number of random states")->capture_default_str()->check(kAtLeastOne);
  sub.add_option("--seed", f.seed, "64-bit seed")->capture_default_str();
  sub.add_option("--workers", f.workers, "worker substreams")->capture_default_str()->check(kAtLeastOne);
  sub.add_option("--bins", f.bins, "histogram bins (default 60 for fig1, 50 otherwise)");
  sub.add_option("--out", f.out, "output path (stdout when omitted)");
  sub.add_option("--format", f.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
}

int run_experiment_command(const Command& cmd, const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  const auto kind = parse_kind(f.kind);
  if (!kind || (f.kind != "rebit" && f.kind != "qubit" && f.kind != "quaterbit"))
    return usage_error(err, "--kind must be one of rebit, qubit, quaterbit");

  ExperimentSpec spec;
  spec.name = cmd.experiment;
  spec.config = SampleConfig{*kind, f.seed, f.samples, f.workers};
  spec.bins = f.bins.value_or(default_bins(cmd.experiment));
  try {
    spec.validate();
  } catch (const DomainError& e) {
    return usage_error(err, e.what());
  }

  const ResultTable table = run_experiment(spec);
  const std::string text = f.format == "json" ? to_json(table) : to_csv(table);
  if (f.out.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) {
    err << "qent: cannot open " << f.out << " for writing\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo entanglement statistics for rebits, qubits and quaterbits", "qent"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ExperimentFlags flags[std::size(kCommands)];
  CLI::App* subs[std::size(kCommands)];
  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    subs[i] = app.add_subcommand(kCommands[i].name, kCommands[i].help);
    add_experiment_flags(*subs[i], flags[i], kCommands[i].default_kind);
  }

  verify::AcceptanceOptions vopts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--seed", vopts.seed, "64-bit seed")->capture_default_str();
  verify_cmd->add_option("--workers", vopts.workers, "worker substreams")->capture_default_str()->check(kAtLeastOne);
  verify_cmd->add_option("--samples", vopts.samples, "Monte Carlo sample count")
      ->capture_default_str()
      ->check(kAtLeastOne);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage_error(err, e.what());
  }

  if (verify_cmd->parsed()) {
    const auto outcomes = verify::run_acceptance(vopts, out);
    const bool ok = verify::all_passed(outcomes);
    out << (ok ? "all acceptance criteria passed" : "acceptance criteria FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
  }
  for (std::size_t i = 0; i < std::size(kCommands); ++i)
    if (subs[i]->parsed()) return run_experiment_command(kCommands[i], flags[i], out, err);
  return usage_error(err, "missing subcommand");
}

}  // namespace qent::cli
