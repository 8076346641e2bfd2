#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qglue/analysis.hpp"
#include "qglue/builders.hpp"
#include "qglue/gates.hpp"
#include "qglue/glue.hpp"
#include "qglue/json_io.hpp"
#include "qglue/recursion.hpp"

namespace {

using namespace qglue;

// Dense amplitude vectors above this size need an explicit opt-in.
constexpr std::size_t kLargeDim = std::size_t{1} << 20;

void check_size(std::size_t dim, bool allow_large) {
  if (dim > kLargeDim && !allow_large)
    throw argument_error("state would have " + std::to_string(dim) +
                         " amplitudes; pass --allow-large to proceed");
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw argument_error(std::string("cannot parse ") + what + ": '" + std::string(text) + "'");
  return value;
}

// Predicts d^n for a builder spec without constructing the state so the size
// guard can fire before any allocation. Returns 0 for specs this cannot
// size; make_state then reports the real parse error.
std::size_t predicted_dim(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::string arg;
  if (colon != std::string::npos) {
    const auto rest = spec.substr(colon + 1);
    arg = rest.substr(0, rest.find(':'));
  }
  try {
    if (head == "bell") return 4;
    if (head == "aw3") return 8;
    if (head == "m4") return 16;
    if (head == "mep") return checked_pow(static_cast<std::size_t>(parse_int(arg, "d")), 2);
    if (head == "ghz" || head == "w" || head == "parity" || head == "ring")
      return checked_pow(2, parse_int(arg, "n"));
  } catch (const argument_error&) {
    // overflow in checked_pow: certainly past any size guard
    return static_cast<std::size_t>(-1);
  }
  return 0;
}

// Gate names accepted everywhere a gate is needed: the four builtins, "bell"
// for the generalized Bell-basis gate of the operand dimension, anything
// else is read as a gate JSON file.
TwoQuditGate resolve_gate(const std::string& name, int local_dim) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "v1" || lower == "v2" || lower == "v3" || lower == "v4")
    return builtin_gate(name);
  if (lower == "bell") return generalized_bell_gate(local_dim);
  return gate_from_json(read_text_file(name));
}

void print_probability(double p) { std::printf("%.17g\n", p); }

struct BuildArgs {
  std::string spec;
  std::string out;
  bool allow_large = false;
};

int run_build(const BuildArgs& args) {
  check_size(predicted_dim(args.spec), args.allow_large);
  save_state(args.out, make_state(args.spec));
  return 0;
}

struct GlueArgs {
  std::string left;
  std::string right;
  int x = 0;
  int y = 0;
  std::string gate;
  std::string variant = "none";
  std::string outcome;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_large = false;
};

int run_glue(const GlueArgs& args) {
  const PureState left = load_state(args.left);
  const PureState right = load_state(args.right);
  check_size(left.dim() * right.dim(), args.allow_large);
  const TwoQuditGate gate = resolve_gate(args.gate, left.local_dim());

  if (args.variant == "none") {
    if (!args.outcome.empty())
      throw argument_error("--outcome requires --variant star or starstar");
    save_state(args.out, glue(left, args.x, right, args.y, gate));
    return 0;
  }

  if (args.variant == "star") {
    std::optional<int> forced;
    if (!args.outcome.empty()) forced = parse_int(args.outcome, "outcome");
    const GlueOutcome result =
        glue_star(left, args.x, right, args.y, gate, forced, args.seed);
    write_text_file(args.out, outcome_to_json(result));
    print_probability(result.probability);
    return 0;
  }

  std::optional<std::pair<int, int>> forced;
  if (!args.outcome.empty()) {
    const auto comma = args.outcome.find(',');
    if (comma == std::string::npos)
      throw argument_error("starstar outcomes are two digits, e.g. --outcome 0,1");
    forced = std::pair{parse_int(args.outcome.substr(0, comma), "outcome"),
                       parse_int(args.outcome.substr(comma + 1), "outcome")};
  }
  const GlueOutcome result =
      glue_star_star(left, args.x, right, args.y, gate, forced, args.seed);
  write_text_file(args.out, outcome_to_json(result));
  print_probability(result.probability);
  return 0;
}

struct ChainArgs {
  std::string gate;
  int steps = 0;
  bool sample = false;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_large = false;
};

int run_chain(const ChainArgs& args) {
  // Builtin and "bell" gates act on qubits; a gate file fixes d itself.
  const TwoQuditGate gate = resolve_gate(args.gate, 2);
  check_size(checked_pow(static_cast<std::size_t>(gate.local_dim()), args.steps + 2),
             args.allow_large);
  const ChainResult result = qglue::run_chain(
      gate, args.steps,
      args.sample ? ChainOutcomePolicy::Sample : ChainOutcomePolicy::ForceZero, args.seed);
  save_state(args.out, result.state);
  print_probability(result.probability);
  if (args.sample) {
    std::string line = "outcomes:";
    for (int o : result.outcomes) {
      line += ' ';
      line += std::to_string(o);
    }
    std::fprintf(stderr, "%s\n", line.c_str());
  }
  return 0;
}

struct AnalyzeArgs {
  std::string in;
  std::string spec;
  std::string checks = "all";
  double tol = 1e-9;
  std::string out;
  bool allow_large = false;
};

int run_analyze(const AnalyzeArgs& args) {
  if (args.in.empty() == args.spec.empty())
    throw argument_error("pass exactly one of --in and --state");
  std::optional<PureState> state;
  if (!args.in.empty()) {
    // Accept either a bare state file or the outcome wrapper the measuring
    // glue variants write, so glue output pipes straight into analyze.
    const std::string text = read_text_file(args.in);
    try {
      state = state_from_json(text);
    } catch (const validation_error& state_err) {
      try {
        state = outcome_from_json(text).state;
      } catch (const validation_error&) {
        throw state_err;
      }
    }
    check_size(state->dim(), args.allow_large);
  } else {
    check_size(predicted_dim(args.spec), args.allow_large);
    state = make_state(args.spec);
  }
  const AnalysisReport report =
      analyze(*state, args.checks != "purity", args.checks != "k-uniformity", args.tol);
  const std::string json = report_to_json(report);
  std::fputs(json.c_str(), stdout);
  if (!args.out.empty()) write_text_file(args.out, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gluing operations, chain growth, and entanglement analysis "
               "for multipartite qudit pure states"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "construct a named state and write it as JSON");
  build->add_option("--state", build_args.spec,
                    "builder spec: bell:phi+|phi-|psi+|psi-, mep:D, ghz:N, w:N, aw3, "
                    "parity:N:even|odd, m4, ring:N")
      ->required();
  build->add_option("-o,--out", build_args.out, "output state file")->required();
  build->add_flag("--allow-large", build_args.allow_large,
                  "permit states beyond 2^20 amplitudes");

  GlueArgs glue_args;
  CLI::App* glue = app.add_subcommand("glue", "glue two state files across one site pair");
  glue->add_option("--left", glue_args.left, "left state file")->required();
  glue->add_option("-x", glue_args.x, "gluing site on the left state")->required();
  glue->add_option("--right", glue_args.right, "right state file")->required();
  glue->add_option("-y", glue_args.y, "gluing site on the right state")->required();
  glue->add_option("--gate", glue_args.gate, "V1..V4, bell, or a gate JSON file")->required();
  glue->add_option("--variant", glue_args.variant,
                   "none: no measurement; star: measure x; starstar: measure x and y")
      ->check(CLI::IsMember({"none", "star", "starstar"}));
  glue->add_option("--outcome", glue_args.outcome,
                   "forced outcome digit(s): star takes one digit, starstar two as x,y");
  glue->add_option("--seed", glue_args.seed, "sampling seed for unforced outcomes");
  glue->add_option("-o,--out", glue_args.out, "output file")->required();
  glue->add_flag("--allow-large", glue_args.allow_large,
                 "permit states beyond 2^20 amplitudes");

  ChainArgs chain_args;
  CLI::App* chain =
      app.add_subcommand("chain", "grow a state by gluing fresh entangled pairs in a line");
  chain->add_option("--gate", chain_args.gate, "V1..V4, bell, or a gate JSON file")->required();
  chain->add_option("--steps", chain_args.steps, "number of gluing steps")
      ->required()
      ->check(CLI::PositiveNumber);
  chain->add_flag("--sample", chain_args.sample,
                  "sample each step's outcome instead of forcing 0");
  chain->add_option("--seed", chain_args.seed, "sampling seed");
  chain->add_option("-o,--out", chain_args.out, "output state file")->required();
  chain->add_flag("--allow-large", chain_args.allow_large,
                  "permit states beyond 2^20 amplitudes");

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "k-uniformity and purity report for a state");
  analyze->add_option("--in", analyze_args.in, "state or glue outcome file to analyze");
  analyze->add_option("--state", analyze_args.spec, "builder spec to analyze instead of a file");
  analyze->add_option("--checks", analyze_args.checks, "which checks to run")
      ->check(CLI::IsMember({"all", "k-uniformity", "purity"}));
  analyze->add_option("--tol", analyze_args.tol, "uniformity deviation tolerance");
  analyze->add_option("-o,--out", analyze_args.out, "also write the report to this file");
  analyze->add_flag("--allow-large", analyze_args.allow_large,
                    "permit states beyond 2^20 amplitudes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (glue->parsed()) return run_glue(glue_args);
    if (chain->parsed()) return run_chain(chain_args);
    return run_analyze(analyze_args);
  } catch (const zero_probability_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
