#include "lambda_gs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "lambda_gs/errors.hpp"
#include "lambda_gs/report.hpp"

namespace lambda_gs {

namespace {

struct RunConfig {
  std::string a;
  std::string b;
  std::string c;
  std::string spec;
  int subgroup = 1;
  int depth = kOracleDepth;
  std::string root_rule = "h0";
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 7;
  std::string which = "all";
};

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  cmd->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
}

void add_tree_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--depth", cfg.depth, "Oracle tree depth");
  cmd->add_option("--root-rule", cfg.root_rule,
                  "Virtual parent coset of the root: h0 or h1")
      ->check(CLI::IsMember({"h0", "h1"}));
  cmd->add_option("--seed", cfg.seed, "Seed for sampled checks");
}

void add_subgroup_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--subgroup", cfg.subgroup,
                  "Generator index j; the subgroup is H_A with A = {j}")
      ->check(CLI::Range(1, 3));
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + cfg.out_path + "'");
  file << text;
}

void check_depth(int depth) {
  if (depth > max_depth()) {
    throw CapacityError("depth " + std::to_string(depth) + " exceeds cap " +
                        std::to_string(max_depth()) +
                        " (set LAMBDA_GS_MAX_DEPTH to raise it)");
  }
  if (depth < 4) throw ParseError("--depth must be at least 4");
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  check_depth(cfg.depth);
  VerifyRun run;
  run.which = cfg.which;
  run.depth = cfg.depth;
  run.seed = cfg.seed;
  if (cfg.which == "periodic" || cfg.which == "all") {
    run.sections.push_back(verify_theorem_periodic(cfg.depth));
  }
  if (cfg.which == "weakly-periodic" || cfg.which == "all") {
    run.sections.push_back(verify_theorem_weakly_periodic(cfg.depth));
  }
  if (cfg.which == "all") run.lemmas = run_lemma_checks(cfg.seed, cfg.depth);
  emit(render(run, parse_format(cfg.format)), cfg, out);
  return run.internally_consistent() ? kExitSuccess : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact ground-state analysis of the lambda-model on the Cayley tree of order two",
               "lambda-gs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classify = app.add_subcommand(
      "classify-params", "Evaluate U_1..U_10 at (a,b,c) and list the regions A_m");
  classify->add_option("--a", cfg.a, "Coupling for |i-j| = 2 (exact decimal)")->required();
  classify->add_option("--b", cfg.b, "Coupling for |i-j| = 1 (exact decimal)")->required();
  classify->add_option("--c", cfg.c, "Coupling for i = j (exact decimal)")->required();
  add_output_options(classify, cfg);

  auto* analyze = app.add_subcommand(
      "analyze-spec", "Class set and ground-state region of one configuration");
  analyze->add_option("--spec", cfg.spec, "wp:σ00σ01σ10σ11 or p:σ0σ1")->required();
  add_subgroup_option(analyze, cfg);
  add_tree_options(analyze, cfg);
  add_output_options(analyze, cfg);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Table of all 81 weakly periodic configurations");
  add_subgroup_option(enumerate, cfg);
  add_tree_options(enumerate, cfg);
  add_output_options(enumerate, cfg);

  auto* verify = app.add_subcommand(
      "verify", "Check the periodic and weakly periodic ground-state theorems");
  verify->add_option("which", cfg.which, "periodic, weakly-periodic or all")
      ->check(CLI::IsMember({"periodic", "weakly-periodic", "all"}));
  add_tree_options(verify, cfg);
  add_output_options(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    const ReportFormat format = parse_format(cfg.format);
    if (classify->parsed()) {
      const ExactParams p{parse_rational(cfg.a), parse_rational(cfg.b),
                          parse_rational(cfg.c)};
      emit(render(classify_params(p), format), cfg, out);
      return kExitSuccess;
    }
    if (analyze->parsed()) {
      check_depth(cfg.depth);
      const AnySpec spec = parse_spec(cfg.spec);
      const auto analysis =
          analyze_spec(spec, SubgroupDescriptor::single(2, cfg.subgroup), cfg.depth,
                       parse_root_convention(cfg.root_rule));
      emit(render(analysis, format), cfg, out);
      const bool replayed =
          std::all_of(analysis.witnesses.begin(), analysis.witnesses.end(),
                      [](const ConfirmedWitness& w) { return w.confirmed(); });
      return replayed ? kExitSuccess : kExitMismatch;
    }
    if (enumerate->parsed()) {
      check_depth(cfg.depth);
      const auto report =
          enumerate_all(SubgroupDescriptor::single(2, cfg.subgroup), cfg.depth);
      emit(render(report, format), cfg, out);
      return report.internally_consistent() ? kExitSuccess : kExitMismatch;
    }
    return run_verify(cfg, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lambda_gs
