// gerrysolve: solve, generate, verify, and measure robustness of
// district-based plurality bribery instances.
//
// Exit codes: 0 decided yes, 1 decided no (or verification mismatch),
// 2 usage/parse error, 3 guard exceeded / undecided.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gerrysolve/algorithms.hpp"
#include "gerrysolve/generate.hpp"
#include "gerrysolve/io.hpp"
#include "gerrysolve/reductions.hpp"
#include "gerrysolve/verify.hpp"

using namespace gerrysolve;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct SolveOptions {
  std::string input;
  std::string algorithm = "auto";
  int max_moves = -1;
  std::string winner_mode;
  int threads = 1;
  std::string output;
};

std::string pick_algorithm(const ProblemInstance& inst, std::uint64_t guard) {
  const int n = static_cast<int>(inst.voters.size());
  const int k = inst.districts;
  bool tree = false;
  if (inst.graph) tree = inst.graph->edges.size() == inst.voters.size() - 1;
  if (variant_unit_cost(inst.variant)) {
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (k > 0 ? k - 1 : 0);
    int b = static_cast<int>(inst.budget.integer_value());
    if (sat_pow(std::max<std::uint64_t>(pairs, 1), static_cast<unsigned>(std::min(b, n))) <= guard)
      return "bounded-moves";
  }
  if (sat_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n)) <= guard) return "oracle";
  if (variant_has_graph(inst.variant) && tree) return "tree-cuts";
  if (inst.variant == Variant::MRGM) return "fixed-districts";
  return "oracle";  // will report the guard breach
}

int run_solve(const SolveOptions& opt) {
  ProblemInstance inst = parse_instance(read_text_file(opt.input));
  if (opt.winner_mode == "unique") inst.winner_mode = WinnerMode::Unique;
  if (opt.winner_mode == "co") inst.winner_mode = WinnerMode::Co;
  std::uint64_t guard = default_guard();

  std::string algorithm = opt.algorithm == "auto" ? pick_algorithm(inst, guard) : opt.algorithm;
  std::optional<SolveResult> result;
  bool decision_only = false;
  bool yes = false;

  if (algorithm == "oracle") {
    result = solve_exact(inst, guard, opt.threads);
    yes = result.has_value();
  } else if (algorithm == "bounded-moves") {
    int moves = opt.max_moves;
    if (moves < 0) {
      if (!variant_unit_cost(inst.variant))
        throw ValidationError("--max-moves is required for GB/RGB with bounded-moves");
      moves = static_cast<int>(inst.budget.integer_value());
    }
    result = solve_bounded_moves(inst, moves, guard);
    yes = result.has_value();
  } else if (algorithm == "tree-cuts") {
    result = solve_tree_cuts(inst, guard);
    yes = result.has_value();
  } else if (algorithm == "fixed-districts") {
    result = solve_mrgm_fixed_districts(inst, guard);
    yes = result.has_value();
  } else if (algorithm == "dp") {
    decision_only = true;
    yes = solve_mrgm_dp(inst, guard);
  } else {
    throw CLI::ValidationError("--algorithm", "unknown algorithm '" + algorithm + "'");
  }

  std::printf("algorithm: %s\n", algorithm.c_str());
  std::printf("answer: %s\n", yes ? "yes" : "no");
  if (yes && !decision_only) {
    std::printf("cost: %s\n", result->cost.str().c_str());
    std::printf("moves: %zu\n", result->plan.moves.size());
    if (!opt.output.empty()) write_text_file(opt.output, serialize_plan(inst, result->plan));
  }
  return yes ? kExitYes : kExitNo;
}

int run_generate_reduction(const std::string& kind_name, const std::string& source,
                           const std::string& output, int lambda) {
  auto kind = reduction_from_name(kind_name);
  if (!kind) throw ValidationError("unknown reduction '" + kind_name + "'");
  std::string text = read_text_file(source);
  ProblemInstance out;
  switch (*kind) {
    case ReductionKind::X3cToRgb: out = x3c_to_rgb(parse_x3c(text)); break;
    case ReductionKind::X3cToMrgm: out = x3c_to_mrgm(parse_x3c(text), lambda); break;
    case ReductionKind::DcpToMgm: out = dcp_to_mgm(parse_2dcp(text)); break;
    case ReductionKind::X3cToTreeMgm: out = x3c_to_mgm_tree(parse_x3c(text)); break;
    case ReductionKind::LiftCompleteGraph: out = lift_complete_graph(parse_instance(text)); break;
    case ReductionKind::LiftUniformCost: out = lift_uniform_cost(parse_instance(text)); break;
  }
  write_text_file(output, serialize_instance(out));
  std::printf("wrote %s: variant %s, %zu voters, %d districts, budget %s\n", output.c_str(),
              variant_name(out.variant).c_str(), out.voters.size(), out.districts,
              out.budget.str().c_str());
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"district-based plurality bribery solvers and hardness-instance generators"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "decide an instance and emit a witness plan");
  solve->add_option("--input", solve_opt.input, "instance file")->required();
  solve->add_option("--algorithm", solve_opt.algorithm,
                    "oracle|bounded-moves|tree-cuts|fixed-districts|dp|auto");
  solve->add_option("--max-moves", solve_opt.max_moves, "mover bound for bounded-moves");
  solve->add_option("--winner-mode", solve_opt.winner_mode, "unique|co (overrides the instance)")
      ->check(CLI::IsMember({"unique", "co"}));
  solve->add_option("--threads", solve_opt.threads, "worker threads")->check(CLI::PositiveNumber);
  solve->add_option("--output", solve_opt.output, "write the witness plan here");

  CLI::App* generate = app.add_subcommand("generate", "build reduction or random instances");
  std::string reduction, source, output;
  int lambda = 1;
  bool random = false;
  std::string variant_name_opt = "MRGM";
  int voters = 6, districts = 2, alternatives = 2;
  std::uint64_t seed = 1;
  generate->add_option("--reduction", reduction,
                       "x3c-rgb|x3c-mrgm|dcp-mgm|x3c-tree-mgm|lift-complete|lift-unit-cost");
  generate->add_option("--source", source, "source instance file (for --reduction)");
  generate->add_option("--lambda", lambda, "per-element copies in x3c-mrgm");
  generate->add_flag("--random", random, "generate a random instance instead");
  generate->add_option("--variant", variant_name_opt, "GB|MGM|RGB|MRGM");
  generate->add_option("--voters", voters, "voter count");
  generate->add_option("--districts", districts, "district count");
  generate->add_option("--alternatives", alternatives, "alternative count");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--output", output, "output file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the differential suites");
  std::string suite;
  std::uint64_t verify_seed = 424243;
  int limit = 0;
  verify->add_option("--suite", suite, "reductions|solvers")
      ->required()
      ->check(CLI::IsMember({"reductions", "solvers"}));
  verify->add_option("--seed", verify_seed, "random seed for the sampled corpora");
  verify->add_option("--limit", limit, "cap instances per family (0 = full)");

  CLI::App* robustness = app.add_subcommand("robustness", "minimum moves that flip the winner");
  std::string robust_input;
  robustness->add_option("--input", robust_input, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opt);

    if (generate->parsed()) {
      if (random != reduction.empty())
        throw ValidationError("generate needs exactly one of --reduction or --random");
      if (random) {
        auto v = variant_from_name(variant_name_opt);
        if (!v) throw ValidationError("unknown variant '" + variant_name_opt + "'");
        RandomInstanceSpec spec;
        spec.variant = *v;
        spec.voters = voters;
        spec.districts = districts;
        spec.alternatives = alternatives;
        spec.seed = seed;
        ProblemInstance inst = random_instance(spec);
        write_text_file(output, serialize_instance(inst));
        std::printf("wrote %s: variant %s, %d voters, %d districts, seed %llu\n", output.c_str(),
                    variant_name_opt.c_str(), voters, districts,
                    static_cast<unsigned long long>(seed));
        return kExitYes;
      }
      if (source.empty()) throw ValidationError("--reduction requires --source");
      return run_generate_reduction(reduction, source, output, lambda);
    }

    if (verify->parsed()) {
      std::uint64_t guard = default_guard();
      SuiteReport report;
      if (suite == "solvers") {
        int scale = limit > 0 ? limit : 0;
        report.absorb(run_solver_differential(verify_seed, scale > 0 ? scale : 300,
                                              scale > 0 ? scale / 2 : 140, guard));
        report.absorb(run_tree_differential(verify_seed + 1, scale > 0 ? scale : 200, guard));
        report.absorb(run_lift_checks(verify_seed + 2, scale > 0 ? std::min(scale, 50) : 50, guard));
        report.absorb(run_invariant_checks(verify_seed + 3, guard));
      } else {
        report.absorb(run_reduction_equivalence(limit, guard));
        report.absorb(run_witness_forwarding(verify_seed, limit > 0 ? std::min(limit, 120) : 120,
                                             guard));
      }
      std::fputs(report.table().c_str(), stdout);
      std::printf("suite %s: %s\n", suite.c_str(), report.all_pass() ? "pass" : "FAIL");
      return report.all_pass() ? kExitYes : kExitNo;
    }

    if (robustness->parsed()) {
      ProblemInstance inst = parse_instance(read_text_file(robust_input));
      auto moves = min_moves_to_win(inst, default_guard());
      if (moves)
        std::printf("robustness: %d\n", *moves);
      else
        std::printf("robustness: unbounded\n");
      return moves ? kExitYes : kExitNo;
    }
  } catch (const GuardExceeded& e) {
    std::fprintf(stderr, "undecided: %s\n", e.what());
    return kExitUndecided;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
