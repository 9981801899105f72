#pragma once

#include <optional>

#include "gerrysolve/oracle.hpp"

namespace gerrysolve {

// Enumerates every plan moving at most max_moves voters, drawn from the
// finite-cost (voter, destination) pairs, and returns a minimum-cost winning
// feasible plan (ties: lexicographically smallest move list). For unit-cost
// variants with max_moves equal to the budget this decides the instance
// exactly; for GB/RGB it decides the restriction that at most max_moves
// voters relocate.
std::optional<SolveResult> solve_bounded_moves(const ProblemInstance& inst, int max_moves,
                                               std::uint64_t guard = default_guard());

// Exact solver for tree voter graphs with few districts. Every connected
// final districting corresponds to cutting at most k-1 tree edges and
// labelling the resulting components with distinct district indices
// (districts outside the image stay empty). All cut subsets of size 0..k-1
// and all injective labellings are costed; minimum-cost winner returned.
std::optional<SolveResult> solve_tree_cuts(const ProblemInstance& inst,
                                           std::uint64_t guard = default_guard());

// Exact MRGM solver for few districts: guesses the winning plurality score of
// every district and the set of districts the target wins, then repairs the
// districting toward each guess. Every emitted plan is re-validated against
// the election rules before being accepted.
std::optional<SolveResult> solve_mrgm_fixed_districts(const ProblemInstance& inst,
                                                      std::uint64_t guard = default_guard());

// Exact MRGM decision for few alternatives via a layered boolean table over
// (district prefix, per-alternative net vote transfer, spent budget,
// per-alternative district-win counts).
bool solve_mrgm_dp(const ProblemInstance& inst, std::uint64_t guard = default_guard());

// Diagnostic variant: when the answer is yes, also reconstructs one
// per-district net-change trajectory realizing it (the per-alternative
// changes telescope to zero across all districts).
struct DpTrace {
  bool winnable = false;
  std::vector<std::vector<int>> district_net_change;  // [district][alternative]
};
DpTrace solve_mrgm_dp_trace(const ProblemInstance& inst, std::uint64_t guard = default_guard());

// Robustness: smallest number of moved voters that makes the target win, or
// nullopt when no budget up to the voter count suffices. MGM/MRGM only.
std::optional<int> min_moves_to_win(const ProblemInstance& inst,
                                    std::uint64_t guard = default_guard());

}  // namespace gerrysolve
