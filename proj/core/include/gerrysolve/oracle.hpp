#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gerrysolve/election.hpp"

namespace gerrysolve {

struct SolveResult {
  MovePlan plan;
  Cost cost;
};

// Exact cover by 3-sets source: universe {1..3n}, collection of 3-element
// subsets (duplicates allowed).
struct X3CInstance {
  int universe_size = 0;                // 3n
  std::vector<std::vector<int>> sets;   // each sorted, 3 distinct elements in [1, 3n]
};

void validate_x3c(const X3CInstance& x3c);

// 2-disjoint connected partitioning source: connected graph, two disjoint
// non-empty anchor sets.
struct TwoDCPInstance {
  std::vector<std::string> vertices;                        // sorted, unique
  std::set<std::pair<std::string, std::string>> edges;      // endpoints sorted
  std::set<std::string> z1, z2;
};

void validate_2dcp(const TwoDCPInstance& dcp);

// Ground truth by full enumeration of all k^n voter->district assignments.
// Returns a minimum-cost winning feasible plan, ties broken by the
// lexicographically smallest (voter id, destination) move list; nullopt when
// no assignment qualifies. Throws GuardExceeded when k^n > size_guard.
// Results are identical at any thread count.
std::optional<SolveResult> solve_exact(const ProblemInstance& inst,
                                       std::uint64_t size_guard = default_guard(),
                                       int threads = 1);

// First exact cover in lexicographic index order, as indices into sets.
std::optional<std::vector<int>> solve_x3c_brute(const X3CInstance& x3c,
                                                std::uint64_t guard = default_guard());

// First valid bipartition (V1, V2) in a fixed enumeration order: vertices are
// scanned in sorted order and assigned to V2 by ascending bitmask.
std::optional<std::pair<std::set<std::string>, std::set<std::string>>> solve_2dcp_brute(
    const TwoDCPInstance& dcp, std::uint64_t guard = default_guard());

}  // namespace gerrysolve
