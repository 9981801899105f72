#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gerrysolve/oracle.hpp"

namespace gerrysolve {

enum class ReductionKind {
  X3cToRgb,
  X3cToMrgm,
  DcpToMgm,
  X3cToTreeMgm,
  LiftCompleteGraph,
  LiftUniformCost,
};

std::string reduction_name(ReductionKind k);
std::optional<ReductionKind> reduction_from_name(const std::string& name);

// Grows the universe in fresh triples (one new set per triple) until
// 5n > m + 1. Preserves the yes/no answer.
X3CInstance pad_x3c(X3CInstance x3c);

// RGB target over {c, y}: per-element districts supply movable c-voters, one
// district per set receives them, filler districts absorb the remainder.
// Only the designated element voters can move, and only into districts of
// sets containing them. Pads the source first when needed.
ProblemInstance x3c_to_rgb(const X3CInstance& x3c);

// MRGM target with one alternative per universe element plus the favourite.
// Requires m >= n (fewer sets than needed is trivially no).
ProblemInstance x3c_to_mrgm(const X3CInstance& x3c, int lambda = 1);

// Two-district MGM target mirroring the source graph, with two long pendant
// chains anchoring the districts. Budget 2n for n source vertices.
ProblemInstance dcp_to_mgm(const TwoDCPInstance& dcp);

// Tree MGM target: one 40n-voter path district per set, 10n-voter path
// districts per uncovered (element, slot) pair, all attached to one hub.
// Rejects sources whose every element appears in every set ("degenerate
// source": there would be no hub district to receive moved voters).
ProblemInstance x3c_to_mgm_tree(const X3CInstance& x3c);

// Forward-direction witness translations: turn a source certificate into a
// move plan for the generated instance.
MovePlan rgb_witness(const X3CInstance& padded, const std::vector<int>& cover);
MovePlan mrgm_witness(const X3CInstance& x3c, const std::vector<int>& cover);
MovePlan dcp_witness(const TwoDCPInstance& dcp, const std::set<std::string>& v1,
                     const std::set<std::string>& v2);
MovePlan tree_witness(const X3CInstance& x3c, const std::vector<int>& cover);

// Attaches a complete voter graph (RGB -> GB, MRGM -> MGM). Answers coincide.
ProblemInstance lift_complete_graph(const ProblemInstance& inst);

// Makes the implicit all-ones cost map explicit (MRGM -> RGB, MGM -> GB).
ProblemInstance lift_uniform_cost(const ProblemInstance& inst);

enum class Verdict { Yes, No, Unverified };
std::string verdict_name(Verdict v);

struct ReductionReport {
  ReductionKind kind;
  Verdict source_answer = Verdict::Unverified;
  Verdict target_answer = Verdict::Unverified;
  std::optional<MovePlan> witness_forwarded;
  bool witness_valid = true;  // meaningful only when a witness was forwarded
  std::vector<std::pair<std::string, bool>> structural_checks;

  bool passes() const;
};

// Decides the source by brute force, decides the target with the cheapest
// in-range solver (or marks it unverified), forwards the yes-witness, and
// runs the structural checks.
ReductionReport verify_reduction(ReductionKind kind, const X3CInstance& source,
                                 std::uint64_t guard = default_guard());
ReductionReport verify_reduction(ReductionKind kind, const TwoDCPInstance& source,
                                 std::uint64_t guard = default_guard());
ReductionReport verify_reduction(ReductionKind kind, const ProblemInstance& source,
                                 std::uint64_t guard = default_guard());

}  // namespace gerrysolve
