#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gerrysolve/election.hpp"

namespace gerrysolve::testing {

struct VoterSpec {
  std::string id;
  std::string top;
  int district;
};

// Small-instance builder: rankings are the top followed by the remaining
// alternatives in sorted order.
inline ProblemInstance make_instance(Variant variant, std::vector<AltId> alternatives,
                                     std::vector<VoterSpec> voters, int districts,
                                     Rational budget, AltId target,
                                     std::vector<std::pair<std::string, std::string>> edges = {}) {
  ProblemInstance inst;
  inst.variant = variant;
  std::sort(alternatives.begin(), alternatives.end());
  inst.alternatives = alternatives;
  inst.districts = districts;
  inst.budget = budget;
  inst.target = std::move(target);
  for (const VoterSpec& spec : voters) {
    Voter v;
    v.id = spec.id;
    v.home_district = spec.district;
    v.ranking.push_back(spec.top);
    for (const AltId& a : inst.alternatives)
      if (a != spec.top) v.ranking.push_back(a);
    inst.voters.push_back(std::move(v));
  }
  std::sort(inst.voters.begin(), inst.voters.end(),
            [](const Voter& a, const Voter& b) { return a.id < b.id; });
  if (variant_has_graph(variant)) {
    inst.graph.emplace();
    for (const Voter& v : inst.voters) inst.graph->vertices.insert(v.id);
    for (const auto& [a, b] : edges) inst.graph->add_edge(a, b);
  }
  validate_instance(inst);
  return inst;
}

inline MovePlan plan_of(std::initializer_list<std::pair<std::string, int>> moves) {
  MovePlan plan;
  for (const auto& [voter, district] : moves) plan.moves.push_back({voter, district});
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

}  // namespace gerrysolve::testing
