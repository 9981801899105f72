#include "gerrysolve/election.hpp"

#include <algorithm>
#include <queue>

namespace gerrysolve {

bool variant_has_graph(Variant v) { return v == Variant::GB || v == Variant::MGM; }
bool variant_unit_cost(Variant v) { return v == Variant::MGM || v == Variant::MRGM; }

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::GB: return "GB";
    case Variant::MGM: return "MGM";
    case Variant::RGB: return "RGB";
    case Variant::MRGM: return "MRGM";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "GB") return Variant::GB;
  if (name == "MGM") return Variant::MGM;
  if (name == "RGB") return Variant::RGB;
  if (name == "MRGM") return Variant::MRGM;
  return std::nullopt;
}

void VoterGraph::add_edge(VoterId a, VoterId b) {
  if (a == b) throw ValidationError("graph: self-loop at '" + a + "'");
  if (b < a) std::swap(a, b);
  edges.insert({std::move(a), std::move(b)});
}

const Cost& CostMap::effective(const VoterId& voter, int district) const {
  auto it = entries.find({voter, district});
  return it == entries.end() ? default_cost : it->second;
}

bool CostMap::all_unit() const {
  const Cost one = Cost::finite(Rational(1));
  if (!(default_cost == one)) return false;
  for (const auto& [key, cost] : entries)
    if (!(cost == one)) return false;
  return true;
}

void validate_instance(const ProblemInstance& inst) {
  if (inst.districts <= 0) throw ValidationError("districts must be positive");
  if (inst.alternatives.empty()) throw ValidationError("no alternatives");

  std::map<AltId, int> alt_index;
  for (const AltId& a : inst.alternatives) {
    if (a.empty()) throw ValidationError("empty alternative id");
    if (!alt_index.emplace(a, static_cast<int>(alt_index.size())).second)
      throw ValidationError("duplicate alternative '" + a + "'");
  }
  if (!alt_index.count(inst.target))
    throw ValidationError("target '" + inst.target + "' is not an alternative");

  std::set<VoterId> ids;
  std::vector<int> district_size(inst.districts, 0);
  for (const Voter& v : inst.voters) {
    if (v.id.empty()) throw ValidationError("empty voter id");
    if (!ids.insert(v.id).second) throw ValidationError("duplicate voter '" + v.id + "'");
    if (v.home_district < 0 || v.home_district >= inst.districts)
      throw ValidationError("voter '" + v.id + "': district out of range");
    if (v.ranking.size() != inst.alternatives.size())
      throw ValidationError("voter '" + v.id + "': ranking is not a permutation of the alternatives");
    std::set<AltId> seen;
    for (const AltId& a : v.ranking) {
      if (!alt_index.count(a) || !seen.insert(a).second)
        throw ValidationError("voter '" + v.id + "': ranking is not a permutation of the alternatives");
    }
    ++district_size[v.home_district];
  }
  for (int d = 0; d < inst.districts; ++d)
    if (district_size[d] == 0)
      throw ValidationError("initial district " + std::to_string(d) + " is empty");

  if (variant_has_graph(inst.variant) != inst.graph.has_value())
    throw ValidationError(inst.graph ? "variant " + variant_name(inst.variant) + " takes no voter graph"
                                     : "variant " + variant_name(inst.variant) + " requires a voter graph");
  if (inst.graph) {
    if (inst.graph->vertices != ids)
      throw ValidationError("graph vertex set differs from the voter set");
    for (const auto& [a, b] : inst.graph->edges) {
      if (a == b) throw ValidationError("graph: self-loop at '" + a + "'");
      if (!ids.count(a) || !ids.count(b))
        throw ValidationError("graph edge references unknown voter");
    }
    // every initial district must induce a connected subgraph
    for (int d = 0; d < inst.districts; ++d) {
      std::set<VoterId> members;
      for (const Voter& v : inst.voters)
        if (v.home_district == d) members.insert(v.id);
      if (!induced_connected(*inst.graph, members))
        throw ValidationError("initial district " + std::to_string(d) + " is not connected");
    }
  }

  if (variant_unit_cost(inst.variant)) {
    if (!inst.costs.all_unit())
      throw ValidationError("variant " + variant_name(inst.variant) + " requires unit costs");
    if (!inst.budget.is_integer())
      throw ValidationError("variant " + variant_name(inst.variant) + " requires an integer budget");
  }
  if (inst.budget.negative()) throw ValidationError("negative budget");
  if (inst.costs.default_cost.is_finite() && inst.costs.default_cost.value().negative())
    throw ValidationError("negative default cost");
  for (const auto& [key, cost] : inst.costs.entries) {
    if (!ids.count(key.first))
      throw ValidationError("cost entry references unknown voter '" + key.first + "'");
    if (key.second < 0 || key.second >= inst.districts)
      throw ValidationError("cost entry district out of range for voter '" + key.first + "'");
    if (cost.is_finite() && cost.value().negative())
      throw ValidationError("negative cost for voter '" + key.first + "'");
  }
}

void validate_plan(const ProblemInstance& inst, const MovePlan& plan) {
  std::map<VoterId, const Voter*> by_id;
  for (const Voter& v : inst.voters) by_id[v.id] = &v;
  std::set<VoterId> seen;
  for (const Move& mv : plan.moves) {
    auto it = by_id.find(mv.voter);
    if (it == by_id.end()) throw ValidationError("plan references unknown voter '" + mv.voter + "'");
    if (!seen.insert(mv.voter).second)
      throw ValidationError("plan moves voter '" + mv.voter + "' twice");
    if (mv.district < 0 || mv.district >= inst.districts)
      throw ValidationError("plan destination out of range for voter '" + mv.voter + "'");
    if (mv.district == it->second->home_district)
      throw ValidationError("plan moves voter '" + mv.voter + "' to its own district");
  }
}

std::set<AltId> plurality_winner_set(const std::vector<AltId>& alternatives,
                                     const std::vector<std::vector<AltId>>& ballots) {
  std::map<AltId, int> alt_index;
  for (const AltId& a : alternatives) alt_index.emplace(a, static_cast<int>(alt_index.size()));
  std::map<AltId, int> tops;
  for (const auto& ballot : ballots) {
    if (ballot.size() != alternatives.size())
      throw ValidationError("ballot is not a permutation of the alternative set");
    std::set<AltId> seen;
    for (const AltId& a : ballot)
      if (!alt_index.count(a) || !seen.insert(a).second)
        throw ValidationError("ballot is not a permutation of the alternative set");
    ++tops[ballot.front()];
  }
  std::set<AltId> winners;
  int best = 0;
  for (const auto& [a, t] : tops) best = std::max(best, t);
  if (best == 0) return winners;  // no ballots
  for (const auto& [a, t] : tops)
    if (t == best) winners.insert(a);
  return winners;
}

std::set<AltId> election_winner_set(const ProblemInstance& inst, const Districting& d) {
  std::map<AltId, int> wins;
  for (int dist = 0; dist < d.k; ++dist) {
    std::map<AltId, int> tops;
    for (const Voter& v : inst.voters) {
      auto it = d.assignment.find(v.id);
      if (it == d.assignment.end())
        throw ValidationError("districting misses voter '" + v.id + "'");
      if (it->second == dist) ++tops[v.ranking.front()];
    }
    int best = 0;
    for (const auto& [a, t] : tops) best = std::max(best, t);
    if (best == 0) continue;  // empty district: nobody wins it
    for (const auto& [a, t] : tops)
      if (t == best) ++wins[a];
  }
  int most = 0;
  for (const auto& [a, w] : wins) most = std::max(most, w);
  std::set<AltId> result;
  for (const AltId& a : inst.alternatives) {
    auto it = wins.find(a);
    int w = it == wins.end() ? 0 : it->second;
    if (w == most) result.insert(a);
  }
  return result;
}

bool is_election_winner(const ProblemInstance& inst, const Districting& d) {
  std::set<AltId> winners = election_winner_set(inst, d);
  if (inst.winner_mode == WinnerMode::Unique)
    return winners.size() == 1 && *winners.begin() == inst.target;
  return winners.count(inst.target) > 0;
}

bool induced_connected(const VoterGraph& graph, const std::set<VoterId>& voter_set) {
  for (const VoterId& v : voter_set)
    if (!graph.has_vertex(v)) throw ValidationError("unknown voter '" + v + "' in connectivity query");
  if (voter_set.size() <= 1) return true;

  std::map<VoterId, std::vector<const VoterId*>> adj;
  for (const auto& [a, b] : graph.edges) {
    if (voter_set.count(a) && voter_set.count(b)) {
      adj[a].push_back(&b);
      adj[b].push_back(&a);
    }
  }
  std::set<VoterId> visited;
  std::queue<VoterId> queue;
  queue.push(*voter_set.begin());
  visited.insert(*voter_set.begin());
  while (!queue.empty()) {
    VoterId cur = queue.front();
    queue.pop();
    for (const VoterId* nb : adj[cur])
      if (visited.insert(*nb).second) queue.push(*nb);
  }
  return visited.size() == voter_set.size();
}

Districting initial_districting(const ProblemInstance& inst) {
  Districting d;
  d.k = inst.districts;
  for (const Voter& v : inst.voters) d.assignment[v.id] = v.home_district;
  return d;
}

Districting apply_plan(const ProblemInstance& inst, const MovePlan& plan) {
  validate_plan(inst, plan);
  Districting d = initial_districting(inst);
  for (const Move& mv : plan.moves) d.assignment[mv.voter] = mv.district;
  return d;
}

Cost plan_cost(const ProblemInstance& inst, const MovePlan& plan) {
  Cost total = Cost::finite(Rational(0));
  for (const Move& mv : plan.moves) total += inst.costs.effective(mv.voter, mv.district);
  return total;
}

bool is_feasible_plan(const ProblemInstance& inst, const MovePlan& plan) {
  Cost cost = plan_cost(inst, plan);
  if (cost.is_unmovable() || !(cost.value() <= inst.budget)) return false;
  if (!inst.graph) return true;
  Districting d = apply_plan(inst, plan);
  for (int dist = 0; dist < d.k; ++dist) {
    std::set<VoterId> members;
    for (const auto& [id, dd] : d.assignment)
      if (dd == dist) members.insert(id);
    if (!induced_connected(*inst.graph, members)) return false;
  }
  return true;
}

}  // namespace gerrysolve
