#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gerrysolve/rational.hpp"

namespace gerrysolve {

using AltId = std::string;
using VoterId = std::string;

// The four problem variants. GB/MGM carry a voter graph and require every
// district to induce a connected subgraph; MGM/MRGM are the unit-cost
// restrictions where the budget bounds the number of moved voters.
enum class Variant { GB, MGM, RGB, MRGM };

enum class WinnerMode { Unique, Co };

bool variant_has_graph(Variant v);
bool variant_unit_cost(Variant v);
std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct Voter {
  VoterId id;
  std::vector<AltId> ranking;  // permutation of the alternative set, ranking[0] = top
  int home_district = 0;
};

// Undirected graph on voter ids. Edges are stored with endpoints sorted.
struct VoterGraph {
  std::set<VoterId> vertices;
  std::set<std::pair<VoterId, VoterId>> edges;

  void add_edge(VoterId a, VoterId b);
  bool has_vertex(const VoterId& v) const { return vertices.count(v) > 0; }
};

// Per-(voter, destination) move prices. Pairs without an explicit entry take
// default_cost. Unit-cost variants fix every effective price at 1.
struct CostMap {
  Cost default_cost = Cost::finite(Rational(1));
  std::map<std::pair<VoterId, int>, Cost> entries;

  const Cost& effective(const VoterId& voter, int district) const;
  bool all_unit() const;
};

// A voter -> district assignment, the result of applying a plan. Districts
// may become empty here; an empty district awards no win to anyone.
struct Districting {
  int k = 0;
  std::map<VoterId, int> assignment;
};

struct Move {
  VoterId voter;
  int district = 0;  // destination, must differ from the voter's home

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Canonical witness for "re-district within budget": the voters that leave
// their home district and where they go. Kept sorted by voter id.
struct MovePlan {
  std::vector<Move> moves;

  friend bool operator==(const MovePlan&, const MovePlan&) = default;
};

struct ProblemInstance {
  std::vector<AltId> alternatives;   // sorted, unique
  std::vector<Voter> voters;         // sorted by id, unique
  int districts = 0;                 // k
  std::optional<VoterGraph> graph;   // present iff variant is GB or MGM
  CostMap costs;
  Rational budget;                   // nonnegative; integer for MGM/MRGM
  AltId target;
  Variant variant = Variant::MRGM;
  WinnerMode winner_mode = WinnerMode::Unique;
};

// Checks every model invariant; throws ValidationError naming the first
// violation. Initial districts must all be non-empty and, when a graph is
// present, connected. All operations below assume a validated instance.
void validate_instance(const ProblemInstance& inst);

// Plan shape against an instance: known voters, no duplicates, destination in
// range and different from home.
void validate_plan(const ProblemInstance& inst, const MovePlan& plan);

// Plurality winners of a ballot multiset: every alternative whose top-count
// is maximal; empty ballots produce an empty winner set.
std::set<AltId> plurality_winner_set(const std::vector<AltId>& alternatives,
                                     const std::vector<std::vector<AltId>>& ballots);

// Election winners: alternatives winning (possibly co-winning) the maximum
// number of districts.
std::set<AltId> election_winner_set(const ProblemInstance& inst, const Districting& d);

bool is_election_winner(const ProblemInstance& inst, const Districting& d);

// True iff the subgraph induced by voter_set is connected. Empty and
// singleton sets count as connected.
bool induced_connected(const VoterGraph& graph, const std::set<VoterId>& voter_set);

Districting initial_districting(const ProblemInstance& inst);

Districting apply_plan(const ProblemInstance& inst, const MovePlan& plan);

Cost plan_cost(const ProblemInstance& inst, const MovePlan& plan);

// Affordable and, for graph variants, leaves every district connected.
bool is_feasible_plan(const ProblemInstance& inst, const MovePlan& plan);

}  // namespace gerrysolve
