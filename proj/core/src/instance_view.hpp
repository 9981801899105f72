#pragma once

// Index-based working view over a validated instance. Solvers enumerate over
// plain int arrays here and convert back to ids only when reporting plans.

#include <span>
#include <vector>

#include "gerrysolve/election.hpp"

namespace gerrysolve::detail {

struct InstanceView {
  explicit InstanceView(const ProblemInstance& inst);

  const ProblemInstance* inst;
  int n = 0;  // voters
  int k = 0;  // districts
  int m = 0;  // alternatives
  int target = -1;
  WinnerMode mode = WinnerMode::Unique;
  bool has_graph = false;
  Rational budget;
  bool unit_cost = false;

  std::vector<int> top;                 // voter -> top alternative
  std::vector<int> home;                // voter -> home district
  std::vector<std::vector<int>> adj;    // voter adjacency, empty when no graph
  std::vector<Cost> move_cost;          // [v * k + d]

  const Cost& cost(int v, int d) const { return move_cost[static_cast<std::size_t>(v) * k + d]; }

  // Winner test for a full voter->district assignment (entries in [0, k)).
  bool target_wins(std::span<const int> assign) const;

  // Every district of the assignment induces a connected subgraph (true when
  // the instance has no graph).
  bool districts_connected(std::span<const int> assign) const;

  // Sum of move costs for voters whose assigned district differs from home.
  Cost assignment_cost(std::span<const int> assign) const;

  MovePlan to_plan(std::span<const int> assign) const;

  // (voter index, destination) pairs, canonical enumeration order.
  std::vector<std::pair<int, int>> plan_key(std::span<const int> assign) const;
};

}  // namespace gerrysolve::detail
