#pragma once

#include "gerrysolve/oracle.hpp"

namespace gerrysolve {

// Seeded random instance family. Tops are uniform over the alternatives; for
// graph variants the voter graph is a random tree (plus optional extra
// edges) and the initial districts are the components left by removing k-1
// random tree edges, so they start connected.
struct RandomInstanceSpec {
  Variant variant = Variant::MRGM;
  int voters = 6;
  int districts = 2;
  int alternatives = 2;
  std::uint64_t seed = 1;
  int max_budget = -1;      // -1: up to voter count
  bool pure_tree = false;   // graph variants: no extra edges beyond the tree
  bool random_costs = true; // GB/RGB: random rational entries and some unmovable pairs
};

ProblemInstance random_instance(const RandomInstanceSpec& spec);

// Random connected 2DCP source on `vertices` named "a", "b", ...
TwoDCPInstance random_2dcp(int vertices, std::uint64_t seed);

// Random plan with up to max_moves movers (may be infeasible; useful for
// conservation and inverse properties).
MovePlan random_plan(const ProblemInstance& inst, int max_moves, std::uint64_t seed);

}  // namespace gerrysolve
