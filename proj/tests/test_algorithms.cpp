#include <doctest.h>

#include "gerrysolve/algorithms.hpp"
#include "gerrysolve/generate.hpp"
#include "gerrysolve/reductions.hpp"
#include "helpers.hpp"

using namespace gerrysolve;
using namespace gerrysolve::testing;

namespace {

ProblemInstance one_move_instance(int budget = 1) {
  return make_instance(Variant::MRGM, {"c", "y"},
                       {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "y", 0},
                        {"v4", "c", 1}, {"v5", "c", 1}, {"v6", "c", 1}},
                       2, Rational(budget), "c");
}

ProblemInstance impossible_instance(int budget) {
  return make_instance(Variant::MRGM, {"c", "y"},
                       {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 0},
                        {"v4", "y", 1}, {"v5", "y", 1}, {"v6", "c", 1}},
                       2, Rational(budget), "c");
}

}  // namespace

TEST_CASE("bounded moves: zero budget keeps a winning instance winning") {
  auto inst = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                            Rational(0), "c");
  auto r = solve_bounded_moves(inst, 0);
  REQUIRE(r.has_value());
  CHECK(r->plan.moves.empty());
}

TEST_CASE("bounded moves agrees with the oracle on the one-move instance") {
  auto inst = one_move_instance();
  auto bounded = solve_bounded_moves(inst, 1);
  auto truth = solve_exact(inst);
  REQUIRE(bounded.has_value());
  REQUIRE(truth.has_value());
  CHECK(bounded->cost == truth->cost);
  CHECK(bounded->plan == truth->plan);
}

TEST_CASE("bounded moves decides the generated rgb instance") {
  X3CInstance src{3, {{1, 2, 3}}};
  ProblemInstance target = x3c_to_rgb(src);
  int budget = static_cast<int>(target.budget.integer_value());
  auto r = solve_bounded_moves(target, budget);
  REQUIRE(r.has_value());
  CHECK(r->cost == Cost::finite(Rational(3)));  // the three designated movers relocate
  CHECK(is_election_winner(target, apply_plan(target, r->plan)));
}

TEST_CASE("bounded moves respects its guard") {
  CHECK_THROWS_AS(solve_bounded_moves(one_move_instance(6), 6, 3), GuardExceeded);
}

TEST_CASE("tree cuts: single district") {
  auto winning = make_instance(Variant::MGM, {"c", "y"},
                               {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 0}}, 1, Rational(1),
                               "c", {{"v1", "v2"}, {"v2", "v3"}});
  auto r = solve_tree_cuts(winning);
  REQUIRE(r.has_value());
  CHECK(r->plan.moves.empty());

  auto losing = make_instance(Variant::MGM, {"c", "y"},
                              {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "y", 0}}, 1, Rational(1),
                              "c", {{"v1", "v2"}, {"v2", "v3"}});
  CHECK_FALSE(solve_tree_cuts(losing).has_value());
}

TEST_CASE("tree cuts: the c-c-y-c path already elects the target") {
  // initial districts {v1,v2} and {v3,v4}: c wins the first and ties the
  // second, so c takes two district wins against one
  auto inst = make_instance(
      Variant::MGM, {"c", "y"},
      {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 1}, {"v4", "c", 1}}, 2, Rational(1), "c",
      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
  auto cuts = solve_tree_cuts(inst);
  auto truth = solve_exact(inst);
  REQUIRE(cuts.has_value());
  REQUIRE(truth.has_value());
  CHECK(cuts->cost == Cost::finite(Rational(0)));
  CHECK(cuts->plan.moves.empty());
  CHECK(truth->cost == cuts->cost);
}

TEST_CASE("tree cuts reach solutions that empty a district") {
  // best (and only) plan within budget gathers everyone in district 0,
  // leaving districts 1 and 2 empty
  ProblemInstance inst = make_instance(
      Variant::GB, {"c", "y", "z"},
      {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 1}, {"v4", "z", 2}}, 3, Rational(2), "c",
      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
  inst.costs.default_cost = Cost::finite(Rational(100));
  inst.costs.entries[{"v3", 0}] = Cost::finite(Rational(1));
  inst.costs.entries[{"v4", 0}] = Cost::finite(Rational(1));
  validate_instance(inst);

  auto cuts = solve_tree_cuts(inst);
  auto truth = solve_exact(inst);
  REQUIRE(truth.has_value());
  REQUIRE(cuts.has_value());
  CHECK(cuts->cost == truth->cost);
  CHECK(cuts->cost == Cost::finite(Rational(2)));
  CHECK(cuts->plan == plan_of({{"v3", 0}, {"v4", 0}}));
}

TEST_CASE("tree cuts never move voters whose relocation is unmovable") {
  // star centre pinned to district 0; gathering everyone there wins at cost 1
  ProblemInstance inst = make_instance(
      Variant::GB, {"c", "y"},
      {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "c", 0}, {"v4", "y", 1}}, 2, Rational(10), "c",
      {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}});
  inst.costs.entries[{"v1", 1}] = Cost::unmovable();
  validate_instance(inst);
  auto cuts = solve_tree_cuts(inst);
  auto truth = solve_exact(inst);
  REQUIRE(cuts.has_value());
  REQUIRE(truth.has_value());
  CHECK(cuts->cost == truth->cost);
  CHECK(cuts->cost == Cost::finite(Rational(1)));
  CHECK(cuts->plan == plan_of({{"v4", 0}}));
  for (const Move& mv : cuts->plan.moves) CHECK(mv.voter != "v1");
}

TEST_CASE("tree cuts requires a tree") {
  ProblemInstance inst = make_instance(
      Variant::MGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "y", 1}}, 2, Rational(1),
      "c", {{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
  CHECK_THROWS_WITH_AS(solve_tree_cuts(inst), "graph is not a tree", ValidationError);
}

TEST_CASE("fixed districts: trivial, solvable, and impossible cases") {
  auto trivial = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                               Rational(2), "c");
  auto r0 = solve_mrgm_fixed_districts(trivial);
  REQUIRE(r0.has_value());
  CHECK(r0->plan.moves.empty());

  auto r1 = solve_mrgm_fixed_districts(one_move_instance());
  auto truth = solve_exact(one_move_instance());
  REQUIRE(r1.has_value());
  REQUIRE(truth.has_value());
  CHECK(r1->cost == truth->cost);
  CHECK(is_feasible_plan(one_move_instance(), r1->plan));
  CHECK(is_election_winner(one_move_instance(), apply_plan(one_move_instance(), r1->plan)));

  for (int budget : {0, 2, 4}) CHECK_FALSE(solve_mrgm_fixed_districts(impossible_instance(budget)));
}

TEST_CASE("fixed districts rejects non-MRGM input and oversized guess spaces") {
  auto mgm = make_instance(Variant::MGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "y", 1}}, 2,
                           Rational(1), "c", {{"v1", "v2"}});
  CHECK_THROWS_AS(solve_mrgm_fixed_districts(mgm), ValidationError);
  CHECK_THROWS_AS(solve_mrgm_fixed_districts(one_move_instance(), 5), GuardExceeded);
}

TEST_CASE("dynamic program: zero budget reduces to the initial winner check") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomInstanceSpec spec;
    spec.variant = Variant::MRGM;
    spec.voters = 5;
    spec.districts = 2;
    spec.alternatives = 2;
    spec.seed = seed;
    spec.max_budget = 0;
    ProblemInstance inst = random_instance(spec);
    CHECK(solve_mrgm_dp(inst) == is_election_winner(inst, initial_districting(inst)));
  }
}

TEST_CASE("dynamic program matches the oracle on the canonical examples") {
  CHECK(solve_mrgm_dp(one_move_instance()));
  for (int budget : {0, 1, 2, 3, 4, 5, 6}) CHECK_FALSE(solve_mrgm_dp(impossible_instance(budget)));
}

TEST_CASE("dp trace conserves votes across districts") {
  DpTrace trace = solve_mrgm_dp_trace(one_move_instance());
  REQUIRE(trace.winnable);
  REQUIRE(trace.district_net_change.size() == 2);
  for (std::size_t a = 0; a < 2; ++a) {
    int sum = 0;
    for (const auto& mu : trace.district_net_change) sum += mu[a];
    CHECK(sum == 0);
  }
}

TEST_CASE("tree-cut plans keep every district connected") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    RandomInstanceSpec spec;
    spec.variant = Variant::MGM;
    spec.voters = 8;
    spec.districts = 3;
    spec.alternatives = 2;
    spec.seed = seed;
    spec.max_budget = 3;
    spec.pure_tree = true;
    ProblemInstance inst = random_instance(spec);
    auto r = solve_tree_cuts(inst);
    if (r) {
      CHECK(is_feasible_plan(inst, r->plan));
      CHECK(is_election_winner(inst, apply_plan(inst, r->plan)));
    }
  }
}

TEST_CASE("co-winner mode flows through every solver") {
  for (std::uint64_t seed = 20; seed <= 32; ++seed) {
    RandomInstanceSpec spec;
    spec.variant = Variant::MRGM;
    spec.voters = 6;
    spec.districts = 2;
    spec.alternatives = 3;
    spec.seed = seed;
    spec.max_budget = 2;
    ProblemInstance inst = random_instance(spec);
    inst.winner_mode = WinnerMode::Co;
    int budget = static_cast<int>(inst.budget.integer_value());
    bool truth = solve_exact(inst).has_value();
    CHECK(solve_bounded_moves(inst, budget).has_value() == truth);
    CHECK(solve_mrgm_fixed_districts(inst).has_value() == truth);
    CHECK(solve_mrgm_dp(inst) == truth);
  }
}

TEST_CASE("robustness") {
  auto winning = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                               Rational(0), "c");
  CHECK(min_moves_to_win(winning) == 0);
  CHECK(min_moves_to_win(one_move_instance()) == 1);
  CHECK_FALSE(min_moves_to_win(impossible_instance(0)).has_value());

  auto gb = make_instance(Variant::RGB, {"c", "y"}, {{"v1", "c", 0}, {"v2", "y", 1}}, 2,
                          Rational(1), "c");
  CHECK_THROWS_AS(min_moves_to_win(gb), ValidationError);
}
