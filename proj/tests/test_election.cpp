#include <doctest.h>

#include "gerrysolve/election.hpp"
#include "helpers.hpp"

using namespace gerrysolve;
using namespace gerrysolve::testing;

namespace {

std::vector<std::vector<AltId>> ballots_from_tops(const std::vector<AltId>& alternatives,
                                                  const std::vector<AltId>& tops) {
  std::vector<std::vector<AltId>> ballots;
  for (const AltId& top : tops) {
    std::vector<AltId> b{top};
    for (const AltId& a : alternatives)
      if (a != top) b.push_back(a);
    ballots.push_back(std::move(b));
  }
  return ballots;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3) <= Rational(7, 2));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("1.5") == Rational(3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
  CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
}

TEST_CASE("cost ordering treats unmovable as absorbing maximum") {
  Cost one = Cost::finite(Rational(1));
  CHECK(one + Cost::unmovable() == Cost::unmovable());
  CHECK(one < Cost::unmovable());
  CHECK_FALSE(Cost::unmovable() < one);
  CHECK(Cost::unmovable() == Cost::unmovable());
}

TEST_CASE("plurality winners") {
  std::vector<AltId> alts{"c", "y"};
  CHECK(plurality_winner_set(alts, ballots_from_tops(alts, {"c", "c", "y"})) ==
        std::set<AltId>{"c"});

  std::vector<AltId> abc{"a", "b", "c"};
  CHECK(plurality_winner_set(abc, ballots_from_tops(abc, {"a", "b", "c"})) ==
        std::set<AltId>{"a", "b", "c"});

  CHECK(plurality_winner_set(alts, {}) == std::set<AltId>{});

  CHECK_THROWS_AS(plurality_winner_set(alts, {{"c"}}), ValidationError);
  CHECK_THROWS_AS(plurality_winner_set(alts, {{"c", "c"}}), ValidationError);
}

TEST_CASE("election winners count districts won, ties included") {
  auto inst = make_instance(Variant::MRGM, {"c", "y"},
                            {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 0},
                             {"v4", "y", 1}, {"v5", "y", 1}, {"v6", "c", 1}},
                            2, Rational(0), "c");
  CHECK(election_winner_set(inst, initial_districting(inst)) == std::set<AltId>{"c", "y"});

  auto strict = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                              Rational(0), "c");
  CHECK(election_winner_set(strict, initial_districting(strict)) == std::set<AltId>{"c"});

  // tie in one district still awards the district to both sides
  auto mixed = make_instance(Variant::MRGM, {"c", "y"},
                             {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 0}, {"v4", "y", 0},
                              {"v5", "c", 1}, {"v6", "c", 1}, {"v7", "y", 2}},
                             3, Rational(0), "c");
  CHECK(election_winner_set(mixed, initial_districting(mixed)) == std::set<AltId>{"c", "y"});
}

TEST_CASE("plurality winners ignore ballot order") {
  std::vector<AltId> alts{"a", "b", "c"};
  std::vector<AltId> tops{"a", "b", "b", "c", "a", "a", "c"};
  auto ballots = ballots_from_tops(alts, tops);
  auto expected = plurality_winner_set(alts, ballots);
  SplitMix64 rng(99);
  for (int round = 0; round < 20; ++round) {
    for (std::size_t i = ballots.size(); i > 1; --i)
      std::swap(ballots[i - 1], ballots[rng.below(i)]);
    CHECK(plurality_winner_set(alts, ballots) == expected);
  }
}

TEST_CASE("winner modes") {
  auto tie = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "y", 1}}, 2,
                           Rational(0), "c");
  CHECK_FALSE(is_election_winner(tie, initial_districting(tie)));
  ProblemInstance co = tie;
  co.winner_mode = WinnerMode::Co;
  CHECK(is_election_winner(co, initial_districting(co)));

  auto sole = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                            Rational(0), "c");
  CHECK(is_election_winner(sole, initial_districting(sole)));
}

TEST_CASE("induced connectivity") {
  VoterGraph g;
  g.vertices = {"v1", "v2", "v3"};
  g.add_edge("v1", "v2");
  g.add_edge("v2", "v3");
  CHECK_FALSE(induced_connected(g, {"v1", "v3"}));
  CHECK(induced_connected(g, {"v1", "v2", "v3"}));
  CHECK(induced_connected(g, {}));
  CHECK(induced_connected(g, {"v2"}));
  CHECK_THROWS_AS(induced_connected(g, {"nope"}), ValidationError);
}

TEST_CASE("apply_plan") {
  auto inst = make_instance(Variant::MRGM, {"c", "y"},
                            {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "c", 1}}, 2, Rational(2), "c");
  CHECK(apply_plan(inst, {}).assignment == initial_districting(inst).assignment);

  Districting moved = apply_plan(inst, plan_of({{"v1", 1}}));
  CHECK(moved.assignment.at("v1") == 1);
  CHECK(moved.assignment.at("v2") == 0);
  CHECK(moved.assignment.at("v3") == 1);

  // disjoint moves commute
  Districting ab = apply_plan(inst, plan_of({{"v1", 1}, {"v2", 1}}));
  MovePlan reversed;
  reversed.moves = {{"v2", 1}, {"v1", 1}};
  CHECK(apply_plan(inst, reversed).assignment == ab.assignment);

  CHECK_THROWS_AS(apply_plan(inst, plan_of({{"vX", 1}})), ValidationError);
  CHECK_THROWS_AS(apply_plan(inst, plan_of({{"v1", 5}})), ValidationError);
  CHECK_THROWS_AS(apply_plan(inst, plan_of({{"v1", 0}})), ValidationError);  // self move
  MovePlan duplicate;
  duplicate.moves = {{"v1", 1}, {"v1", 1}};
  CHECK_THROWS_AS(apply_plan(inst, duplicate), ValidationError);
}

TEST_CASE("plan costs") {
  auto unit = make_instance(Variant::MRGM, {"c", "y"},
                            {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "c", 0}, {"v4", "y", 1}}, 2,
                            Rational(3), "c");
  CHECK(plan_cost(unit, {}) == Cost::finite(Rational(0)));
  CHECK(plan_cost(unit, plan_of({{"v1", 1}, {"v2", 1}, {"v3", 1}})) == Cost::finite(Rational(3)));

  ProblemInstance priced = make_instance(Variant::RGB, {"c", "y"},
                                         {{"v1", "c", 0}, {"v2", "y", 1}}, 2, Rational(10), "c");
  priced.costs.entries[{"v1", 1}] = Cost::finite(Rational(1));
  priced.costs.entries[{"v2", 0}] = Cost::unmovable();
  CHECK(plan_cost(priced, plan_of({{"v1", 1}, {"v2", 0}})) == Cost::unmovable());
}

TEST_CASE("plan feasibility includes budget and connectivity") {
  auto inst = make_instance(
      Variant::MGM, {"c", "y"},
      {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 1}, {"v4", "c", 1}}, 2, Rational(1), "c",
      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
  CHECK(is_feasible_plan(inst, {}));
  CHECK(is_feasible_plan(inst, plan_of({{"v2", 1}})));       // districts stay connected
  CHECK_FALSE(is_feasible_plan(inst, plan_of({{"v1", 1}}))); // v1 ends isolated from district 1
  CHECK_FALSE(is_feasible_plan(inst, plan_of({{"v1", 1}, {"v2", 1}})));  // over budget
}

TEST_CASE("instance validation names the violation") {
  CHECK_THROWS_WITH_AS(
      make_instance(Variant::MGM, {"c", "y"},
                    {{"v1", "c", 0}, {"v2", "y", 1}, {"v3", "y", 0}}, 2, Rational(1), "c",
                    {{"v1", "v2"}, {"v2", "v3"}}),
      "initial district 0 is not connected", ValidationError);
  CHECK_THROWS_AS(make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}}, 2, Rational(0), "c"),
                  ValidationError);  // empty initial district
  CHECK_THROWS_AS(
      make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}}, 1, Rational(0), "zzz"),
      ValidationError);  // unknown target
  CHECK_THROWS_AS(make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}}, 1, Rational(1, 2), "c"),
                  ValidationError);  // non-integer unit-cost budget
}
