#include <doctest.h>

#include "gerrysolve/oracle.hpp"
#include "helpers.hpp"

using namespace gerrysolve;
using namespace gerrysolve::testing;

namespace {

// D0 tops [c,y,y], D1 tops [c,c,c]: one move suffices
ProblemInstance one_move_instance(int budget = 1) {
  return make_instance(Variant::MRGM, {"c", "y"},
                       {{"v1", "c", 0}, {"v2", "y", 0}, {"v3", "y", 0},
                        {"v4", "c", 1}, {"v5", "c", 1}, {"v6", "c", 1}},
                       2, Rational(budget), "c");
}

// equal totals over two districts: no rearrangement makes c unique
ProblemInstance impossible_instance(int budget) {
  return make_instance(Variant::MRGM, {"c", "y"},
                       {{"v1", "c", 0}, {"v2", "c", 0}, {"v3", "y", 0},
                        {"v4", "y", 1}, {"v5", "y", 1}, {"v6", "c", 1}},
                       2, Rational(budget), "c");
}

}  // namespace

TEST_CASE("oracle finds the cheapest winning move") {
  auto result = solve_exact(one_move_instance());
  REQUIRE(result.has_value());
  CHECK(result->cost == Cost::finite(Rational(1)));
  CHECK(result->plan == plan_of({{"v2", 1}}));  // lexicographically first 1-move witness
  CHECK(is_feasible_plan(one_move_instance(), result->plan));
  CHECK(is_election_winner(one_move_instance(), apply_plan(one_move_instance(), result->plan)));
}

TEST_CASE("oracle returns the empty plan when the target already wins") {
  auto inst = make_instance(Variant::MRGM, {"c", "y"}, {{"v1", "c", 0}, {"v2", "c", 1}}, 2,
                            Rational(5), "c");
  auto result = solve_exact(inst);
  REQUIRE(result.has_value());
  CHECK(result->plan.moves.empty());
  CHECK(result->cost == Cost::finite(Rational(0)));
}

TEST_CASE("oracle proves equal-totals two-district instances unwinnable") {
  for (int budget : {0, 1, 2, 3, 6})
    CHECK_FALSE(solve_exact(impossible_instance(budget)).has_value());
}

TEST_CASE("oracle respects its size guard") {
  CHECK_THROWS_WITH_AS(solve_exact(one_move_instance(), 10),
                       doctest::Contains("instance too large for oracle"), GuardExceeded);
}

TEST_CASE("oracle answers are monotone in the budget") {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    auto base = one_move_instance();
    (void)seed;
    Cost prev_cost = Cost::unmovable();
    bool prev_yes = false;
    for (int b = 0; b <= 3; ++b) {
      ProblemInstance probe = base;
      probe.budget = Rational(b);
      auto r = solve_exact(probe);
      if (prev_yes) {
        REQUIRE(r.has_value());
        CHECK(r->cost <= prev_cost);
      }
      prev_yes = r.has_value();
      if (r) prev_cost = r->cost;
    }
  }
}

TEST_CASE("x3c brute force") {
  X3CInstance single{3, {{1, 2, 3}}};
  CHECK(solve_x3c_brute(single) == std::vector<int>{0});

  X3CInstance pair{6, {{1, 2, 3}, {4, 5, 6}, {1, 2, 4}}};
  CHECK(solve_x3c_brute(pair) == std::vector<int>{0, 1});

  X3CInstance duplicated{3, {{1, 2, 3}, {1, 2, 3}}};
  CHECK(solve_x3c_brute(duplicated) == std::vector<int>{0});

  X3CInstance no{6, {{1, 2, 3}, {1, 2, 4}}};
  CHECK_FALSE(solve_x3c_brute(no).has_value());

  X3CInstance bad{6, {{1, 1, 2}}};
  CHECK_THROWS_AS(solve_x3c_brute(bad), ValidationError);
}

TEST_CASE("2dcp brute force picks the first valid split deterministically") {
  TwoDCPInstance path;
  path.vertices = {"x", "z1", "z2"};
  path.edges = {{"x", "z1"}, {"x", "z2"}};
  path.z1 = {"z1"};
  path.z2 = {"z2"};
  auto split = solve_2dcp_brute(path);
  REQUIRE(split.has_value());
  CHECK(split->first == std::set<std::string>{"x", "z1"});
  CHECK(split->second == std::set<std::string>{"z2"});

  TwoDCPInstance edge;
  edge.vertices = {"z1", "z2"};
  edge.edges = {{"z1", "z2"}};
  edge.z1 = {"z1"};
  edge.z2 = {"z2"};
  auto two = solve_2dcp_brute(edge);
  REQUIRE(two.has_value());
  CHECK(two->first == std::set<std::string>{"z1"});
  CHECK(two->second == std::set<std::string>{"z2"});
}

TEST_CASE("2dcp: singleton parts are connected, so the star splits") {
  // anchors {z1,z2} force the centre into their side; the last leaf stands
  // alone as a valid connected part
  TwoDCPInstance star;
  star.vertices = {"x", "z1", "z2", "z3"};
  star.edges = {{"x", "z1"}, {"x", "z2"}, {"x", "z3"}};
  star.z1 = {"z1", "z2"};
  star.z2 = {"z3"};
  auto split = solve_2dcp_brute(star);
  REQUIRE(split.has_value());
  CHECK(split->first == std::set<std::string>{"x", "z1", "z2"});
  CHECK(split->second == std::set<std::string>{"z3"});

  // an actually impossible layout: both anchors of z1 need the centre, and so
  // does the z2 pair
  TwoDCPInstance blocked;
  blocked.vertices = {"x", "z1", "z2", "z3"};
  blocked.edges = {{"x", "z1"}, {"x", "z2"}, {"x", "z3"}};
  blocked.z1 = {"z1", "z2"};
  blocked.z2 = {"x", "z3"};
  CHECK_FALSE(solve_2dcp_brute(blocked).has_value());
}

TEST_CASE("oracle plans self-validate") {
  for (int budget : {0, 1, 2}) {
    auto inst = one_move_instance(budget);
    auto r = solve_exact(inst);
    if (r) {
      CHECK(is_feasible_plan(inst, r->plan));
      CHECK(is_election_winner(inst, apply_plan(inst, r->plan)));
    }
  }
}
