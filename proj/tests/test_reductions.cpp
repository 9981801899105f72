#include <doctest.h>

#include "gerrysolve/algorithms.hpp"
#include "gerrysolve/generate.hpp"
#include "gerrysolve/reductions.hpp"
#include "helpers.hpp"

using namespace gerrysolve;
using namespace gerrysolve::testing;

TEST_CASE("padding stops as soon as 5n exceeds m+1") {
  X3CInstance small{3, {{1, 2, 3}}};
  X3CInstance same = pad_x3c(small);
  CHECK(same.universe_size == 3);
  CHECK(same.sets.size() == 1);

  X3CInstance crowded{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
  X3CInstance grown = pad_x3c(crowded);
  CHECK(grown.universe_size == 6);
  CHECK(grown.sets.size() == 6);
  CHECK(grown.sets.back() == std::vector<int>{4, 5, 6});

  CHECK(solve_x3c_brute(crowded).has_value() == solve_x3c_brute(grown).has_value());
}

TEST_CASE("rgb construction: counts for the smallest source") {
  X3CInstance src{3, {{1, 2, 3}}};
  ProblemInstance inst = x3c_to_rgb(src);
  CHECK(inst.districts == 7);                  // 8n-1
  CHECK(inst.voters.size() == 25);             // 27n+m-3
  CHECK(inst.budget == Rational(3));           // 3n
  CHECK(inst.costs.entries.size() == 3);       // 3m finite pairs
  CHECK(inst.costs.default_cost.is_unmovable());
  for (const auto& [key, cost] : inst.costs.entries) CHECK(cost == Cost::finite(Rational(1)));

  ReductionReport report = verify_reduction(ReductionKind::X3cToRgb, src);
  CHECK(report.passes());
  CHECK(report.source_answer == Verdict::Yes);
  CHECK(report.target_answer == Verdict::Yes);
  REQUIRE(report.witness_forwarded.has_value());
  CHECK(report.witness_forwarded->moves.size() == 3);
}

TEST_CASE("rgb reduction maps a no-source to a no-instance") {
  X3CInstance no{6, {{1, 2, 3}, {1, 2, 4}}};
  ReductionReport report = verify_reduction(ReductionKind::X3cToRgb, no);
  CHECK(report.source_answer == Verdict::No);
  CHECK(report.target_answer == Verdict::No);
  CHECK(report.passes());
}

TEST_CASE("mrgm construction: counts for n=1, m=2") {
  X3CInstance src{3, {{1, 2, 3}, {1, 2, 3}}};
  ProblemInstance inst = x3c_to_mrgm(src, 1);
  CHECK(inst.districts == 6);  // m+1+3n(m-1)
  CHECK(inst.budget == Rational(1));
  int reservoir = 0;
  for (const Voter& v : inst.voters)
    if (v.home_district == 2) ++reservoir;  // district after the m set districts
  CHECK(reservoir == 3);                    // m-n+2

  ReductionReport report = verify_reduction(ReductionKind::X3cToMrgm, src);
  CHECK(report.passes());
  CHECK(report.source_answer == Verdict::Yes);
  CHECK(report.target_answer == Verdict::Yes);

  CHECK_THROWS_AS(x3c_to_mrgm(src, 0), ValidationError);
  X3CInstance starved{6, {{1, 2, 3}}};  // m < n
  CHECK_THROWS_AS(x3c_to_mrgm(starved), ValidationError);
}

TEST_CASE("mrgm construction honours larger lambda") {
  X3CInstance src{3, {{1, 2, 3}, {1, 2, 3}}};
  ProblemInstance inst = x3c_to_mrgm(src, 2);
  int first_district = 0;
  for (const Voter& v : inst.voters)
    if (v.home_district == 0) ++first_district;
  CHECK(first_district == 8);  // 4*lambda
  ReductionReport report = verify_reduction(ReductionKind::X3cToMrgm, src);
  CHECK(report.passes());
}

TEST_CASE("dcp construction: chains, anchor district, and witness") {
  TwoDCPInstance path;
  path.vertices = {"x", "z1", "z2"};
  path.edges = {{"x", "z1"}, {"x", "z2"}};
  path.z1 = {"z1"};
  path.z2 = {"z2"};

  ProblemInstance inst = dcp_to_mgm(path);
  CHECK(inst.districts == 2);
  CHECK(inst.voters.size() == 22 * 3 + 1);
  CHECK(inst.budget == Rational(6));  // 2n

  int d_chain = 0, e_chain = 0, second_district = 0;
  for (const Voter& v : inst.voters) {
    d_chain += v.id.starts_with("d");
    e_chain += v.id.starts_with("e");
    second_district += v.home_district == 1;
  }
  CHECK(d_chain == 31);  // 10n+|Z2|
  CHECK(e_chain == 32);  // 10n+|Z1|+1
  CHECK(second_district == 1);

  ReductionReport report = verify_reduction(ReductionKind::DcpToMgm, path);
  CHECK(report.passes());
  CHECK(report.source_answer == Verdict::Yes);
  REQUIRE(report.witness_forwarded.has_value());
  CHECK(report.witness_valid);
  CHECK(report.witness_forwarded->moves.size() <= 6);
}

TEST_CASE("tree construction: district sizes, tree shape, and 7n-move witness") {
  X3CInstance src{6, {{1, 2, 3}, {4, 5, 6}}};
  ProblemInstance inst = x3c_to_mgm_tree(src);
  CHECK(inst.budget == Rational(14));  // 7n, n=2
  // districts: m set paths + sum over elements of (m - f_u) = 2 + 6
  CHECK(inst.districts == 8);
  std::vector<int> sizes(inst.districts, 0);
  for (const Voter& v : inst.voters) ++sizes[v.home_district];
  CHECK(sizes[0] == 80);  // 40n
  CHECK(sizes[1] == 80);
  for (int d = 2; d < 8; ++d) CHECK(sizes[d] == 20);  // 10n
  CHECK(inst.graph->edges.size() == inst.voters.size() - 1);

  ReductionReport report = verify_reduction(ReductionKind::X3cToTreeMgm, src);
  CHECK(report.passes());
  REQUIRE(report.witness_forwarded.has_value());
  CHECK(report.witness_forwarded->moves.size() == 14);
  CHECK(report.witness_valid);
}

TEST_CASE("tree construction rejects degenerate sources") {
  X3CInstance degenerate{3, {{1, 2, 3}, {1, 2, 3}}};  // every element in every set
  CHECK_THROWS_WITH_AS(x3c_to_mgm_tree(degenerate), doctest::Contains("degenerate source"),
                       ValidationError);
  ReductionReport report = verify_reduction(ReductionKind::X3cToTreeMgm, degenerate);
  CHECK(report.passes());
}

TEST_CASE("lifts preserve semantics") {
  RandomInstanceSpec spec;
  spec.variant = Variant::MRGM;
  spec.voters = 5;
  spec.districts = 2;
  spec.alternatives = 2;
  spec.max_budget = 2;

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    spec.seed = seed;
    ProblemInstance inst = random_instance(spec);

    ProblemInstance complete = lift_complete_graph(inst);
    CHECK(complete.variant == Variant::MGM);
    CHECK(is_feasible_plan(complete, MovePlan{}));
    std::set<VoterId> some{complete.voters[0].id, complete.voters.back().id};
    CHECK(induced_connected(*complete.graph, some));

    ProblemInstance unit = lift_uniform_cost(inst);
    CHECK(unit.variant == Variant::RGB);
    MovePlan probe = random_plan(inst, 2, seed);
    CHECK(plan_cost(unit, probe) == plan_cost(inst, probe));

    auto truth = solve_exact(inst);
    auto lifted = solve_exact(complete);
    auto relaxed = solve_exact(unit);
    CHECK(truth.has_value() == lifted.has_value());
    CHECK(truth.has_value() == relaxed.has_value());
    if (truth) {
      CHECK(truth->cost == lifted->cost);
      CHECK(truth->cost == relaxed->cost);
    }
  }
}

TEST_CASE("complete-graph lift preserves answers for priced instances") {
  for (std::uint64_t seed = 11; seed <= 16; ++seed) {
    RandomInstanceSpec spec;
    spec.variant = Variant::RGB;
    spec.voters = 5;
    spec.districts = 2;
    spec.alternatives = 2;
    spec.seed = seed;
    spec.max_budget = 4;
    ProblemInstance rgb = random_instance(spec);
    ProblemInstance gb = lift_complete_graph(rgb);
    CHECK(gb.variant == Variant::GB);
    auto a = solve_exact(rgb);
    auto b = solve_exact(gb);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(a->cost == b->cost);
  }
}

TEST_CASE("lift kind errors") {
  auto rgb = make_instance(Variant::RGB, {"c", "y"}, {{"v1", "c", 0}, {"v2", "y", 1}}, 2,
                           Rational(1), "c");
  CHECK_THROWS_AS(lift_uniform_cost(rgb), ValidationError);
  auto mgm = lift_complete_graph(make_instance(Variant::MRGM, {"c", "y"},
                                               {{"v1", "c", 0}, {"v2", "y", 1}}, 2, Rational(1),
                                               "c"));
  CHECK_THROWS_AS(lift_complete_graph(mgm), ValidationError);
}
