#include "gerrysolve/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gerrysolve/algorithms.hpp"
#include "gerrysolve/generate.hpp"
#include "gerrysolve/io.hpp"
#include "gerrysolve/reductions.hpp"

namespace gerrysolve {

std::string SuiteReport::table() const {
  std::size_t width = 8;
  for (const CheckLine& line : lines) width = std::max(width, line.name.size());
  std::ostringstream out;
  for (const CheckLine& line : lines) {
    out << line.name << std::string(width - line.name.size() + 2, ' ')
        << (line.pass ? "pass" : "FAIL");
    if (!line.detail.empty()) out << "  (" << line.detail << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

std::string count_detail(int ok, int total) {
  return std::to_string(ok) + "/" + std::to_string(total) + " instances";
}

bool round_trip_ok(const ProblemInstance& inst) {
  std::string text = serialize_instance(inst);
  ProblemInstance back = parse_instance(text);
  return serialize_instance(back) == text;
}

ProblemInstance with_budget(const ProblemInstance& inst, int budget) {
  ProblemInstance probe = inst;
  probe.budget = Rational(budget);
  return probe;
}

RandomInstanceSpec spec_for(Variant variant, std::uint64_t seed, int index, SplitMix64& shape) {
  RandomInstanceSpec spec;
  spec.variant = variant;
  spec.voters = shape.range(3, 8);
  spec.districts = shape.range(1, std::min(3, spec.voters));
  spec.alternatives = shape.range(2, 3);
  spec.max_budget = 3;
  spec.seed = seed * 1000003ULL + static_cast<std::uint64_t>(index);
  return spec;
}

}  // namespace

SuiteReport run_solver_differential(std::uint64_t seed, int mrgm_count, int mgm_count,
                                    std::uint64_t guard) {
  SuiteReport report;
  SplitMix64 shape(seed);
  int bounded_ok = 0, fixed_ok = 0, dp_ok = 0, rt_ok = 0;
  int total = mrgm_count + mgm_count;

  for (int i = 0; i < total; ++i) {
    Variant variant = i < mrgm_count ? Variant::MRGM : Variant::MGM;
    ProblemInstance inst = random_instance(spec_for(variant, seed, i, shape));
    auto truth = solve_exact(inst, guard);
    int budget = static_cast<int>(inst.budget.integer_value());

    auto bounded = solve_bounded_moves(inst, budget, guard);
    bool agree = bounded.has_value() == truth.has_value() &&
                 (!truth || bounded->cost == truth->cost);
    bounded_ok += agree;

    if (variant == Variant::MRGM) {
      auto fixed = solve_mrgm_fixed_districts(inst, guard);
      fixed_ok += fixed.has_value() == truth.has_value() && (!truth || fixed->cost == truth->cost);
      dp_ok += solve_mrgm_dp(inst, guard) == truth.has_value();
    }
    rt_ok += round_trip_ok(inst);
  }

  report.add("bounded-moves matches oracle (answer and cost)", bounded_ok == total,
             count_detail(bounded_ok, total));
  report.add("fixed-districts matches oracle (answer and cost)", fixed_ok == mrgm_count,
             count_detail(fixed_ok, mrgm_count));
  report.add("dynamic program matches oracle", dp_ok == mrgm_count,
             count_detail(dp_ok, mrgm_count));
  report.add("instance round-trip (solver corpus)", rt_ok == total, count_detail(rt_ok, total));
  return report;
}

SuiteReport run_tree_differential(std::uint64_t seed, int count, std::uint64_t guard) {
  SuiteReport report;
  SplitMix64 shape(seed);
  int cuts_ok = 0, rt_ok = 0;
  for (int i = 0; i < count; ++i) {
    RandomInstanceSpec spec;
    spec.variant = i % 2 == 0 ? Variant::GB : Variant::MGM;
    spec.voters = shape.range(4, 10);
    spec.districts = shape.range(2, 3);
    spec.alternatives = shape.range(2, 3);
    spec.max_budget = spec.variant == Variant::MGM ? 3 : spec.voters;
    spec.pure_tree = true;
    spec.seed = seed * 2000003ULL + static_cast<std::uint64_t>(i);
    ProblemInstance inst = random_instance(spec);

    auto truth = solve_exact(inst, guard);
    auto cuts = solve_tree_cuts(inst, guard);
    cuts_ok += cuts.has_value() == truth.has_value() && (!truth || cuts->cost == truth->cost);
    rt_ok += round_trip_ok(inst);
  }
  report.add("tree-cuts matches oracle (answer and cost)", cuts_ok == count,
             count_detail(cuts_ok, count));
  report.add("instance round-trip (tree corpus)", rt_ok == count, count_detail(rt_ok, count));
  return report;
}

SuiteReport run_lift_checks(std::uint64_t seed, int count, std::uint64_t guard) {
  SuiteReport report;
  SplitMix64 shape(seed);
  int complete_ok = 0, unit_ok = 0, rt_ok = 0;
  for (int i = 0; i < count; ++i) {
    RandomInstanceSpec spec;
    spec.variant = Variant::MRGM;
    spec.voters = shape.range(3, 7);
    spec.districts = shape.range(1, std::min(3, spec.voters));
    spec.alternatives = shape.range(2, 3);
    spec.max_budget = 3;
    spec.seed = seed * 3000017ULL + static_cast<std::uint64_t>(i);
    ProblemInstance inst = random_instance(spec);
    complete_ok += verify_reduction(ReductionKind::LiftCompleteGraph, inst, guard).passes();
    unit_ok += verify_reduction(ReductionKind::LiftUniformCost, inst, guard).passes();
    rt_ok += round_trip_ok(lift_complete_graph(inst)) && round_trip_ok(lift_uniform_cost(inst));
  }
  report.add("complete-graph lift preserves answer and cost", complete_ok == count,
             count_detail(complete_ok, count));
  report.add("unit-cost lift preserves answer and cost", unit_ok == count,
             count_detail(unit_ok, count));
  report.add("instance round-trip (lifted corpus)", rt_ok == count, count_detail(rt_ok, count));
  return report;
}

SuiteReport run_invariant_checks(std::uint64_t seed, std::uint64_t guard) {
  SuiteReport report;
  SplitMix64 shape(seed);

  const int corpus = 60;
  int conserve_ok = 0, inverse_ok = 0, unit_cost_ok = 0, empty_ok = 0;
  int mono_ok = 0, mono_total = 0, supply_ok = 0, supply_total = 0;
  int thread_ok = 0, serial_ok = 0;

  for (int i = 0; i < corpus; ++i) {
    Variant variant = i % 3 == 2 ? Variant::MGM : Variant::MRGM;
    ProblemInstance inst = random_instance(spec_for(variant, seed, i, shape));
    MovePlan plan = random_plan(inst, 3, seed + 77 * i + 1);

    // conservation: the election-wide ranking multiset never changes
    Districting after = apply_plan(inst, plan);
    std::multiset<std::vector<AltId>> before_rankings, after_rankings;
    for (const Voter& v : inst.voters) {
      before_rankings.insert(v.ranking);
      after_rankings.insert(v.ranking);  // moves relabel districts, not ballots
    }
    conserve_ok += before_rankings == after_rankings &&
                   after.assignment.size() == inst.voters.size();

    // applying the inverse moves restores the initial districting
    MovePlan inverse;
    for (const Voter& v : inst.voters)
      if (after.assignment.at(v.id) != v.home_district)
        inverse.moves.push_back({v.id, v.home_district});
    Districting restored = after;
    for (const Move& mv : inverse.moves) restored.assignment[mv.voter] = mv.district;
    inverse_ok += restored.assignment == initial_districting(inst).assignment;

    if (variant_unit_cost(inst.variant)) {
      Cost c = plan_cost(inst, plan);
      unit_cost_ok += c.is_finite() &&
                      c.value() == Rational(static_cast<int>(plan.moves.size()));
    } else {
      ++unit_cost_ok;
    }
    empty_ok += is_feasible_plan(inst, MovePlan{});

    // budget monotonicity of every applicable solver
    if (i < 20) {
      for (int b = 0; b + 1 <= 3; ++b) {
        ProblemInstance lo = with_budget(inst, b), hi = with_budget(inst, b + 1);
        ++mono_total;
        bool ok = true;
        if (solve_exact(lo, guard).has_value() && !solve_exact(hi, guard).has_value()) ok = false;
        if (solve_bounded_moves(lo, b, guard).has_value() &&
            !solve_bounded_moves(hi, b + 1, guard).has_value())
          ok = false;
        if (inst.variant == Variant::MRGM) {
          if (solve_mrgm_fixed_districts(lo, guard).has_value() &&
              !solve_mrgm_fixed_districts(hi, guard).has_value())
            ok = false;
          if (solve_mrgm_dp(lo, guard) && !solve_mrgm_dp(hi, guard)) ok = false;
        }
        mono_ok += ok;
      }
    }

    // table conservation: a winning trajectory's net changes telescope to zero
    if (inst.variant == Variant::MRGM) {
      DpTrace trace = solve_mrgm_dp_trace(inst, guard);
      if (trace.winnable) {
        ++supply_total;
        std::vector<int> sum(inst.alternatives.size(), 0);
        for (const auto& mu : trace.district_net_change)
          for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += mu[a];
        supply_ok += std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
      }
    }

    // determinism across thread counts and across runs
    if (i < 10) {
      auto one = solve_exact(inst, guard, 1);
      auto four = solve_exact(inst, guard, 4);
      thread_ok += one.has_value() == four.has_value() &&
                   (!one || (one->cost == four->cost && one->plan == four->plan));
      serial_ok += serialize_instance(inst) == serialize_instance(inst) && round_trip_ok(inst);
    }
  }

  report.add("conservation under apply_plan", conserve_ok == corpus, count_detail(conserve_ok, corpus));
  report.add("inverse moves restore the districting", inverse_ok == corpus,
             count_detail(inverse_ok, corpus));
  report.add("unit-cost plans cost exactly their size", unit_cost_ok == corpus,
             count_detail(unit_cost_ok, corpus));
  report.add("empty plan always feasible", empty_ok == corpus, count_detail(empty_ok, corpus));
  report.add("budget monotonicity of every solver", mono_ok == mono_total,
             count_detail(mono_ok, mono_total));
  report.add("dp winning trajectories conserve votes", supply_ok == supply_total,
             count_detail(supply_ok, supply_total));
  report.add("oracle identical at 1 and 4 threads", thread_ok == 10, count_detail(thread_ok, 10));
  report.add("serialization identical across runs", serial_ok == 10, count_detail(serial_ok, 10));
  return report;
}

namespace {

// All 3-element subsets of {1..3n}, ascending.
std::vector<std::vector<int>> all_triples(int universe) {
  std::vector<std::vector<int>> triples;
  for (int a = 1; a <= universe; ++a)
    for (int b = a + 1; b <= universe; ++b)
      for (int c = b + 1; c <= universe; ++c) triples.push_back({a, b, c});
  return triples;
}

// Every X3C source with the given universe, as multisets of m triples
// (non-decreasing index sequences).
void enumerate_collections(int universe, int m, const std::function<void(const X3CInstance&)>& fn) {
  std::vector<std::vector<int>> triples = all_triples(universe);
  int t = static_cast<int>(triples.size());
  std::vector<int> pick(m, 0);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == m) {
      X3CInstance x3c;
      x3c.universe_size = universe;
      for (int idx : pick) x3c.sets.push_back(triples[idx]);
      fn(x3c);
      return;
    }
    for (int idx = from; idx < t; ++idx) {
      pick[pos] = idx;
      self(self, pos + 1, idx);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

SuiteReport run_reduction_equivalence(int limit, std::uint64_t guard) {
  SuiteReport report;
  int rgb_total = 0, rgb_ok = 0, rgb_rt = 0;
  int mrgm_total = 0, mrgm_ok = 0, mrgm_rt = 0;
  int tree_total = 0, tree_ok = 0;

  for (int universe : {3, 6}) {
    for (int m = 0; m <= 4; ++m) {
      enumerate_collections(universe, m, [&](const X3CInstance& src) {
        if (limit > 0 && rgb_total >= limit) return;
        ++rgb_total;
        ReductionReport r = verify_reduction(ReductionKind::X3cToRgb, src, guard);
        rgb_ok += r.passes() && r.target_answer != Verdict::Unverified;
        if (rgb_total <= 200) rgb_rt += round_trip_ok(x3c_to_rgb(src)) ? 1 : 0;

        // the tree construction shares the source family
        if (limit > 0 && tree_total >= limit) return;
        ++tree_total;
        tree_ok += verify_reduction(ReductionKind::X3cToTreeMgm, src, guard).passes();
      });
      if (m >= 1 && m <= 3 && m >= universe / 3) {
        enumerate_collections(universe, m, [&](const X3CInstance& src) {
          if (limit > 0 && mrgm_total >= limit) return;
          ++mrgm_total;
          ReductionReport r = verify_reduction(ReductionKind::X3cToMrgm, src, guard);
          mrgm_ok += r.passes() && r.target_answer != Verdict::Unverified;
          if (mrgm_total <= 100) mrgm_rt += round_trip_ok(x3c_to_mrgm(src)) ? 1 : 0;
        });
      }
    }
  }

  report.add("rgb reduction: answers equal on all small sources", rgb_ok == rgb_total,
             count_detail(rgb_ok, rgb_total));
  report.add("mrgm reduction: answers equal on all small sources", mrgm_ok == mrgm_total,
             count_detail(mrgm_ok, mrgm_total));
  report.add("tree reduction: structure and witnesses on all small sources",
             tree_ok == tree_total, count_detail(tree_ok, tree_total));
  report.add("instance round-trip (rgb targets)", rgb_rt == std::min(rgb_total, 200),
             count_detail(rgb_rt, std::min(rgb_total, 200)));
  report.add("instance round-trip (mrgm targets)", mrgm_rt == std::min(mrgm_total, 100),
             count_detail(mrgm_rt, std::min(mrgm_total, 100)));
  return report;
}

SuiteReport run_witness_forwarding(std::uint64_t seed, int dcp_samples, std::uint64_t guard) {
  SuiteReport report;
  int dcp_total = 0, dcp_ok = 0, dcp_yes = 0, dcp_rt = 0;

  auto consider = [&](const TwoDCPInstance& dcp) {
    ++dcp_total;
    ReductionReport r = verify_reduction(ReductionKind::DcpToMgm, dcp, guard);
    dcp_ok += r.passes();
    if (r.source_answer == Verdict::Yes) ++dcp_yes;
    if (dcp_total <= 100) dcp_rt += round_trip_ok(dcp_to_mgm(dcp)) ? 1 : 0;
  };

  // exhaustive on up to 4 labelled vertices
  for (int q = 2; q <= 4; ++q) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b) pairs.push_back({a, b});
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      TwoDCPInstance dcp;
      for (int v = 0; v < q; ++v) dcp.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1)
          dcp.edges.insert({dcp.vertices[pairs[e].first], dcp.vertices[pairs[e].second]});
      for (unsigned anchors = 0; anchors < sat_pow(3, static_cast<unsigned>(q)); ++anchors) {
        TwoDCPInstance probe = dcp;
        unsigned rest = anchors;
        for (int v = 0; v < q; ++v) {
          unsigned role = rest % 3;
          rest /= 3;
          if (role == 1) probe.z1.insert(probe.vertices[v]);
          if (role == 2) probe.z2.insert(probe.vertices[v]);
        }
        if (probe.z1.empty() || probe.z2.empty()) continue;
        try {
          validate_2dcp(probe);
        } catch (const ValidationError&) {
          continue;  // disconnected graph
        }
        consider(probe);
      }
    }
  }
  int exhaustive = dcp_total;

  // seeded samples on 5 and 6 vertices
  for (int i = 0; i < dcp_samples; ++i)
    consider(random_2dcp(5 + i % 2, seed * 5000011ULL + static_cast<std::uint64_t>(i)));

  report.add("dcp reduction: structure and witnesses", dcp_ok == dcp_total,
             count_detail(dcp_ok, dcp_total));
  report.add("dcp corpus covers yes-sources", dcp_yes > 0,
             std::to_string(dcp_yes) + " yes-sources of " + std::to_string(dcp_total) + " (" +
                 std::to_string(exhaustive) + " exhaustive <=4 vertices, rest sampled); " +
                 "no-direction not verified at this scale");
  report.add("instance round-trip (dcp targets)", dcp_rt == std::min(dcp_total, 100),
             count_detail(dcp_rt, std::min(dcp_total, 100)));
  return report;
}

}  // namespace gerrysolve
