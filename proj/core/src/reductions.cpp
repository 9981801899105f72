#include "gerrysolve/reductions.hpp"

#include <algorithm>
#include <map>

#include "gerrysolve/algorithms.hpp"

namespace gerrysolve {

std::string reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::X3cToRgb: return "x3c-rgb";
    case ReductionKind::X3cToMrgm: return "x3c-mrgm";
    case ReductionKind::DcpToMgm: return "dcp-mgm";
    case ReductionKind::X3cToTreeMgm: return "x3c-tree-mgm";
    case ReductionKind::LiftCompleteGraph: return "lift-complete";
    case ReductionKind::LiftUniformCost: return "lift-unit-cost";
  }
  return "?";
}

std::optional<ReductionKind> reduction_from_name(const std::string& name) {
  for (ReductionKind k :
       {ReductionKind::X3cToRgb, ReductionKind::X3cToMrgm, ReductionKind::DcpToMgm,
        ReductionKind::X3cToTreeMgm, ReductionKind::LiftCompleteGraph,
        ReductionKind::LiftUniformCost})
    if (reduction_name(k) == name) return k;
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unverified: return "unverified";
  }
  return "?";
}

namespace {

std::string padded(const std::string& prefix, int value, int width) {
  std::string digits = std::to_string(value);
  while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
  return prefix + digits;
}

std::vector<AltId> ranking_with_top(const std::vector<AltId>& alternatives, const AltId& top) {
  std::vector<AltId> r{top};
  for (const AltId& a : alternatives)
    if (a != top) r.push_back(a);
  return r;
}

void add_voter(ProblemInstance& inst, std::string id, const AltId& top, int district) {
  inst.voters.push_back({std::move(id), ranking_with_top(inst.alternatives, top), district});
}

void finish(ProblemInstance& inst) {
  std::sort(inst.voters.begin(), inst.voters.end(),
            [](const Voter& a, const Voter& b) { return a.id < b.id; });
  if (inst.graph)
    for (const Voter& v : inst.voters) inst.graph->vertices.insert(v.id);
  validate_instance(inst);
}

}  // namespace

X3CInstance pad_x3c(X3CInstance x3c) {
  validate_x3c(x3c);
  while (5 * (x3c.universe_size / 3) <= static_cast<int>(x3c.sets.size()) + 1) {
    int base = x3c.universe_size;
    x3c.universe_size += 3;
    x3c.sets.push_back({base + 1, base + 2, base + 3});
  }
  return x3c;
}

// ---------------------------------------------------------------------------
// X3C -> RGB
// ---------------------------------------------------------------------------

namespace {

std::string rgb_element_mover(int u) { return padded("u", u, 4) + "_c1"; }
int rgb_set_district(const X3CInstance& x3c, int set_index) {
  return x3c.universe_size + set_index;
}

}  // namespace

ProblemInstance x3c_to_rgb(const X3CInstance& source) {
  X3CInstance x3c = pad_x3c(source);
  int n = x3c.universe_size / 3;
  int m = static_cast<int>(x3c.sets.size());

  ProblemInstance inst;
  inst.variant = Variant::RGB;
  inst.alternatives = {"c", "y"};
  inst.target = "c";
  inst.budget = Rational(3 * n);
  inst.districts = 8 * n - 1;
  inst.costs.default_cost = Cost::unmovable();

  for (int u = 1; u <= 3 * n; ++u) {
    int d = u - 1;
    for (int t = 1; t <= 3; ++t) add_voter(inst, padded("u", u, 4) + "_c" + std::to_string(t), "c", d);
    add_voter(inst, padded("u", u, 4) + "_y1", "y", d);
  }
  for (int j = 0; j < m; ++j) {
    int d = rgb_set_district(x3c, j);
    add_voter(inst, padded("s", j + 1, 4) + "_c1", "c", d);
    for (int t = 1; t <= 3; ++t) add_voter(inst, padded("s", j + 1, 4) + "_y" + std::to_string(t), "y", d);
    for (int u : x3c.sets[j])
      inst.costs.entries[{rgb_element_mover(u), d}] = Cost::finite(Rational(1));
  }
  for (int i = 0; i < 5 * n - m - 1; ++i) {
    int d = 3 * n + m + i;
    add_voter(inst, padded("f", i + 1, 4) + "_c1", "c", d);
    add_voter(inst, padded("f", i + 1, 4) + "_y1", "y", d);
    add_voter(inst, padded("f", i + 1, 4) + "_y2", "y", d);
  }
  finish(inst);
  return inst;
}

MovePlan rgb_witness(const X3CInstance& padded_src, const std::vector<int>& cover) {
  MovePlan plan;
  for (int j : cover)
    for (int u : padded_src.sets[j])
      plan.moves.push_back({rgb_element_mover(u), rgb_set_district(padded_src, j)});
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

// ---------------------------------------------------------------------------
// X3C -> MRGM
// ---------------------------------------------------------------------------

ProblemInstance x3c_to_mrgm(const X3CInstance& x3c, int lambda) {
  validate_x3c(x3c);
  if (lambda < 1) throw ValidationError("lambda must be positive");
  int n = x3c.universe_size / 3;
  int m = static_cast<int>(x3c.sets.size());
  if (m < n) throw ValidationError("source has fewer sets than an exact cover needs (m < n)");

  ProblemInstance inst;
  inst.variant = Variant::MRGM;
  for (int u = 1; u <= 3 * n; ++u) inst.alternatives.push_back(padded("a", u, 4));
  inst.alternatives.push_back("c");
  inst.target = "c";
  inst.budget = Rational(m - n);
  inst.districts = m + 1 + 3 * n * (m - 1);

  for (int j = 0; j < m; ++j) {
    for (int u : x3c.sets[j])
      for (int t = 1; t <= lambda; ++t)
        add_voter(inst, padded("s", j + 1, 4) + "_" + padded("a", u, 4) + "_" + padded("", t, 2),
                  padded("a", u, 4), j);
    for (int t = 1; t <= lambda; ++t)
      add_voter(inst, padded("s", j + 1, 4) + "_c_" + padded("", t, 2), "c", j);
  }
  for (int t = 1; t <= m - n + 2; ++t) add_voter(inst, padded("pc_", t, 4), "c", m);
  int d = m + 1;
  for (int u = 1; u <= 3 * n; ++u)
    for (int i = 1; i <= m - 1; ++i, ++d)
      for (int t = 1; t <= m - n + 2; ++t)
        add_voter(inst, padded("q", u, 4) + "_" + padded("", i, 2) + "_" + padded("", t, 2),
                  padded("a", u, 4), d);
  finish(inst);
  return inst;
}

MovePlan mrgm_witness(const X3CInstance& x3c, const std::vector<int>& cover) {
  int m = static_cast<int>(x3c.sets.size());
  std::vector<char> in_cover(m, 0);
  for (int j : cover) in_cover[j] = 1;
  MovePlan plan;
  int t = 1;
  for (int j = 0; j < m; ++j)
    if (!in_cover[j]) plan.moves.push_back({padded("pc_", t++, 4), j});
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

// ---------------------------------------------------------------------------
// 2DCP -> MGM
// ---------------------------------------------------------------------------

ProblemInstance dcp_to_mgm(const TwoDCPInstance& dcp) {
  validate_2dcp(dcp);
  int n = static_cast<int>(dcp.vertices.size());
  const std::string z1 = *dcp.z1.begin();
  const std::string z2 = *dcp.z2.begin();
  int d_len = 10 * n + static_cast<int>(dcp.z2.size());
  int e_len = 10 * n + static_cast<int>(dcp.z1.size()) + 1;

  ProblemInstance inst;
  inst.variant = Variant::MGM;
  inst.alternatives = {"c", "y"};
  inst.target = "c";
  inst.budget = Rational(2 * n);
  inst.districts = 2;
  inst.graph.emplace();

  auto mirror = [](const std::string& name) { return "v_" + name; };
  for (const std::string& u : dcp.vertices) {
    bool in_z1 = dcp.z1.count(u) > 0, in_z2 = dcp.z2.count(u) > 0;
    add_voter(inst, mirror(u), in_z2 ? "c" : "y", 0);
    if (!in_z1 && !in_z2) {
      add_voter(inst, "w_" + u, "c", 0);
      inst.graph->add_edge(mirror(u), "w_" + u);
    }
  }
  for (const auto& [a, b] : dcp.edges) inst.graph->add_edge(mirror(a), mirror(b));

  // chain attached at the mirrored z2 anchor; its first |Z2| voters form the
  // second district. The far end is tied to the z1 side so that district 0
  // stays connected both initially and after the forward witness moves.
  for (int i = 1; i <= d_len; ++i) {
    bool h2 = i <= static_cast<int>(dcp.z2.size());
    add_voter(inst, padded("d", i, 4), i <= 5 * n ? "y" : "c", h2 ? 1 : 0);
    if (i > 1) inst.graph->add_edge(padded("d", i - 1, 4), padded("d", i, 4));
  }
  inst.graph->add_edge(mirror(z2), padded("d", 1, 4));
  inst.graph->add_edge(mirror(z1), padded("d", d_len, 4));

  for (int i = 1; i <= e_len; ++i) {
    add_voter(inst, padded("e", i, 4), i <= 5 * n ? "y" : "c", 0);
    if (i > 1) inst.graph->add_edge(padded("e", i - 1, 4), padded("e", i, 4));
  }
  inst.graph->add_edge(mirror(z1), padded("e", 1, 4));

  finish(inst);
  return inst;
}

MovePlan dcp_witness(const TwoDCPInstance& dcp, const std::set<std::string>&,
                     const std::set<std::string>& v2) {
  MovePlan plan;
  for (const std::string& u : v2) {
    plan.moves.push_back({"v_" + u, 1});
    if (!dcp.z1.count(u) && !dcp.z2.count(u)) plan.moves.push_back({"w_" + u, 1});
  }
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

// ---------------------------------------------------------------------------
// X3C -> MGM on a tree
// ---------------------------------------------------------------------------

namespace {

std::vector<int> set_frequencies(const X3CInstance& x3c) {
  std::vector<int> f(x3c.universe_size + 1, 0);
  for (const auto& s : x3c.sets)
    for (int u : s) ++f[u];
  return f;
}

std::string tree_hub_element(const X3CInstance& x3c) {
  int m = static_cast<int>(x3c.sets.size());
  std::vector<int> f = set_frequencies(x3c);
  for (int u = 1; u <= x3c.universe_size; ++u)
    if (m - f[u] >= 1) return padded("y", u, 4) + "_01_" + padded("", 1, 5);
  throw ValidationError("degenerate source: every element appears in every set");
}

}  // namespace

ProblemInstance x3c_to_mgm_tree(const X3CInstance& x3c) {
  validate_x3c(x3c);
  int n = x3c.universe_size / 3;
  int m = static_cast<int>(x3c.sets.size());
  std::vector<int> f = set_frequencies(x3c);

  int hub_u = -1;
  for (int u = 1; u <= 3 * n && hub_u == -1; ++u)
    if (m - f[u] >= 1) hub_u = u;
  if (hub_u == -1)
    throw ValidationError("degenerate source: every element appears in every set");

  ProblemInstance inst;
  inst.variant = Variant::MGM;
  for (int u = 1; u <= 3 * n; ++u) inst.alternatives.push_back(padded("a", u, 4));
  inst.alternatives.push_back("c");
  inst.target = "c";
  inst.budget = Rational(7 * n);
  inst.graph.emplace();

  // district ordering: the m set paths, then the hub block first among the
  // per-element blocks
  std::vector<std::pair<int, int>> y_blocks;  // (element, slot)
  y_blocks.push_back({hub_u, 1});
  for (int u = 1; u <= 3 * n; ++u)
    for (int i = 1; i <= m - f[u]; ++i)
      if (!(u == hub_u && i == 1)) y_blocks.push_back({u, i});
  inst.districts = m + static_cast<int>(y_blocks.size());

  auto x_id = [&](int j, int pos) { return padded("x", j + 1, 4) + "_" + padded("", pos, 5); };
  auto y_id = [&](int u, int i, int t) {
    return padded("y", u, 4) + "_" + padded("", i, 2) + "_" + padded("", t, 5);
  };

  for (int j = 0; j < m; ++j) {
    const auto& s = x3c.sets[j];  // sorted: x < y < z
    std::vector<AltId> tops;
    tops.push_back("c");
    for (int u : s) {
      tops.push_back(padded("a", u, 4));
      tops.push_back(padded("a", u, 4));
    }
    for (int t = 0; t < 10 * n - 1; ++t) tops.push_back("c");
    for (int u : s)
      for (int t = 0; t < 10 * n - 2; ++t) tops.push_back(padded("a", u, 4));
    for (int pos = 1; pos <= 40 * n; ++pos) {
      add_voter(inst, x_id(j, pos), tops[pos - 1], j);
      if (pos > 1) inst.graph->add_edge(x_id(j, pos - 1), x_id(j, pos));
    }
  }

  std::string prev_tail;
  for (std::size_t b = 0; b < y_blocks.size(); ++b) {
    auto [u, i] = y_blocks[b];
    int district = m + static_cast<int>(b);
    for (int t = 1; t <= 10 * n; ++t) {
      add_voter(inst, y_id(u, i, t), padded("a", u, 4), district);
      if (t > 1) inst.graph->add_edge(y_id(u, i, t - 1), y_id(u, i, t));
    }
    if (!prev_tail.empty()) inst.graph->add_edge(prev_tail, y_id(u, i, 1));
    prev_tail = y_id(u, i, 10 * n);
  }

  // every set path hangs off the hub end of the block path
  const std::string hub = y_id(hub_u, 1, 1);
  for (int j = 0; j < m; ++j) inst.graph->add_edge(x_id(j, 1), hub);

  finish(inst);
  return inst;
}

MovePlan tree_witness(const X3CInstance& x3c, const std::vector<int>& cover) {
  tree_hub_element(x3c);  // rejects degenerate sources
  int m = static_cast<int>(x3c.sets.size());
  MovePlan plan;
  for (int j : cover)
    for (int pos = 1; pos <= 7; ++pos)
      plan.moves.push_back({padded("x", j + 1, 4) + "_" + padded("", pos, 5), m});
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

ProblemInstance lift_complete_graph(const ProblemInstance& inst) {
  if (inst.variant != Variant::RGB && inst.variant != Variant::MRGM)
    throw ValidationError("complete-graph lift applies to RGB or MRGM");
  ProblemInstance out = inst;
  out.variant = inst.variant == Variant::RGB ? Variant::GB : Variant::MGM;
  out.graph.emplace();
  for (const Voter& v : out.voters) out.graph->vertices.insert(v.id);
  for (std::size_t i = 0; i < out.voters.size(); ++i)
    for (std::size_t j = i + 1; j < out.voters.size(); ++j)
      out.graph->add_edge(out.voters[i].id, out.voters[j].id);
  validate_instance(out);
  return out;
}

ProblemInstance lift_uniform_cost(const ProblemInstance& inst) {
  if (inst.variant != Variant::MRGM && inst.variant != Variant::MGM)
    throw ValidationError("unit-cost lift applies to MRGM or MGM");
  ProblemInstance out = inst;
  out.variant = inst.variant == Variant::MRGM ? Variant::RGB : Variant::GB;
  out.costs = CostMap{};  // all-ones
  validate_instance(out);
  return out;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

bool ReductionReport::passes() const {
  if (source_answer != Verdict::Unverified && target_answer != Verdict::Unverified &&
      source_answer != target_answer)
    return false;
  if (witness_forwarded && !witness_valid) return false;
  for (const auto& [name, ok] : structural_checks)
    if (!ok) return false;
  return true;
}

namespace {

Verdict to_verdict(bool yes) { return yes ? Verdict::Yes : Verdict::No; }

bool witness_ok(const ProblemInstance& inst, const MovePlan& plan) {
  return is_feasible_plan(inst, plan) && is_election_winner(inst, apply_plan(inst, plan));
}

// target decision for unit-cost instances: oracle when it fits, otherwise the
// bounded-move enumeration at the full budget (exact for MGM/MRGM)
std::optional<bool> decide_unit_cost(const ProblemInstance& inst, std::uint64_t guard) {
  try {
    return solve_exact(inst, guard).has_value();
  } catch (const GuardExceeded&) {
  }
  try {
    int b = static_cast<int>(inst.budget.integer_value());
    return solve_bounded_moves(inst, b, guard).has_value();
  } catch (const GuardExceeded&) {
  }
  return std::nullopt;
}

void check(ReductionReport& report, const std::string& name, bool ok) {
  report.structural_checks.push_back({name, ok});
}

}  // namespace

ReductionReport verify_reduction(ReductionKind kind, const X3CInstance& source,
                                 std::uint64_t guard) {
  ReductionReport report;
  report.kind = kind;
  auto src_answer = solve_x3c_brute(source, guard);
  report.source_answer = to_verdict(src_answer.has_value());

  if (kind == ReductionKind::X3cToRgb) {
    X3CInstance pad = pad_x3c(source);
    auto pad_answer = solve_x3c_brute(pad, guard);
    check(report, "padding preserves answer", pad_answer.has_value() == src_answer.has_value());
    ProblemInstance target = x3c_to_rgb(pad);
    int n = pad.universe_size / 3, m = static_cast<int>(pad.sets.size());
    check(report, "district count is 8n-1", target.districts == 8 * n - 1);
    check(report, "voter count is 27n+m-3",
          static_cast<int>(target.voters.size()) == 27 * n + m - 3);
    check(report, "budget is 3n", target.budget == Rational(3 * n));
    check(report, "finite cost pairs are 3m",
          static_cast<int>(target.costs.entries.size()) == 3 * m);
    check(report, "target loses initially",
          !is_election_winner(target, initial_districting(target)));
    try {
      int b = static_cast<int>(target.budget.integer_value());
      report.target_answer =
          to_verdict(solve_bounded_moves(target, b, guard).has_value());
    } catch (const GuardExceeded&) {
    }
    if (pad_answer) {
      report.witness_forwarded = rgb_witness(pad, *pad_answer);
      report.witness_valid = witness_ok(target, *report.witness_forwarded);
    }
    return report;
  }

  if (kind == ReductionKind::X3cToMrgm) {
    int n = source.universe_size / 3, m = static_cast<int>(source.sets.size());
    if (m < n) {
      bool rejected = false;
      try {
        x3c_to_mrgm(source);
      } catch (const ValidationError&) {
        rejected = true;
      }
      check(report, "constructor rejects m < n", rejected);
      return report;
    }
    ProblemInstance target = x3c_to_mrgm(source);
    check(report, "district count is m+1+3n(m-1)",
          target.districts == m + 1 + 3 * n * (m - 1));
    check(report, "budget is m-n", target.budget == Rational(m - n));
    int pc_size = 0;
    for (const Voter& v : target.voters)
      if (v.home_district == m) ++pc_size;
    check(report, "favourite reservoir holds m-n+2 voters", pc_size == m - n + 2);
    if (auto decided = decide_unit_cost(target, guard))
      report.target_answer = to_verdict(*decided);
    if (src_answer) {
      report.witness_forwarded = mrgm_witness(source, *src_answer);
      report.witness_valid = witness_ok(target, *report.witness_forwarded);
    }
    return report;
  }

  if (kind == ReductionKind::X3cToTreeMgm) {
    int n = source.universe_size / 3, m = static_cast<int>(source.sets.size());
    ProblemInstance target;
    try {
      target = x3c_to_mgm_tree(source);
    } catch (const ValidationError&) {
      check(report, "degenerate source rejected", true);
      return report;
    }
    std::vector<int> f = set_frequencies(source);
    int y_total = 0;
    for (int u = 1; u <= 3 * n; ++u) y_total += m - f[u];
    check(report, "district count is m plus uncovered slots",
          target.districts == m + y_total);
    check(report, "budget is 7n", target.budget == Rational(7 * n));
    bool sizes_ok = true;
    std::vector<int> sizes(target.districts, 0);
    for (const Voter& v : target.voters) ++sizes[v.home_district];
    for (int j = 0; j < m; ++j) sizes_ok = sizes_ok && sizes[j] == 40 * n;
    for (int d = m; d < target.districts; ++d) sizes_ok = sizes_ok && sizes[d] == 10 * n;
    check(report, "set districts hold 40n voters, element districts 10n", sizes_ok);
    check(report, "voter graph is a tree",
          target.graph->edges.size() == target.voters.size() - 1);
    if (src_answer) {
      report.witness_forwarded = tree_witness(source, *src_answer);
      report.witness_valid = witness_ok(target, *report.witness_forwarded);
      check(report, "witness moves exactly 7n voters",
            static_cast<int>(report.witness_forwarded->moves.size()) == 7 * n);
    }
    return report;
  }

  throw ValidationError("reduction " + reduction_name(kind) + " does not take an X3C source");
}

ReductionReport verify_reduction(ReductionKind kind, const TwoDCPInstance& source,
                                 std::uint64_t guard) {
  if (kind != ReductionKind::DcpToMgm)
    throw ValidationError("reduction " + reduction_name(kind) + " does not take a 2DCP source");
  ReductionReport report;
  report.kind = kind;
  auto src_answer = solve_2dcp_brute(source, guard);
  report.source_answer = to_verdict(src_answer.has_value());

  ProblemInstance target = dcp_to_mgm(source);
  int n = static_cast<int>(source.vertices.size());
  int z1 = static_cast<int>(source.z1.size()), z2 = static_cast<int>(source.z2.size());
  check(report, "voter count is 22n+1", static_cast<int>(target.voters.size()) == 22 * n + 1);
  check(report, "budget is 2n", target.budget == Rational(2 * n));
  int d_count = 0, e_count = 0, h2_size = 0;
  bool h2_is_chain_head = true;
  for (const Voter& v : target.voters) {
    if (v.id.starts_with("d")) ++d_count;
    if (v.id.starts_with("e")) ++e_count;
    if (v.home_district == 1) {
      ++h2_size;
      if (!v.id.starts_with("d")) h2_is_chain_head = false;
    }
  }
  check(report, "anchor chain holds 10n+|Z2| voters", d_count == 10 * n + z2);
  check(report, "second chain holds 10n+|Z1|+1 voters", e_count == 10 * n + z1 + 1);
  check(report, "district 1 is the first |Z2| chain voters",
        h2_size == z2 && h2_is_chain_head);
  check(report, "target loses initially",
        !is_election_winner(target, initial_districting(target)));
  try {
    report.target_answer = to_verdict(solve_exact(target, guard).has_value());
  } catch (const GuardExceeded&) {
  }
  if (src_answer) {
    report.witness_forwarded = dcp_witness(source, src_answer->first, src_answer->second);
    report.witness_valid = witness_ok(target, *report.witness_forwarded);
  }
  return report;
}

ReductionReport verify_reduction(ReductionKind kind, const ProblemInstance& source,
                                 std::uint64_t guard) {
  if (kind != ReductionKind::LiftCompleteGraph && kind != ReductionKind::LiftUniformCost)
    throw ValidationError("reduction " + reduction_name(kind) + " takes a problem-instance source");
  ReductionReport report;
  report.kind = kind;
  ProblemInstance target = kind == ReductionKind::LiftCompleteGraph
                               ? lift_complete_graph(source)
                               : lift_uniform_cost(source);
  if (kind == ReductionKind::LiftCompleteGraph) {
    std::size_t nv = target.voters.size();
    check(report, "graph is complete", target.graph->edges.size() == nv * (nv - 1) / 2);
  } else {
    check(report, "cost map is all ones", target.costs.all_unit());
  }
  std::optional<SolveResult> src, tgt;
  bool decided = true;
  try {
    src = solve_exact(source, guard);
    tgt = solve_exact(target, guard);
  } catch (const GuardExceeded&) {
    decided = false;
  }
  if (decided) {
    report.source_answer = to_verdict(src.has_value());
    report.target_answer = to_verdict(tgt.has_value());
    check(report, "minimum cost preserved",
          src.has_value() == tgt.has_value() && (!src || src->cost == tgt->cost));
  }
  return report;
}

}  // namespace gerrysolve
