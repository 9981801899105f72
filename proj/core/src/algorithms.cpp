#include "gerrysolve/algorithms.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "instance_view.hpp"

namespace gerrysolve {

namespace {

using detail::InstanceView;

struct Best {
  bool found = false;
  Cost cost;
  std::vector<std::pair<int, int>> key;

  void offer(const Cost& c, std::vector<std::pair<int, int>> k) {
    if (!found || c < cost || (c == cost && k < key)) {
      found = true;
      cost = c;
      key = std::move(k);
    }
  }
};

std::optional<SolveResult> best_to_result(const ProblemInstance& inst, const Best& best) {
  if (!best.found) return std::nullopt;
  MovePlan plan;
  for (const auto& [v, d] : best.key) plan.moves.push_back({inst.voters[v].id, d});
  return SolveResult{std::move(plan), best.cost};
}

int integer_budget(const InstanceView& view) {
  return static_cast<int>(view.budget.integer_value());
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounded-move enumeration
// ---------------------------------------------------------------------------

std::optional<SolveResult> solve_bounded_moves(const ProblemInstance& inst, int max_moves,
                                               std::uint64_t guard) {
  if (max_moves < 0) throw ValidationError("max_moves must be nonnegative");
  InstanceView view(inst);

  // finite-cost destinations per voter
  std::vector<std::vector<int>> dests(view.n);
  std::uint64_t movable_pairs = 0;
  for (int v = 0; v < view.n; ++v)
    for (int d = 0; d < view.k; ++d)
      if (d != view.home[v] && view.cost(v, d).is_finite()) {
        dests[v].push_back(d);
        ++movable_pairs;
      }
  if (sat_pow(std::max<std::uint64_t>(movable_pairs, 1), static_cast<unsigned>(max_moves)) > guard)
    throw GuardExceeded("bounded-move enumeration exceeds guard");

  Best best;
  std::vector<int> assign(view.home);
  Cost running = Cost::finite(Rational(0));

  auto evaluate = [&] {
    if (!(running.value() <= view.budget)) return;
    if (best.found && best.cost < running) return;
    if (!view.target_wins(assign)) return;
    if (!view.districts_connected(assign)) return;
    // depth-first order is lexicographic in the move list, so on equal cost
    // the earlier hit is already the smaller key
    best.offer(running, view.plan_key(assign));
  };

  // movers chosen in increasing voter order; every prefix is itself a plan
  auto rec = [&](auto&& self, int next_voter, int moves_left) -> void {
    if (moves_left == 0) return;
    for (int v = next_voter; v < view.n; ++v) {
      for (int d : dests[v]) {
        Cost saved = running;
        running += view.cost(v, d);
        assign[v] = d;
        evaluate();
        self(self, v + 1, moves_left - 1);
        assign[v] = view.home[v];
        running = saved;
      }
    }
  };

  evaluate();  // empty plan
  rec(rec, 0, max_moves);
  return best_to_result(inst, best);
}

// ---------------------------------------------------------------------------
// Tree cut enumeration
// ---------------------------------------------------------------------------

namespace {

// Components of the tree after removing the cut edges, each listed as sorted
// voter indices, ordered by smallest member.
std::vector<std::vector<int>> tree_components(int n, const std::vector<std::pair<int, int>>& edges,
                                              const std::vector<int>& cut) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> is_cut(edges.size(), 0);
  for (int e : cut) is_cut[e] = 1;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!is_cut[e]) parent[find(edges[e].first)] = find(edges[e].second);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (comp_of[root] == -1) {
      comp_of[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[root]].push_back(v);
  }
  return comps;
}

}  // namespace

std::optional<SolveResult> solve_tree_cuts(const ProblemInstance& inst, std::uint64_t guard) {
  if (!variant_has_graph(inst.variant))
    throw ValidationError("tree-cut solver needs a graph variant (GB or MGM)");
  InstanceView view(inst);

  std::vector<std::pair<int, int>> edges;
  {
    std::map<VoterId, int> index;
    for (int v = 0; v < view.n; ++v) index[inst.voters[v].id] = v;
    for (const auto& [a, b] : inst.graph->edges) edges.push_back({index[a], index[b]});
  }
  std::sort(edges.begin(), edges.end());
  if (static_cast<int>(edges.size()) != view.n - 1 ||
      tree_components(view.n, edges, {}).size() != 1)
    throw ValidationError("graph is not a tree");

  // total labelled work: sum over s of C(n-1, s) * k!/(k-s-1)!
  std::uint64_t work = 0;
  for (int s = 0; s < view.k && s <= view.n - 1; ++s) {
    std::uint64_t combos = 1;
    for (int i = 0; i < s; ++i) combos = sat_mul(combos, view.n - 1 - i) / (i + 1);
    std::uint64_t labelings = 1;
    for (int i = 0; i <= s; ++i) labelings = sat_mul(labelings, view.k - i);
    work = sat_add(work, sat_mul(combos, labelings));
  }
  if (work > guard) throw GuardExceeded("tree-cut enumeration exceeds guard");

  Best best;
  std::vector<int> assign(view.n);

  auto consider_cut = [&](const std::vector<int>& cut) {
    auto comps = tree_components(view.n, edges, cut);
    int parts = static_cast<int>(comps.size());
    if (parts > view.k) return;

    // per-part tallies and per-(part, district) relabel prices
    std::vector<Cost> price(static_cast<std::size_t>(parts) * view.k, Cost::finite(Rational(0)));
    for (int p = 0; p < parts; ++p)
      for (int d = 0; d < view.k; ++d) {
        Cost c = Cost::finite(Rational(0));
        for (int v : comps[p])
          if (view.home[v] != d) c += view.cost(v, d);
        price[static_cast<std::size_t>(p) * view.k + d] = c;
      }

    std::vector<int> label(parts, -1);
    std::vector<char> used(view.k, 0);
    auto assign_labels = [&](auto&& self, int p, Cost acc) -> void {
      if (acc.is_unmovable() || !(acc.value() <= view.budget)) return;
      if (p == parts) {
        for (int q = 0; q < parts; ++q)
          for (int v : comps[q]) assign[v] = label[q];
        if (!view.target_wins(assign)) return;
        best.offer(acc, view.plan_key(assign));
        return;
      }
      for (int d = 0; d < view.k; ++d) {
        if (used[d]) continue;
        used[d] = 1;
        label[p] = d;
        self(self, p + 1, acc + price[static_cast<std::size_t>(p) * view.k + d]);
        used[d] = 0;
      }
    };
    assign_labels(assign_labels, 0, Cost::finite(Rational(0)));
  };

  // all edge subsets of size 0..k-1
  int e_total = view.n - 1;
  std::vector<int> cut;
  auto choose = [&](auto&& self, int from, int remaining) -> void {
    consider_cut(cut);
    if (remaining == 0) return;
    for (int e = from; e < e_total; ++e) {
      cut.push_back(e);
      self(self, e + 1, remaining - 1);
      cut.pop_back();
    }
  };
  if (view.k >= 1) choose(choose, 0, view.k - 1);

  return best_to_result(inst, best);
}

// ---------------------------------------------------------------------------
// Fixed-district guess-and-repair (MRGM)
// ---------------------------------------------------------------------------

namespace {

// Working state for one repair run. Voters sit in a district or the detached
// pool (-1); selection inside every step is by smallest voter index, which is
// smallest voter id since voters are kept sorted.
struct RepairState {
  const InstanceView& view;
  std::vector<int> where;               // voter -> district or -1 (pool)
  std::vector<std::vector<int>> score;  // [district][alternative]
  int charge_left;

  RepairState(const InstanceView& v, int budget)
      : view(v), where(v.home), score(v.k, std::vector<int>(v.m, 0)), charge_left(budget) {
    for (int i = 0; i < v.n; ++i) ++score[v.home[i]][v.top[i]];
  }

  bool charge(int amount) { return (charge_left -= amount) >= 0; }

  void detach(int voter) {
    --score[where[voter]][view.top[voter]];
    where[voter] = -1;
  }
  void place(int voter, int district) {
    where[voter] = district;
    ++score[district][view.top[voter]];
  }

  // smallest-index voter topping alt inside district (or the pool when
  // district == -1); -1 when none
  int pick(int alt, int district) const {
    for (int v = 0; v < view.n; ++v)
      if (where[v] == district && view.top[v] == alt) return v;
    return -1;
  }

  int pool_count(int alt) const {
    int c = 0;
    for (int v = 0; v < view.n; ++v)
      if (where[v] == -1 && view.top[v] == alt) ++c;
    return c;
  }

  int district_max(int district) const {
    return *std::max_element(score[district].begin(), score[district].end());
  }
};

// One guess: the winning plurality score per district and whether the target
// is guessed to win there. Returns a full assignment when the repair survives.
std::optional<std::vector<int>> repair(const InstanceView& view, const std::vector<int>& w,
                                       unsigned wins_mask, int budget) {
  const int k = view.k, m = view.m, c = view.target;
  RepairState st(view, budget);
  auto in_wins = [&](int d) { return (wins_mask >> d) & 1u; };

  // trim every district down to its guessed winning score; the target must
  // additionally stay strictly below it where it is guessed to lose
  for (int a = 0; a < m; ++a) {
    if (a == c) continue;
    for (int d = 0; d < k; ++d) {
      int excess = st.score[d][a] - w[d];
      for (int i = 0; i < excess; ++i) {
        st.detach(st.pick(a, d));
        if (!st.charge(1)) return std::nullopt;
      }
    }
  }
  for (int d = 0; d < k; ++d) {
    int cap = in_wins(d) ? w[d] : std::max(w[d] - 1, 0);
    int excess = st.score[d][c] - cap;
    for (int i = 0; i < excess; ++i) {
      st.detach(st.pick(c, d));
      if (!st.charge(1)) return std::nullopt;
    }
  }

  // raise the target to the guessed score in every district it should win,
  // preferring detached target voters, else pulling from losing districts
  while (true) {
    int deficit_d = -1;
    for (int d = 0; d < k; ++d)
      if (in_wins(d) && st.score[d][c] < w[d]) {
        deficit_d = d;
        break;
      }
    if (deficit_d == -1) break;
    int v = st.pick(c, -1);
    if (v != -1) {
      st.place(v, deficit_d);
      continue;
    }
    for (int u = 0; u < view.n && v == -1; ++u)
      if (view.top[u] == c && st.where[u] >= 0 && !in_wins(st.where[u])) v = u;
    if (v == -1) return std::nullopt;
    st.detach(v);
    st.place(v, deficit_d);
    if (!st.charge(1)) return std::nullopt;
  }

  // park detached voters wherever they stay two below the winning score
  for (bool placed = true; placed;) {
    placed = false;
    for (int a = 0; a < m && !placed; ++a)
      for (int d = 0; d < k && !placed; ++d)
        if (st.score[d][a] <= w[d] - 2) {
          int v = st.pick(a, -1);
          if (v != -1) {
            st.place(v, d);
            placed = true;
          }
        }
  }

  if (st.pool_count(c) > 0) return std::nullopt;

  // drain the pool: each leftover voter may reach (but not exceed) the
  // winning score somewhere
  while (true) {
    int v = -1;
    for (int u = 0; u < view.n; ++u)
      if (st.where[u] == -1) {
        v = u;
        break;
      }
    if (v == -1) break;
    int a = view.top[v];
    int dest = -1;
    for (int d = 0; d < k; ++d)
      if (st.score[d][a] < w[d]) {
        dest = d;
        break;
      }
    if (dest == -1) return std::nullopt;
    st.place(v, dest);
  }

  // rivals co-winning as many districts as the target loses the election;
  // shift one of their voters into a district with slack
  int lambda = 0;
  for (int d = 0; d < k; ++d)
    if (in_wins(d)) ++lambda;
  while (true) {
    int rival = -1;
    for (int a = 0; a < m && rival == -1; ++a) {
      if (a == c) continue;
      int cw = 0;
      for (int d = 0; d < k; ++d) {
        int mx = st.district_max(d);
        if (mx > 0 && st.score[d][a] == mx) ++cw;
      }
      if (cw >= lambda && cw >= 1) rival = a;
    }
    if (rival == -1) break;
    int v = -1;
    for (int u = 0; u < view.n && v == -1; ++u) {
      if (view.top[u] != rival || st.where[u] < 0) continue;
      int d = st.where[u];
      int mx = st.district_max(d);
      if (mx > 0 && st.score[d][rival] == mx) v = u;
    }
    if (v == -1) return std::nullopt;
    int dest = -1;
    for (int d = 0; d < k; ++d)
      if (st.score[d][rival] <= w[d] - 2) {
        dest = d;
        break;
      }
    if (dest == -1) return std::nullopt;
    st.detach(v);
    st.place(v, dest);
    if (!st.charge(1)) return std::nullopt;
  }

  return st.where;
}

}  // namespace

// The step repair above cannot reach solutions that raise a rival to the
// guessed winning score of one district in order to strip its co-wins
// elsewhere (it only ever parks rivals two below the score). The completing
// phase therefore guesses each district's full winner set alongside its
// winning score; a guess then fixes, per alternative, a box of admissible
// final scores in every district, and the cheapest realization is a
// per-alternative greedy transport.
namespace {

struct WinnerSetSearch {
  const InstanceView& view;
  int budget;
  std::vector<int> totals;               // voters per alternative
  std::vector<std::vector<int>> tally;   // initial [district][alternative]
  Best& best;

  WinnerSetSearch(const InstanceView& v, int b, Best& out)
      : view(v), budget(b), totals(v.m, 0), tally(v.k, std::vector<int>(v.m, 0)), best(out) {
    for (int i = 0; i < v.n; ++i) {
      ++totals[v.top[i]];
      ++tally[v.home[i]][v.top[i]];
    }
  }

  // admissible winner sets for one district at winning score w: any non-empty
  // set of alternatives that have w supporters overall; only the empty
  // district carries score 0
  std::vector<unsigned> winner_sets(int w) const {
    std::vector<unsigned> sets;
    if (w == 0) {
      sets.push_back(0);
      return sets;
    }
    unsigned eligible = 0;
    for (int a = 0; a < view.m; ++a)
      if (totals[a] >= w) eligible |= 1u << a;
    for (unsigned s = 1; s < (1u << view.m); ++s)
      if ((s & eligible) == s) sets.push_back(s);
    return sets;
  }

  // minimum inflow realizing row-sum T within per-district boxes; fills s
  int min_transport(int alt, const std::vector<int>& w, const std::vector<unsigned>& winners,
                    std::vector<int>& s) const {
    int sum = 0, cost = 0;
    for (int d = 0; d < view.k; ++d) {
      bool wins = (winners[d] >> alt) & 1u;
      int lo = wins ? w[d] : 0;
      int hi = wins ? w[d] : std::max(w[d] - 1, 0);
      int v = std::clamp(tally[d][alt], lo, hi);
      s[d] = v;
      sum += v;
      if (v > tally[d][alt]) cost += v - tally[d][alt];
    }
    int total = totals[alt];
    for (int d = 0; d < view.k && sum > total; ++d) {  // shed outflow, free
      bool wins = (winners[d] >> alt) & 1u;
      int lo = wins ? w[d] : 0;
      int drop = std::min(sum - total, s[d] - lo);
      s[d] -= drop;
      sum -= drop;
    }
    for (int d = 0; d < view.k && sum < total; ++d) {  // paid inflow
      bool wins = (winners[d] >> alt) & 1u;
      int hi = wins ? w[d] : std::max(w[d] - 1, 0);
      int add = std::min(total - sum, hi - s[d]);
      s[d] += add;
      sum += add;
      cost += add;
    }
    return sum == total ? cost : -1;
  }

  bool winner_sets_elect_target(const std::vector<unsigned>& winners) const {
    std::vector<int> wins(view.m, 0);
    for (int d = 0; d < view.k; ++d)
      for (int a = 0; a < view.m; ++a)
        if ((winners[d] >> a) & 1u) ++wins[a];
    for (int a = 0; a < view.m; ++a) {
      if (a == view.target) continue;
      if (view.mode == WinnerMode::Unique ? wins[a] >= wins[view.target]
                                          : wins[a] > wins[view.target])
        return false;
    }
    return true;
  }

  void realize(const std::vector<std::vector<int>>& moves_needed) {
    // moves_needed[d][a] = final - initial score; match releases to arrivals
    std::vector<int> assign(view.home);
    for (int a = 0; a < view.m; ++a) {
      std::vector<int> pool;  // released voters, by ascending id
      for (int d = 0; d < view.k; ++d) {
        int release = -std::min(moves_needed[d][a], 0);
        for (int i = 0; i < view.n && release > 0; ++i)
          if (view.top[i] == a && view.home[i] == d) {
            pool.push_back(i);
            --release;
          }
      }
      std::sort(pool.begin(), pool.end());
      std::size_t next = 0;
      for (int d = 0; d < view.k; ++d)
        for (int arrive = moves_needed[d][a]; arrive > 0; --arrive) assign[pool[next++]] = d;
    }
    int moved = 0;
    for (int i = 0; i < view.n; ++i) moved += assign[i] != view.home[i];
    if (moved > budget) return;
    if (!view.target_wins(assign)) return;
    best.offer(Cost::finite(Rational(moved)), view.plan_key(assign));
  }

  void consider(const std::vector<int>& w, const std::vector<unsigned>& winners) {
    if (!winner_sets_elect_target(winners)) return;
    std::vector<std::vector<int>> delta(view.k, std::vector<int>(view.m, 0));
    std::vector<int> s(view.k);
    int cost = 0;
    for (int a = 0; a < view.m; ++a) {
      int c = min_transport(a, w, winners, s);
      if (c < 0) return;
      cost += c;
      if (cost > budget) return;
      for (int d = 0; d < view.k; ++d) delta[d][a] = s[d] - tally[d][a];
    }
    realize(delta);
  }

  void run() {
    // per-district candidate scores: 0 or any value some alternative can fill
    int max_w = 0;
    for (int a = 0; a < view.m; ++a) max_w = std::max(max_w, totals[a]);
    std::vector<std::vector<unsigned>> sets_by_score(max_w + 1);
    for (int w = 0; w <= max_w; ++w) sets_by_score[w] = winner_sets(w);

    std::vector<int> w(view.k, 0);
    std::vector<unsigned> winners(view.k, 0);
    auto rec = [&](auto&& self, int d) -> void {
      if (d == view.k) {
        consider(w, winners);
        return;
      }
      for (int score = 0; score <= max_w; ++score) {
        w[d] = score;
        for (unsigned set : sets_by_score[score]) {
          winners[d] = set;
          self(self, d + 1);
        }
      }
    };
    rec(rec, 0);
  }
};

}  // namespace

std::optional<SolveResult> solve_mrgm_fixed_districts(const ProblemInstance& inst,
                                                      std::uint64_t guard) {
  if (inst.variant != Variant::MRGM)
    throw ValidationError("fixed-district solver applies to MRGM only");
  InstanceView view(inst);
  const int budget = integer_budget(view);
  const int k = view.k, n = view.n;

  std::uint64_t step_guesses =
      sat_mul(sat_pow(static_cast<std::uint64_t>(n) + 1, static_cast<unsigned>(k)),
              sat_pow(2, static_cast<unsigned>(k)));
  std::uint64_t set_guesses =
      sat_mul(sat_pow(static_cast<std::uint64_t>(n) + 1, static_cast<unsigned>(k)),
              sat_pow(2, static_cast<unsigned>(view.m * k)));
  if (sat_add(step_guesses, set_guesses) > guard)
    throw GuardExceeded("score-guess enumeration exceeds guard");

  Best best;
  std::vector<int> w(k, 0);
  while (true) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      auto assignment = repair(view, w, mask, budget);
      if (!assignment) continue;
      // unconditional re-validation: the repair never gets to certify itself
      int moves = 0;
      for (int v = 0; v < n; ++v)
        if ((*assignment)[v] != view.home[v]) ++moves;
      if (moves > budget) continue;
      if (!view.target_wins(*assignment)) continue;
      best.offer(Cost::finite(Rational(moves)), view.plan_key(*assignment));
    }
    int i = k - 1;
    while (i >= 0 && w[i] == n) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }

  WinnerSetSearch completing(view, budget, best);
  completing.run();
  return best_to_result(inst, best);
}

// ---------------------------------------------------------------------------
// Constant-alternative dynamic program (MRGM)
// ---------------------------------------------------------------------------

namespace {

struct DpLayer {
  std::vector<char> truth;
  std::vector<std::uint32_t> live;
};

struct DpTables {
  int k = 0, m = 0, budget = 0;
  int net_base = 0, spent_base = 0, wins_base = 0;
  std::size_t layer_size = 0;
  // per district: candidate net changes with their budget use and win deltas
  struct Transition {
    std::vector<int> mu;
    int entering = 0;  // voters moved in (positive part)
    std::vector<int> win_delta;
  };
  std::vector<std::vector<Transition>> by_district;
  std::vector<DpLayer> layers;
  int target = 0;
  WinnerMode mode = WinnerMode::Unique;
};

std::size_t dp_index(const DpTables& t, const std::vector<int>& net, int spent,
                     const std::vector<int>& wins) {
  std::size_t idx = 0;
  for (int a = 0; a < t.m; ++a) idx = idx * t.net_base + (net[a] + t.budget);
  idx = idx * t.spent_base + spent;
  for (int a = 0; a < t.m; ++a) idx = idx * t.wins_base + wins[a];
  return idx;
}

void dp_decode(const DpTables& t, std::size_t idx, std::vector<int>& net, int& spent,
               std::vector<int>& wins) {
  for (int a = t.m - 1; a >= 0; --a) {
    wins[a] = static_cast<int>(idx % t.wins_base);
    idx /= t.wins_base;
  }
  spent = static_cast<int>(idx % t.spent_base);
  idx /= t.spent_base;
  for (int a = t.m - 1; a >= 0; --a) {
    net[a] = static_cast<int>(idx % t.net_base) - t.budget;
    idx /= t.net_base;
  }
}

DpTables build_dp(const ProblemInstance& inst, std::uint64_t guard) {
  if (inst.variant != Variant::MRGM)
    throw ValidationError("dynamic program applies to MRGM only");
  InstanceView view(inst);
  DpTables t;
  t.k = view.k;
  t.m = view.m;
  t.budget = integer_budget(view);
  t.target = view.target;
  t.mode = view.mode;
  t.net_base = 2 * t.budget + 1;
  t.spent_base = t.budget + 1;
  t.wins_base = t.k + 1;

  std::uint64_t size = sat_mul(
      sat_mul(sat_pow(t.net_base, static_cast<unsigned>(t.m)), t.spent_base),
      sat_pow(t.wins_base, static_cast<unsigned>(t.m)));
  if (sat_mul(size, static_cast<std::uint64_t>(t.k) + 1) > guard)
    throw GuardExceeded("dynamic-programming table exceeds guard");
  t.layer_size = static_cast<std::size_t>(size);

  // initial per-district tallies
  std::vector<std::vector<int>> tally(t.k, std::vector<int>(t.m, 0));
  for (int v = 0; v < view.n; ++v) ++tally[view.home[v]][view.top[v]];

  t.by_district.resize(t.k);
  for (int d = 0; d < t.k; ++d) {
    std::vector<int> mu(t.m, 0);
    auto gen = [&](auto&& self, int a, int plus, int minus) -> void {
      if (a == t.m) {
        DpTables::Transition tr;
        tr.mu = mu;
        tr.entering = plus;
        tr.win_delta.assign(t.m, 0);
        int mx = 0;
        for (int b = 0; b < t.m; ++b) mx = std::max(mx, tally[d][b] + mu[b]);
        if (mx > 0)
          for (int b = 0; b < t.m; ++b)
            if (tally[d][b] + mu[b] == mx) tr.win_delta[b] = 1;
        t.by_district[d].push_back(std::move(tr));
        return;
      }
      int lo = -std::min(tally[d][a], t.budget - minus);
      int hi = t.budget - plus;
      for (int x = lo; x <= hi; ++x) {
        mu[a] = x;
        self(self, a + 1, plus + std::max(x, 0), minus + std::max(-x, 0));
      }
      mu[a] = 0;
    };
    gen(gen, 0, 0, 0);
  }

  // forward sweep over district layers
  t.layers.resize(t.k + 1);
  for (auto& layer : t.layers) layer.truth.assign(t.layer_size, 0);
  std::vector<int> zero_net(t.m, 0), zero_wins(t.m, 0);
  std::size_t start = dp_index(t, zero_net, 0, zero_wins);
  t.layers[0].truth[start] = 1;
  t.layers[0].live.push_back(static_cast<std::uint32_t>(start));

  std::vector<int> net(t.m), wins(t.m), nnet(t.m), nwins(t.m);
  for (int d = 0; d < t.k; ++d) {
    const DpLayer& prev = t.layers[d];
    DpLayer& next = t.layers[d + 1];
    for (std::uint32_t idx : prev.live) {
      int spent;
      dp_decode(t, idx, net, spent, wins);
      for (const auto& tr : t.by_district[d]) {
        int nspent = spent + tr.entering;
        if (nspent > t.budget) continue;
        bool ok = true;
        for (int a = 0; a < t.m; ++a) {
          nnet[a] = net[a] - tr.mu[a];
          if (nnet[a] < -t.budget || nnet[a] > t.budget) {
            ok = false;
            break;
          }
          nwins[a] = wins[a] + tr.win_delta[a];
        }
        if (!ok) continue;
        std::size_t nidx = dp_index(t, nnet, nspent, nwins);
        if (!next.truth[nidx]) {
          next.truth[nidx] = 1;
          next.live.push_back(static_cast<std::uint32_t>(nidx));
        }
      }
    }
  }
  return t;
}

bool dp_state_wins(const DpTables& t, const std::vector<int>& wins) {
  for (int a = 0; a < t.m; ++a) {
    if (a == t.target) continue;
    if (t.mode == WinnerMode::Unique ? wins[a] >= wins[t.target] : wins[a] > wins[t.target])
      return false;
  }
  return true;
}

}  // namespace

bool solve_mrgm_dp(const ProblemInstance& inst, std::uint64_t guard) {
  DpTables t = build_dp(inst, guard);
  std::vector<int> net(t.m), wins(t.m);
  int spent;
  for (std::uint32_t idx : t.layers[t.k].live) {
    dp_decode(t, idx, net, spent, wins);
    bool zero = std::all_of(net.begin(), net.end(), [](int x) { return x == 0; });
    if (zero && dp_state_wins(t, wins)) return true;
  }
  return false;
}

DpTrace solve_mrgm_dp_trace(const ProblemInstance& inst, std::uint64_t guard) {
  DpTables t = build_dp(inst, guard);
  DpTrace trace;

  std::vector<int> net(t.m), wins(t.m);
  int spent = 0;
  std::size_t accept = 0;
  bool found = false;
  for (std::uint32_t idx : t.layers[t.k].live) {
    dp_decode(t, idx, net, spent, wins);
    bool zero = std::all_of(net.begin(), net.end(), [](int x) { return x == 0; });
    if (zero && dp_state_wins(t, wins)) {
      accept = idx;
      found = true;
      break;
    }
  }
  trace.winnable = found;
  if (!found) return trace;

  // walk back down the layers, re-deriving one predecessor per district
  trace.district_net_change.assign(t.k, {});
  std::size_t cur = accept;
  for (int d = t.k - 1; d >= 0; --d) {
    dp_decode(t, cur, net, spent, wins);
    bool stepped = false;
    for (const auto& tr : t.by_district[d]) {
      if (tr.entering > spent) continue;
      std::vector<int> pnet(t.m), pwins(t.m);
      bool ok = true;
      for (int a = 0; a < t.m; ++a) {
        pnet[a] = net[a] + tr.mu[a];
        pwins[a] = wins[a] - tr.win_delta[a];
        if (pnet[a] < -t.budget || pnet[a] > t.budget || pwins[a] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::size_t pidx = dp_index(t, pnet, spent - tr.entering, pwins);
      if (t.layers[d].truth[pidx]) {
        trace.district_net_change[d] = tr.mu;
        cur = pidx;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("dp trace: no predecessor found");
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Robustness
// ---------------------------------------------------------------------------

std::optional<int> min_moves_to_win(const ProblemInstance& inst, std::uint64_t guard) {
  if (!variant_unit_cost(inst.variant))
    throw ValidationError("robustness applies to unit-cost variants (MGM/MRGM)");
  InstanceView view(inst);

  for (int b = 0; b <= view.n; ++b) {
    ProblemInstance probe = inst;
    probe.budget = Rational(b);

    // cheapest decision procedure that fits its guard
    std::uint64_t pairs = static_cast<std::uint64_t>(view.n) * (view.k - 1);
    std::uint64_t bounded_work = sat_pow(std::max<std::uint64_t>(pairs, 1),
                                         static_cast<unsigned>(std::min(b, view.n)));
    std::uint64_t oracle_work =
        sat_pow(static_cast<std::uint64_t>(view.k), static_cast<unsigned>(view.n));

    bool yes;
    if (bounded_work <= guard && bounded_work <= oracle_work) {
      yes = solve_bounded_moves(probe, b, guard).has_value();
    } else if (oracle_work <= guard) {
      yes = solve_exact(probe, guard).has_value();
    } else if (bounded_work <= guard) {
      yes = solve_bounded_moves(probe, b, guard).has_value();
    } else if (inst.variant == Variant::MRGM) {
      yes = solve_mrgm_dp(probe, guard);
    } else {
      throw GuardExceeded("robustness: every decision procedure exceeds its guard");
    }
    if (yes) return b;
  }
  return std::nullopt;
}

}  // namespace gerrysolve
