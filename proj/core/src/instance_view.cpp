#include "instance_view.hpp"

#include <algorithm>
#include <map>

namespace gerrysolve::detail {

InstanceView::InstanceView(const ProblemInstance& instance) : inst(&instance) {
  n = static_cast<int>(instance.voters.size());
  k = instance.districts;
  m = static_cast<int>(instance.alternatives.size());
  mode = instance.winner_mode;
  budget = instance.budget;
  unit_cost = variant_unit_cost(instance.variant);

  std::map<AltId, int> alt_index;
  for (int a = 0; a < m; ++a) alt_index[instance.alternatives[a]] = a;
  target = alt_index.at(instance.target);

  std::map<VoterId, int> voter_index;
  top.resize(n);
  home.resize(n);
  for (int v = 0; v < n; ++v) {
    voter_index[instance.voters[v].id] = v;
    top[v] = alt_index.at(instance.voters[v].ranking.front());
    home[v] = instance.voters[v].home_district;
  }

  has_graph = instance.graph.has_value();
  if (has_graph) {
    adj.resize(n);
    for (const auto& [a, b] : instance.graph->edges) {
      int ia = voter_index.at(a), ib = voter_index.at(b);
      adj[ia].push_back(ib);
      adj[ib].push_back(ia);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }

  move_cost.reserve(static_cast<std::size_t>(n) * k);
  const Cost one = Cost::finite(Rational(1));
  for (int v = 0; v < n; ++v)
    for (int d = 0; d < k; ++d)
      move_cost.push_back(unit_cost ? one : instance.costs.effective(instance.voters[v].id, d));
}

bool InstanceView::target_wins(std::span<const int> assign) const {
  // per-district top counts
  std::vector<int> score(static_cast<std::size_t>(k) * m, 0);
  for (int v = 0; v < n; ++v) ++score[static_cast<std::size_t>(assign[v]) * m + top[v]];

  std::vector<int> wins(m, 0);
  for (int d = 0; d < k; ++d) {
    const int* row = &score[static_cast<std::size_t>(d) * m];
    int best = 0;
    for (int a = 0; a < m; ++a) best = std::max(best, row[a]);
    if (best == 0) continue;  // empty district
    for (int a = 0; a < m; ++a)
      if (row[a] == best) ++wins[a];
  }
  int most = *std::max_element(wins.begin(), wins.end());
  if (wins[target] != most) return false;
  if (mode == WinnerMode::Co) return true;
  for (int a = 0; a < m; ++a)
    if (a != target && wins[a] == most) return false;
  return true;
}

bool InstanceView::districts_connected(std::span<const int> assign) const {
  if (!has_graph) return true;
  std::vector<int> comp(n, -1);
  std::vector<int> stack;
  std::vector<int> seen_district(k, 0);
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    int d = assign[start];
    if (seen_district[d]) return false;  // second component in district d
    seen_district[d] = 1;
    stack.push_back(start);
    comp[start] = d;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nb : adj[cur]) {
        if (assign[nb] == d && comp[nb] == -1) {
          comp[nb] = d;
          stack.push_back(nb);
        }
      }
    }
  }
  return true;
}

Cost InstanceView::assignment_cost(std::span<const int> assign) const {
  Cost total = Cost::finite(Rational(0));
  for (int v = 0; v < n; ++v)
    if (assign[v] != home[v]) total += cost(v, assign[v]);
  return total;
}

MovePlan InstanceView::to_plan(std::span<const int> assign) const {
  MovePlan plan;
  for (int v = 0; v < n; ++v)
    if (assign[v] != home[v]) plan.moves.push_back({inst->voters[v].id, assign[v]});
  return plan;
}

std::vector<std::pair<int, int>> InstanceView::plan_key(std::span<const int> assign) const {
  std::vector<std::pair<int, int>> key;
  for (int v = 0; v < n; ++v)
    if (assign[v] != home[v]) key.push_back({v, assign[v]});
  return key;
}

}  // namespace gerrysolve::detail
