#include "gerrysolve/generate.hpp"

#include <algorithm>

namespace gerrysolve {

namespace {

std::string voter_name(int i) {
  std::string digits = std::to_string(i + 1);
  while (digits.size() < 3) digits.insert(digits.begin(), '0');
  return "v" + digits;
}

std::vector<AltId> alternative_names(int m) {
  std::vector<AltId> alts;
  for (int a = 0; a < m; ++a) alts.push_back(std::string(1, static_cast<char>('a' + a)));
  return alts;
}

}  // namespace

ProblemInstance random_instance(const RandomInstanceSpec& spec) {
  if (spec.voters < spec.districts || spec.districts < 1 || spec.alternatives < 1 ||
      spec.alternatives > 26)
    throw ValidationError("unsatisfiable random instance shape");
  SplitMix64 rng(spec.seed);
  const int n = spec.voters, k = spec.districts, m = spec.alternatives;

  ProblemInstance inst;
  inst.variant = spec.variant;
  inst.alternatives = alternative_names(m);
  inst.target = inst.alternatives[rng.below(m)];
  int max_budget = spec.max_budget < 0 ? n : spec.max_budget;
  inst.budget = Rational(rng.range(0, max_budget));
  inst.districts = k;

  std::vector<int> home(n, 0);
  std::vector<std::pair<int, int>> tree_edges;
  if (variant_has_graph(spec.variant)) {
    for (int v = 1; v < n; ++v) tree_edges.push_back({static_cast<int>(rng.below(v)), v});
    // districts = components after deleting k-1 random tree edges
    std::vector<int> order(tree_edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<char> cut(tree_edges.size(), 0);
    for (int c = 0; c < k - 1; ++c) cut[order[c]] = 1;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (std::size_t e = 0; e < tree_edges.size(); ++e)
      if (!cut[e]) {
        adj[tree_edges[e].first].push_back(tree_edges[e].second);
        adj[tree_edges[e].second].push_back(tree_edges[e].first);
      }
    int next = 0;
    for (int v = 0; v < n; ++v) {
      if (comp[v] != -1) continue;
      std::vector<int> stack{v};
      comp[v] = next;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nb : adj[cur])
          if (comp[nb] == -1) {
            comp[nb] = next;
            stack.push_back(nb);
          }
      }
      ++next;
    }
    std::vector<int> label(k);
    for (int i = 0; i < k; ++i) label[i] = i;
    for (int i = k; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
    for (int v = 0; v < n; ++v) home[v] = label[comp[v]];
  } else {
    for (int d = 0; d < k; ++d) home[d] = d;  // keep every district inhabited
    for (int v = k; v < n; ++v) home[v] = static_cast<int>(rng.below(k));
  }

  for (int v = 0; v < n; ++v) {
    Voter voter;
    voter.id = voter_name(v);
    voter.home_district = home[v];
    const AltId top = inst.alternatives[rng.below(m)];
    voter.ranking.push_back(top);
    for (const AltId& a : inst.alternatives)
      if (a != top) voter.ranking.push_back(a);
    inst.voters.push_back(std::move(voter));
  }

  if (variant_has_graph(spec.variant)) {
    inst.graph.emplace();
    for (const Voter& v : inst.voters) inst.graph->vertices.insert(v.id);
    for (const auto& [a, b] : tree_edges) inst.graph->add_edge(voter_name(a), voter_name(b));
    if (!spec.pure_tree && n > 2) {
      int extra = static_cast<int>(rng.below(n / 2 + 1));
      for (int e = 0; e < extra; ++e) {
        int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
        if (a != b) inst.graph->add_edge(voter_name(a), voter_name(b));
      }
    }
  }

  if (!variant_unit_cost(spec.variant) && spec.random_costs) {
    for (int v = 0; v < n; ++v)
      for (int d = 0; d < k; ++d) {
        std::uint64_t roll = rng.below(8);
        if (roll == 0)
          inst.costs.entries[{voter_name(v), d}] = Cost::unmovable();
        else if (roll <= 3)
          inst.costs.entries[{voter_name(v), d}] =
              Cost::finite(Rational(rng.range(0, 8), rng.range(1, 3)));
      }
  }

  validate_instance(inst);
  return inst;
}

TwoDCPInstance random_2dcp(int vertices, std::uint64_t seed) {
  if (vertices < 2 || vertices > 26) throw ValidationError("2dcp size out of range");
  SplitMix64 rng(seed);
  TwoDCPInstance dcp;
  for (int v = 0; v < vertices; ++v)
    dcp.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
  auto name = [&](int v) { return dcp.vertices[v]; };
  for (int v = 1; v < vertices; ++v) {
    std::string a = name(static_cast<int>(rng.below(v))), b = name(v);
    if (b < a) std::swap(a, b);
    dcp.edges.insert({a, b});
  }
  int extra = static_cast<int>(rng.below(vertices));
  for (int e = 0; e < extra; ++e) {
    int a = static_cast<int>(rng.below(vertices)), b = static_cast<int>(rng.below(vertices));
    if (a == b) continue;
    std::string x = name(a), y = name(b);
    if (y < x) std::swap(x, y);
    dcp.edges.insert({x, y});
  }
  // disjoint non-empty anchors
  int z1 = static_cast<int>(rng.below(vertices));
  int z2 = static_cast<int>(rng.below(vertices - 1));
  if (z2 >= z1) ++z2;
  dcp.z1.insert(name(z1));
  dcp.z2.insert(name(z2));
  for (int v = 0; v < vertices; ++v) {
    if (v == z1 || v == z2) continue;
    std::uint64_t roll = rng.below(4);
    if (roll == 0) dcp.z1.insert(name(v));
    if (roll == 1) dcp.z2.insert(name(v));
  }
  validate_2dcp(dcp);
  return dcp;
}

MovePlan random_plan(const ProblemInstance& inst, int max_moves, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = static_cast<int>(inst.voters.size());
  MovePlan plan;
  if (inst.districts < 2 || n == 0 || max_moves <= 0) return plan;
  int count = static_cast<int>(rng.below(std::min(max_moves, n) + 1));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (int i = 0; i < count; ++i) {
    const Voter& v = inst.voters[order[i]];
    int dest = static_cast<int>(rng.below(inst.districts - 1));
    if (dest >= v.home_district) ++dest;
    plan.moves.push_back({v.id, dest});
  }
  std::sort(plan.moves.begin(), plan.moves.end());
  return plan;
}

}  // namespace gerrysolve
