#include "gerrysolve/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "instance_view.hpp"

namespace gerrysolve {

void validate_x3c(const X3CInstance& x3c) {
  if (x3c.universe_size < 0 || x3c.universe_size % 3 != 0)
    throw ValidationError("universe size must be a nonnegative multiple of 3");
  for (const auto& s : x3c.sets) {
    if (s.size() != 3) throw ValidationError("every set must have exactly 3 elements");
    if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2])
      throw ValidationError("set elements must be distinct");
    for (int e : s)
      if (e < 1 || e > x3c.universe_size)
        throw ValidationError("set element out of universe range");
  }
}

void validate_2dcp(const TwoDCPInstance& dcp) {
  std::set<std::string> verts(dcp.vertices.begin(), dcp.vertices.end());
  if (verts.size() != dcp.vertices.size()) throw ValidationError("duplicate vertex");
  if (dcp.z1.empty() || dcp.z2.empty()) throw ValidationError("anchor sets must be non-empty");
  for (const auto& z : dcp.z1) {
    if (!verts.count(z)) throw ValidationError("anchor '" + z + "' is not a vertex");
    if (dcp.z2.count(z)) throw ValidationError("anchor sets must be disjoint");
  }
  for (const auto& z : dcp.z2)
    if (!verts.count(z)) throw ValidationError("anchor '" + z + "' is not a vertex");
  for (const auto& [a, b] : dcp.edges) {
    if (a == b) throw ValidationError("self-loop at '" + a + "'");
    if (!verts.count(a) || !verts.count(b)) throw ValidationError("edge references unknown vertex");
  }
  // whole graph connected
  if (dcp.vertices.empty()) throw ValidationError("empty graph");
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : dcp.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<std::string> visited{dcp.vertices.front()};
  std::vector<std::string> stack{dcp.vertices.front()};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    for (const auto& nb : adj[cur])
      if (visited.insert(nb).second) stack.push_back(nb);
  }
  if (visited.size() != verts.size()) throw ValidationError("graph is not connected");
}

namespace {

using detail::InstanceView;

struct Best {
  bool found = false;
  Cost cost;
  std::vector<std::pair<int, int>> key;  // movers as (voter index, destination)

  void offer(const Cost& c, std::vector<std::pair<int, int>> k) {
    if (!found || c < cost || (c == cost && k < key)) {
      found = true;
      cost = c;
      key = std::move(k);
    }
  }
  void merge(const Best& o) {
    if (o.found) offer(o.cost, o.key);
  }
};

// Evaluates assignment indices in [begin, end); digit v of an index (base k)
// is voter v's district.
Best scan_range(const InstanceView& view, std::uint64_t begin, std::uint64_t end) {
  Best best;
  std::vector<int> assign(view.n);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t rest = idx;
    for (int v = 0; v < view.n; ++v) {
      assign[v] = static_cast<int>(rest % view.k);
      rest /= view.k;
    }
    Cost c = view.assignment_cost(assign);
    if (c.is_unmovable() || !(c.value() <= view.budget)) continue;
    if (best.found && best.cost < c) continue;
    if (!view.target_wins(assign)) continue;
    if (!view.districts_connected(assign)) continue;
    best.offer(c, view.plan_key(assign));
  }
  return best;
}

}  // namespace

std::optional<SolveResult> solve_exact(const ProblemInstance& inst, std::uint64_t size_guard,
                                       int threads) {
  InstanceView view(inst);
  std::uint64_t total = sat_pow(static_cast<std::uint64_t>(view.k), static_cast<unsigned>(view.n));
  if (total > size_guard)
    throw GuardExceeded("instance too large for oracle: " + std::to_string(view.k) + "^" +
                        std::to_string(view.n) + " assignments exceed guard " +
                        std::to_string(size_guard));

  Best best;
  if (threads <= 1) {
    best = scan_range(view, 0, total);
  } else {
    int t = std::min<std::uint64_t>(threads, total == 0 ? 1 : total);
    std::vector<Best> partial(t);
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) {
      std::uint64_t lo = total * i / t, hi = total * (i + 1) / t;
      pool.emplace_back([&view, &partial, i, lo, hi] { partial[i] = scan_range(view, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const Best& p : partial) best.merge(p);
  }

  if (!best.found) return std::nullopt;
  MovePlan plan;
  for (const auto& [v, d] : best.key) plan.moves.push_back({inst.voters[v].id, d});
  return SolveResult{std::move(plan), best.cost};
}

std::optional<std::vector<int>> solve_x3c_brute(const X3CInstance& x3c, std::uint64_t guard) {
  validate_x3c(x3c);
  int need = x3c.universe_size / 3;
  int m = static_cast<int>(x3c.sets.size());
  if (need == 0) return std::vector<int>{};
  if (need > m) return std::nullopt;

  // C(m, need) combinations, lexicographic
  std::uint64_t combos = 1;
  for (int i = 0; i < need; ++i) combos = sat_mul(combos, m - i) / (i + 1);
  if (combos > guard) throw GuardExceeded("X3C enumeration exceeds guard");

  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  std::vector<int> covered(x3c.universe_size + 1, 0);
  while (true) {
    std::fill(covered.begin(), covered.end(), 0);
    bool exact = true;
    for (int idx : pick)
      for (int e : x3c.sets[idx])
        if (++covered[e] > 1) exact = false;
    if (exact) {
      bool full = true;
      for (int e = 1; e <= x3c.universe_size; ++e)
        if (!covered[e]) full = false;
      if (full) return pick;
    }
    // next combination
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<std::pair<std::set<std::string>, std::set<std::string>>> solve_2dcp_brute(
    const TwoDCPInstance& dcp, std::uint64_t guard) {
  validate_2dcp(dcp);
  int q = static_cast<int>(dcp.vertices.size());
  std::uint64_t total = sat_pow(2, static_cast<unsigned>(q));
  if (total > guard) throw GuardExceeded("2DCP enumeration exceeds guard");

  std::vector<std::string> verts = dcp.vertices;
  std::sort(verts.begin(), verts.end());
  std::map<std::string, int> index;
  for (int i = 0; i < q; ++i) index[verts[i]] = i;
  std::vector<std::vector<int>> adj(q);
  for (const auto& [a, b] : dcp.edges) {
    adj[index[a]].push_back(index[b]);
    adj[index[b]].push_back(index[a]);
  }
  std::uint64_t z1_mask = 0, z2_mask = 0;
  for (const auto& z : dcp.z1) z1_mask |= 1ULL << index[z];
  for (const auto& z : dcp.z2) z2_mask |= 1ULL << index[z];

  auto side_connected = [&](std::uint64_t mask) {
    if (mask == 0) return true;
    int start = 0;
    while (!((mask >> start) & 1)) ++start;
    std::uint64_t seen = 1ULL << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nb : adj[cur])
        if (((mask >> nb) & 1) && !((seen >> nb) & 1)) {
          seen |= 1ULL << nb;
          stack.push_back(nb);
        }
    }
    return seen == mask;
  };

  std::uint64_t full = total - 1;
  for (std::uint64_t v2 = 0; v2 < total; ++v2) {  // bit set -> vertex in V2
    std::uint64_t v1 = full & ~v2;
    if ((z1_mask & v2) || (z2_mask & ~v2)) continue;
    if (!side_connected(v1) || !side_connected(v2)) continue;
    std::pair<std::set<std::string>, std::set<std::string>> out;
    for (int i = 0; i < q; ++i)
      ((v2 >> i) & 1 ? out.second : out.first).insert(verts[i]);
    return out;
  }
  return std::nullopt;
}

}  // namespace gerrysolve
