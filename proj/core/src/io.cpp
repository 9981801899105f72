#include "gerrysolve/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gerrysolve {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("syntax error: ") + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing key '" + key + "'");
  return *it;
}

std::string get_string(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw ValidationError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

Rational get_rational(const json& v, const std::string& where) {
  if (v.is_number_unsigned() || v.is_number_integer())
    return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ValidationError(where + ": expected a rational string");
}

Cost get_cost(const json& v, const std::string& where) {
  if (v.is_string() && v.get<std::string>() == "unmovable") return Cost::unmovable();
  return Cost::finite(get_rational(v, where));
}

json cost_json(const Cost& c) {
  return c.is_unmovable() ? json("unmovable") : json(c.value().str());
}

}  // namespace

std::string serialize_instance(const ProblemInstance& inst) {
  json j;
  json alternatives = json::array();
  std::vector<AltId> alts = inst.alternatives;
  std::sort(alts.begin(), alts.end());
  for (const AltId& a : alts) alternatives.push_back(a);
  j["alternatives"] = alternatives;
  j["budget"] = inst.budget.str();
  j["districts"] = inst.districts;
  j["target"] = inst.target;
  j["variant"] = variant_name(inst.variant);
  if (inst.winner_mode == WinnerMode::Co) j["winner_mode"] = "co";

  json voters = json::array();
  std::vector<const Voter*> sorted;
  for (const Voter& v : inst.voters) sorted.push_back(&v);
  std::sort(sorted.begin(), sorted.end(),
            [](const Voter* a, const Voter* b) { return a->id < b->id; });
  for (const Voter* v : sorted) {
    json jv;
    jv["district"] = v->home_district;
    jv["id"] = v->id;
    jv["ranking"] = v->ranking;
    voters.push_back(jv);
  }
  j["voters"] = voters;

  if (inst.graph) {
    json edges = json::array();
    for (const auto& [a, b] : inst.graph->edges) edges.push_back(json::array({a, b}));
    j["graph"] = json{{"edges", edges}};
  }

  if (!variant_unit_cost(inst.variant)) {
    json costs = json::object();
    const Cost one = Cost::finite(Rational(1));
    if (!(inst.costs.default_cost == one)) costs["default_cost"] = cost_json(inst.costs.default_cost);
    if (!inst.costs.entries.empty()) {
      json entries = json::array();
      for (const auto& [key, cost] : inst.costs.entries) {
        json e;
        e["cost"] = cost_json(cost);
        e["district"] = key.second;
        e["voter"] = key.first;
        entries.push_back(e);
      }
      costs["entries"] = entries;
    }
    if (!costs.empty()) j["costs"] = costs;
  }
  return dump(j);
}

ProblemInstance parse_instance(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ValidationError("instance document must be an object");
  ProblemInstance inst;

  std::string vname = get_string(j, "variant", "instance");
  auto variant = variant_from_name(vname);
  if (!variant) throw ValidationError("unknown variant '" + vname + "'");
  inst.variant = *variant;

  const json& alts = field(j, "alternatives", "instance");
  if (!alts.is_array()) throw ValidationError("instance.alternatives: expected an array");
  for (const json& a : alts) inst.alternatives.push_back(a.get<std::string>());
  std::sort(inst.alternatives.begin(), inst.alternatives.end());

  inst.districts = get_int(j, "districts", "instance");
  inst.target = get_string(j, "target", "instance");
  inst.budget = get_rational(field(j, "budget", "instance"), "instance.budget");

  const json& voters = field(j, "voters", "instance");
  if (!voters.is_array()) throw ValidationError("instance.voters: expected an array");
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const json& v = voters[i];
    std::string where = "voters[" + std::to_string(i) + "]";
    Voter voter;
    voter.id = get_string(v, "id", where);
    voter.home_district = get_int(v, "district", where);
    const json& ranking = field(v, "ranking", where);
    if (!ranking.is_array()) throw ValidationError(where + ".ranking: expected an array");
    for (const json& r : ranking) voter.ranking.push_back(r.get<std::string>());
    inst.voters.push_back(std::move(voter));
  }
  std::sort(inst.voters.begin(), inst.voters.end(),
            [](const Voter& a, const Voter& b) { return a.id < b.id; });

  if (auto it = j.find("winner_mode"); it != j.end()) {
    std::string mode = it->get<std::string>();
    if (mode == "unique")
      inst.winner_mode = WinnerMode::Unique;
    else if (mode == "co")
      inst.winner_mode = WinnerMode::Co;
    else
      throw ValidationError("unknown winner_mode '" + mode + "'");
  }

  if (auto it = j.find("graph"); it != j.end()) {
    if (!variant_has_graph(inst.variant))
      throw ValidationError("variant " + vname + " takes no voter graph");
    inst.graph.emplace();
    for (const Voter& v : inst.voters) inst.graph->vertices.insert(v.id);
    const json& edges = field(*it, "edges", "graph");
    for (const json& e : edges) {
      if (!e.is_array() || e.size() != 2)
        throw ValidationError("graph.edges: each edge is a pair of voter ids");
      inst.graph->add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } else if (variant_has_graph(inst.variant)) {
    throw ValidationError("variant " + vname + " requires a graph");
  }

  if (auto it = j.find("costs"); it != j.end()) {
    if (auto d = it->find("default_cost"); d != it->end())
      inst.costs.default_cost = get_cost(*d, "costs.default_cost");
    if (auto entries = it->find("entries"); entries != it->end()) {
      for (std::size_t i = 0; i < entries->size(); ++i) {
        const json& e = (*entries)[i];
        std::string where = "costs.entries[" + std::to_string(i) + "]";
        inst.costs.entries[{get_string(e, "voter", where), get_int(e, "district", where)}] =
            get_cost(field(e, "cost", where), where + ".cost");
      }
    }
    if (variant_unit_cost(inst.variant) && !inst.costs.all_unit())
      throw ValidationError("costs present for " + vname + " with non-unit values");
  }

  validate_instance(inst);
  return inst;
}

std::string serialize_plan(const ProblemInstance& inst, const MovePlan& plan) {
  json j;
  j["cost"] = cost_json(plan_cost(inst, plan));
  json moves = json::array();
  std::vector<Move> sorted = plan.moves;
  std::sort(sorted.begin(), sorted.end());
  for (const Move& mv : sorted) {
    json m;
    m["district"] = mv.district;
    m["voter"] = mv.voter;
    moves.push_back(m);
  }
  j["moves"] = moves;
  return dump(j);
}

MovePlan parse_plan(const ProblemInstance& inst, const std::string& text) {
  json j = parse_json(text);
  MovePlan plan;
  const json& moves = field(j, "moves", "plan");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const json& m = moves[i];
    std::string where = "moves[" + std::to_string(i) + "]";
    plan.moves.push_back({get_string(m, "voter", where), get_int(m, "district", where)});
  }
  std::sort(plan.moves.begin(), plan.moves.end());
  validate_plan(inst, plan);
  Cost declared = get_cost(field(j, "cost", "plan"), "plan.cost");
  if (!(declared == plan_cost(inst, plan)))
    throw ValidationError("plan.cost does not match the recomputed cost");
  return plan;
}

std::string serialize_x3c(const X3CInstance& x3c) {
  json j;
  j["kind"] = "x3c";
  json sets = json::array();
  for (const auto& s : x3c.sets) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sets.push_back(sorted);
  }
  j["sets"] = sets;
  j["universe_size"] = x3c.universe_size;
  return dump(j);
}

X3CInstance parse_x3c(const std::string& text) {
  json j = parse_json(text);
  if (field(j, "kind", "x3c").get<std::string>() != "x3c")
    throw ValidationError("expected an x3c document");
  X3CInstance x3c;
  x3c.universe_size = get_int(j, "universe_size", "x3c");
  for (const json& s : field(j, "sets", "x3c")) {
    std::vector<int> set;
    for (const json& e : s) set.push_back(e.get<int>());
    std::sort(set.begin(), set.end());
    x3c.sets.push_back(std::move(set));
  }
  validate_x3c(x3c);
  return x3c;
}

std::string serialize_2dcp(const TwoDCPInstance& dcp) {
  json j;
  j["kind"] = "2dcp";
  json edges = json::array();
  for (const auto& [a, b] : dcp.edges) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  std::vector<std::string> verts = dcp.vertices;
  std::sort(verts.begin(), verts.end());
  j["vertices"] = verts;
  j["z1"] = std::vector<std::string>(dcp.z1.begin(), dcp.z1.end());
  j["z2"] = std::vector<std::string>(dcp.z2.begin(), dcp.z2.end());
  return dump(j);
}

TwoDCPInstance parse_2dcp(const std::string& text) {
  json j = parse_json(text);
  if (field(j, "kind", "2dcp").get<std::string>() != "2dcp")
    throw ValidationError("expected a 2dcp document");
  TwoDCPInstance dcp;
  for (const json& v : field(j, "vertices", "2dcp")) dcp.vertices.push_back(v.get<std::string>());
  std::sort(dcp.vertices.begin(), dcp.vertices.end());
  for (const json& e : field(j, "edges", "2dcp")) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("2dcp.edges: each edge is a pair");
    std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
    if (b < a) std::swap(a, b);
    dcp.edges.insert({a, b});
  }
  for (const json& z : field(j, "z1", "2dcp")) dcp.z1.insert(z.get<std::string>());
  for (const json& z : field(j, "z2", "2dcp")) dcp.z2.insert(z.get<std::string>());
  validate_2dcp(dcp);
  return dcp;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
}

}  // namespace gerrysolve
