#include "satroute/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "satroute/errors.hpp"

namespace satroute {
namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string sub(const std::string& where, const char* key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<int>();
}

bool get_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) schema(where, "expected true or false");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

Rational get_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema(where, "expected a rational \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    schema(where, e.what());
  }
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

Json node_json(const SatNode& n) { return Json::array({n.satellite, n.snapshot}); }

SatNode get_node(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema(where, "expected [satellite, snapshot]");
  return SatNode::at(get_int(j[0], at(where, 0)), get_int(j[1], at(where, 1)));
}

template <class T>
T lookup(const std::string& text, std::initializer_list<std::pair<const char*, T>> table,
         const std::string& where) {
  std::string allowed;
  for (const auto& [name, value] : table) {
    if (text == name) return value;
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  schema(where, "unknown value '" + text + "' (expected one of " + allowed + ")");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::map<int, std::string> get_labels(const Json& j, const std::string& where) {
  std::map<int, std::string> out;
  if (!j.is_object()) schema(where, "expected an object of satellite -> name");
  for (const auto& [key, value] : j.items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema(where, "satellite key '" + key + "' is not an integer");
    }
    out[id] = get_string(value, where + "." + key);
  }
  return out;
}

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array()) {
    for (const auto& e : j) {
      if (has_object(e)) return true;
    }
  }
  return false;
}

void write_json(const Json& j, int indent, std::string& out) {
  const bool flat_object = j.is_object() && std::none_of(j.begin(), j.end(), has_object);
  if (!j.is_structured() || j.empty() || (j.is_array() && !has_object(j)) ||
      (flat_object && j.dump().size() <= 100)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += j.is_object() ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    write_json(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_object() ? "}" : "]");
}

}  // namespace

std::string format_json(const Json& j) {
  std::string out;
  write_json(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------- variant

Json variant_to_json(const Variant& v) {
  Json j;
  j["flow"] = v.flow == FlowKind::kUnsplittable ? "UF" : "SF";
  j["objective"] = v.objective == Objective::kWeightedSum ? "WS" : "MM";
  j["multicast"] = v.multicast;
  j["cs"] = v.client_selection;
  return j;
}

Variant variant_from_json(const Json& j) {
  const std::string w = "variant";
  Variant v;
  v.flow = lookup<FlowKind>(get_string(field(j, "flow", w), sub(w, "flow")),
                            {{"UF", FlowKind::kUnsplittable}, {"SF", FlowKind::kSplittable}},
                            sub(w, "flow"));
  if (j.contains("objective")) {
    v.objective = lookup<Objective>(
        get_string(j["objective"], sub(w, "objective")),
        {{"WS", Objective::kWeightedSum}, {"MM", Objective::kMinMax}}, sub(w, "objective"));
  }
  if (j.contains("multicast")) v.multicast = get_bool(j["multicast"], sub(w, "multicast"));
  if (j.contains("cs")) v.client_selection = get_bool(j["cs"], sub(w, "cs"));
  return v;
}

// --------------------------------------------------------------- instance

Json instance_to_json(const RoutingInstance& inst) {
  Json j;
  j["phase"] = to_string(inst.phase);
  j["satellites"] = inst.tvg.satellite_count();
  j["snapshots"] = inst.tvg.snapshot_count();
  j["variant"] = variant_to_json(inst.variant);
  j["cache_capacity"] = inst.cache.capacity ? Json(to_string(*inst.cache.capacity)) : Json("auto");
  if (!inst.cache.per_satellite.empty()) {
    Json per = Json::object();
    for (const auto& [sat, cap] : inst.cache.per_satellite) per[std::to_string(sat)] = to_string(cap);
    j["cache_per_satellite"] = per;
  }
  Json arcs = Json::array();
  for (const auto& a : inst.tvg.intra_arcs()) {
    arcs.push_back({{"from", node_json(a.from)}, {"to", node_json(a.to)}, {"cap", to_string(a.capacity)}});
  }
  j["arcs"] = std::move(arcs);
  Json models = Json::array();
  for (const auto& m : inst.models) {
    Json clients = Json::array();
    for (const auto& c : m.clients) {
      clients.push_back({{"id", c.id},
                         {"weight", to_string(c.weight)},
                         {"utility", to_string(c.utility)},
                         {"start", c.start}});
    }
    models.push_back({{"size", to_string(m.size)}, {"server", m.server}, {"clients", clients}});
  }
  j["models"] = std::move(models);
  if (!inst.labels.empty()) {
    Json labels = Json::object();
    for (const auto& [sat, name] : inst.labels) labels[std::to_string(sat)] = name;
    j["labels"] = std::move(labels);
  }
  return j;
}

RoutingInstance instance_from_json(const Json& j) {
  const std::string w = "instance";
  if (!j.is_object()) schema(w, "expected an object");
  const Phase phase = lookup<Phase>(get_string(field(j, "phase", w), "phase"),
                                    {{"download", Phase::kDownload}, {"upload", Phase::kUpload}},
                                    "phase");
  const int sats = get_int(field(j, "satellites", w), "satellites");
  const int snaps = get_int(field(j, "snapshots", w), "snapshots");
  if (sats < 1) throw InvariantViolation("satellites: must be at least 1");
  if (snaps < 1) throw InvariantViolation("snapshots: must be at least 1");

  const Variant variant = variant_from_json(field(j, "variant", w));

  std::vector<IntraArc> arcs;
  const auto& arcs_json = get_array(field(j, "arcs", w), "arcs");
  for (std::size_t i = 0; i < arcs_json.size(); ++i) {
    const std::string aw = at("arcs", i);
    const auto& a = arcs_json[i];
    const SatNode from = get_node(field(a, "from", aw), sub(aw, "from"));
    const SatNode to = get_node(field(a, "to", aw), sub(aw, "to"));
    const Rational cap = get_rational(field(a, "cap", aw), sub(aw, "cap"));
    for (const auto& [n, name] : {std::pair{from, "from"}, std::pair{to, "to"}}) {
      if (n.satellite < 1 || n.satellite > sats || n.snapshot < 1 || n.snapshot > snaps) {
        throw InvariantViolation(sub(aw, name) + ": node " + to_string(n) + " outside the graph");
      }
    }
    if (from.snapshot != to.snapshot) {
      throw InvariantViolation(aw + ": arcs join nodes of one snapshot (cache arcs are implicit)");
    }
    if (from.satellite == to.satellite) throw InvariantViolation(aw + ": self-loop");
    if (sgn(cap) < 0) throw InvariantViolation(sub(aw, "cap") + ": negative capacity");
    arcs.push_back({from, to, cap});
  }

  CacheSetting cache;
  if (j.contains("cache_capacity")) {
    const auto& c = j["cache_capacity"];
    if (!(c.is_string() && c.get<std::string>() == "auto")) {
      cache.capacity = get_rational(c, "cache_capacity");
      if (sgn(*cache.capacity) < 0) throw InvariantViolation("cache_capacity: negative");
    }
  }
  if (j.contains("cache_per_satellite")) {
    const auto& per = j["cache_per_satellite"];
    if (!per.is_object()) schema("cache_per_satellite", "expected an object");
    for (const auto& [key, value] : per.items()) {
      const std::string pw = "cache_per_satellite." + key;
      int id = 0;
      try {
        id = std::stoi(key);
      } catch (const std::exception&) {
        schema(pw, "satellite key is not an integer");
      }
      if (id < 1 || id > sats) throw InvariantViolation(pw + ": satellite out of range");
      cache.per_satellite[id] = get_rational(value, pw);
    }
  }

  std::vector<Model> models;
  const auto& models_json = get_array(field(j, "models", w), "models");
  for (std::size_t m = 0; m < models_json.size(); ++m) {
    const std::string mw = at("models", m);
    const auto& mj = models_json[m];
    Model model;
    model.size = get_rational(field(mj, "size", mw), sub(mw, "size"));
    model.server = get_int(field(mj, "server", mw), sub(mw, "server"));
    const auto& cj = get_array(field(mj, "clients", mw), sub(mw, "clients"));
    for (std::size_t c = 0; c < cj.size(); ++c) {
      const std::string cw = at(sub(mw, "clients"), c);
      Client client;
      if (cj[c].is_number_integer()) {
        client.id = cj[c].get<int>();
      } else {
        client.id = get_int(field(cj[c], "id", cw), sub(cw, "id"));
        if (cj[c].contains("weight")) client.weight = get_rational(cj[c]["weight"], sub(cw, "weight"));
        if (cj[c].contains("utility")) client.utility = get_rational(cj[c]["utility"], sub(cw, "utility"));
        if (cj[c].contains("start")) client.start = get_int(cj[c]["start"], sub(cw, "start"));
      }
      model.clients.push_back(std::move(client));
    }
    models.push_back(std::move(model));
  }

  std::map<int, std::string> labels;
  if (j.contains("labels")) labels = get_labels(j["labels"], "labels");

  return make_instance(phase, sats, snaps, std::move(arcs), std::move(models), variant,
                       std::move(cache), std::move(labels));
}

RoutingInstance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

std::string serialize_instance(const RoutingInstance& inst) { return format_json(instance_to_json(inst)); }

// --------------------------------------------------------------- solution

Json solution_to_json(const RoutingSolution& sol) {
  Json j;
  j["phase"] = to_string(sol.phase);
  j["variant"] = sol.variant;
  j["status"] = to_string(sol.status);
  j["solver"] = to_string(sol.solver);
  j["objective"] = to_string(sol.objective);
  Json completion = Json::object();
  for (const auto& [client, k] : completion_snapshots(sol)) completion[std::to_string(client)] = k;
  j["completion"] = std::move(completion);
  Json arrivals = Json::array();
  for (const auto& a : sol.arrivals) {
    arrivals.push_back({{"model", a.model}, {"client", a.client}, {"snapshot", a.snapshot}});
  }
  j["arrivals"] = std::move(arrivals);
  Json paths = Json::array();
  for (const auto& p : sol.paths) {
    Json nodes = Json::array();
    for (const auto& n : p.nodes) nodes.push_back(node_json(n));
    paths.push_back({{"model", p.model}, {"client", p.client}, {"amount", to_string(p.amount)},
                     {"nodes", std::move(nodes)}});
  }
  j["paths"] = std::move(paths);
  Json trees = Json::array();
  for (const auto& t : sol.trees) {
    Json arcs = Json::array();
    for (const auto& [u, v] : t.arcs) arcs.push_back({{"from", node_json(u)}, {"to", node_json(v)}});
    trees.push_back({{"model", t.model}, {"arcs", std::move(arcs)}});
  }
  j["trees"] = std::move(trees);
  Json selected = Json::array();
  for (const auto& s : sol.selected) selected.push_back({{"model", s.model}, {"client", s.client}});
  j["selected"] = std::move(selected);
  return j;
}

RoutingSolution solution_from_json(const Json& j) {
  const std::string w = "solution";
  RoutingSolution sol;
  sol.phase = lookup<Phase>(get_string(field(j, "phase", w), "phase"),
                            {{"download", Phase::kDownload}, {"upload", Phase::kUpload}}, "phase");
  sol.variant = get_string(field(j, "variant", w), "variant");
  sol.status = lookup<SolveStatus>(get_string(field(j, "status", w), "status"),
                                   {{"optimal", SolveStatus::kOptimal},
                                    {"feasible", SolveStatus::kFeasible},
                                    {"infeasible", SolveStatus::kInfeasible}},
                                   "status");
  if (j.contains("solver")) {
    sol.solver = lookup<SolverKind>(get_string(j["solver"], "solver"),
                                    {{"polynomial", SolverKind::kPolynomial},
                                     {"exact-search", SolverKind::kExactSearch},
                                     {"oracle", SolverKind::kOracle}},
                                    "solver");
  }
  if (j.contains("objective")) sol.objective = get_rational(j["objective"], "objective");
  if (j.contains("arrivals")) {
    const auto& arr = get_array(j["arrivals"], "arrivals");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string aw = at("arrivals", i);
      sol.arrivals.push_back({get_int(field(arr[i], "model", aw), sub(aw, "model")),
                              get_int(field(arr[i], "client", aw), sub(aw, "client")),
                              get_int(field(arr[i], "snapshot", aw), sub(aw, "snapshot"))});
    }
  }
  if (j.contains("paths")) {
    const auto& arr = get_array(j["paths"], "paths");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string pw = at("paths", i);
      PathAssignment p;
      p.model = get_int(field(arr[i], "model", pw), sub(pw, "model"));
      p.client = get_int(field(arr[i], "client", pw), sub(pw, "client"));
      p.amount = get_rational(field(arr[i], "amount", pw), sub(pw, "amount"));
      const auto& nodes = get_array(field(arr[i], "nodes", pw), sub(pw, "nodes"));
      for (std::size_t n = 0; n < nodes.size(); ++n) p.nodes.push_back(get_node(nodes[n], at(sub(pw, "nodes"), n)));
      sol.paths.push_back(std::move(p));
    }
  }
  if (j.contains("trees")) {
    const auto& arr = get_array(j["trees"], "trees");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string tw = at("trees", i);
      TreeAssignment t;
      t.model = get_int(field(arr[i], "model", tw), sub(tw, "model"));
      const auto& arcs = get_array(field(arr[i], "arcs", tw), sub(tw, "arcs"));
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        const std::string aw = at(sub(tw, "arcs"), a);
        t.arcs.push_back({get_node(field(arcs[a], "from", aw), sub(aw, "from")),
                          get_node(field(arcs[a], "to", aw), sub(aw, "to"))});
      }
      sol.trees.push_back(std::move(t));
    }
  }
  if (j.contains("selected")) {
    const auto& arr = get_array(j["selected"], "selected");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string sw = at("selected", i);
      sol.selected.push_back({get_int(field(arr[i], "model", sw), sub(sw, "model")),
                              get_int(field(arr[i], "client", sw), sub(sw, "client"))});
    }
  }
  return sol;
}

RoutingSolution parse_solution(std::string_view text) { return solution_from_json(parse_json(text)); }

std::string serialize_solution(const RoutingSolution& sol) { return format_json(solution_to_json(sol)); }

// -------------------------------------------------------------- artifacts

namespace {

const char* rule_name(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::kFeasible: return "feasible";
    case DecisionRule::kObjectiveEquals: return "objective_equals";
    case DecisionRule::kObjectiveAtLeast: return "objective_at_least";
  }
  return "?";
}

}  // namespace

Json artifact_to_json(const ReductionArtifact& art) {
  Json j;
  j["family"] = to_string(art.family);
  j["variant"] = variant_name(art.instance);
  j["decision"] = {{"rule", rule_name(art.rule)},
                   {"threshold", to_string(art.threshold)},
                   {"meaning", art.decision}};
  j["notes"] = art.notes;
  j["instance"] = instance_to_json(art.instance);
  return j;
}

Json report_to_json(const EquivalenceReport& r, bool include_timings) {
  Json j;
  j["family"] = r.family;
  j["seed"] = r.seed;
  j["parameters"] = r.parameters;
  j["cases"] = r.cases;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  j["unresolved"] = r.unresolved;
  std::ostringstream rate;
  rate.precision(4);
  rate << std::fixed << r.agreement_rate();
  j["agreement_rate"] = rate.str();
  Json details = Json::array();
  for (const auto& c : r.details) {
    Json d;
    d["source"] = c.source;
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    d["agree"] = c.agree;
    if (c.unresolved) d["unresolved"] = true;
    if (!c.witness.empty()) d["witness"] = c.witness;
    if (include_timings) d["seconds"] = c.seconds;
    details.push_back(std::move(d));
  }
  j["details"] = std::move(details);
  return j;
}

// --------------------------------------------------------- source formats

namespace {

struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(std::string_view text) : in(std::string(text)) {}

  // Next non-empty, non-comment line.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError("line " + std::to_string(line_no) + ": " + what);
  }
};

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text) {
  LineReader r(text);
  std::string line;
  int vars = -1, clauses = -1;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string p, kind;
    if (!(ls >> p >> kind >> vars >> clauses) || p != "p" || kind != "cnf") {
      r.fail("expected 'p cnf <variables> <clauses>'");
    }
    break;
  }
  if (vars < 0) throw SchemaError("missing 'p cnf' header");
  CnfFormula f;
  f.variables = vars;
  std::vector<Literal> current;
  while (r.next(line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] == '%') break;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long v = 0;
      try {
        std::size_t used = 0;
        v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        r.fail("bad literal '" + tok + "'");
      }
      if (v == 0) {
        if (current.empty()) r.fail("empty clause");
        if (current.size() > 3) r.fail("clause with more than 3 literals");
        Clause c{};
        for (std::size_t i = 0; i < 3; ++i) c[i] = current[std::min(i, current.size() - 1)];
        f.clauses.push_back(c);
        current.clear();
        continue;
      }
      const int var = static_cast<int>(std::labs(v));
      if (var > vars) r.fail("literal " + tok + " exceeds declared variable count");
      current.push_back({var, v < 0});
    }
  }
  if (!current.empty()) throw SchemaError("last clause is not terminated by 0");
  if (static_cast<int>(f.clauses.size()) != clauses) {
    throw SchemaError("header declares " + std::to_string(clauses) + " clauses, found " +
                      std::to_string(f.clauses.size()));
  }
  return f;
}

UndirectedGraph parse_dimacs_graph(std::string_view text) {
  LineReader r(text);
  std::string line;
  UndirectedGraph g;
  int declared = -1;
  bool header = false;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      if (header || !(ls >> kind >> g.vertices >> declared) || (kind != "edge" && kind != "col")) {
        r.fail("expected a single 'p edge <vertices> <edges>'");
      }
      header = true;
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!header) r.fail("edge before 'p edge' header");
      if (!(ls >> u >> v)) r.fail("expected 'e <u> <v>'");
      g.edges.push_back({u, v});
    } else {
      r.fail("unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw SchemaError("missing 'p edge' header");
  if (static_cast<int>(g.edges.size()) != declared) {
    throw SchemaError("header declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(g.edges.size()));
  }
  try {
    g.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  return g;
}

DisjointPathsProblem parse_disjoint_paths(std::string_view text) {
  LineReader r(text);
  std::string line;
  DisjointPathsProblem p;
  int declared = -1;
  bool header = false, terminals = false;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      if (header || !(ls >> kind >> p.graph.nodes >> declared) || kind != "2edp") {
        r.fail("expected a single 'p 2edp <nodes> <arcs>'");
      }
      header = true;
    } else if (tag == "a") {
      int u = 0, v = 0;
      if (!header) r.fail("arc before 'p 2edp' header");
      if (!(ls >> u >> v)) r.fail("expected 'a <u> <v>'");
      p.graph.arcs.push_back({u, v});
    } else if (tag == "t") {
      if (terminals || !(ls >> p.first.first >> p.first.second >> p.second.first >> p.second.second)) {
        r.fail("expected a single 't <o1> <d1> <o2> <d2>'");
      }
      terminals = true;
    } else {
      r.fail("unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw SchemaError("missing 'p 2edp' header");
  if (!terminals) throw SchemaError("missing 't' terminal line");
  if (static_cast<int>(p.graph.arcs.size()) != declared) {
    throw SchemaError("header declares " + std::to_string(declared) + " arcs, found " +
                      std::to_string(p.graph.arcs.size()));
  }
  try {
    p.graph.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  return p;
}

ReductionArtifact reduce_text(Family family, std::string_view text, const ReduceOptions& options) {
  switch (family) {
    case Family::k3SatTo1SfWs: {
      const auto f = parse_dimacs_cnf(text);
      return reduce_3sat_to_1sfws(f, hub_capacity(options.hub, f.clause_count()));
    }
    case Family::k3SatTo2UfMm: return reduce_3sat_to_2ufmm(parse_dimacs_cnf(text));
    case Family::k3SatTo2UfNcs: return reduce_3sat_to_2ufncs(parse_dimacs_cnf(text));
    case Family::kMax3SatTo2UfCs: return reduce_max3sat_to_2ufcs(parse_dimacs_cnf(text), options.target);
    case Family::kMvcTo1SfCs:
      if (!options.cover_size) throw InvalidArgument("mvc-1sfcs needs a cover size");
      return reduce_mvc_to_1sfcs(parse_dimacs_graph(text), *options.cover_size);
    case Family::k2EdpToMul2Mm: {
      const auto p = parse_disjoint_paths(text);
      return reduce_2edp_to_mul2mm(p.graph, p.first, p.second);
    }
  }
  throw InvalidArgument("unknown reduction family");
}

namespace {

int parse_id(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgument("bad " + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Model parse_model_spec(std::string_view spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string_view::npos ? a : spec.find(':', a + 1);
  if (b == std::string_view::npos) {
    throw InvalidArgument("model spec '" + std::string(spec) + "' is not size:server:clients");
  }
  Model m;
  m.size = parse_rational(spec.substr(0, a));
  m.server = parse_id(spec.substr(a + 1, b - a - 1), "server in model spec");
  std::string_view rest = spec.substr(b + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    Client c;
    const auto at = item.find('@');
    c.id = parse_id(item.substr(0, at), "client in model spec");
    if (at != std::string_view::npos) c.weight = parse_rational(item.substr(at + 1));
    m.clients.push_back(c);
  }
  return m;
}

RoutingInstance instance_on(const TimeVaryingGraph& tvg, std::string_view variant,
                            std::vector<Model> models, CacheSetting cache) {
  if (models.empty()) {
    Model m{1, 1, {}};
    for (int c = 2; c <= tvg.satellite_count(); ++c) m.clients.push_back(Client{c});
    models.push_back(std::move(m));
  }
  const auto parsed = parse_variant_name(variant);
  if (parsed.model_count != static_cast<int>(models.size())) {
    throw InvalidArgument("variant " + std::string(variant) + " needs " +
                          std::to_string(parsed.model_count) + " model(s), got " +
                          std::to_string(models.size()));
  }
  return make_instance(parsed.phase, tvg.satellite_count(), tvg.snapshot_count(),
                       tvg.intra_arc_list(), std::move(models), parsed.variant, std::move(cache));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace satroute
