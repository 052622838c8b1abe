#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "satroute/instance.hpp"
#include "satroute/problems.hpp"
#include "satroute/reductions.hpp"

namespace satroute {

using Json = nlohmann::ordered_json;

/// Indented JSON with arrays of plain values kept on one line.
std::string format_json(const Json& j);

// Instances and solutions. Rationals travel as "p/q" strings (plain JSON
// integers are accepted on input); nodes as [satellite, snapshot].

/// Throws SchemaError (malformed text, missing or mistyped field) or
/// InvariantViolation (well-formed but inconsistent instance).
RoutingInstance parse_instance(std::string_view text);
RoutingInstance instance_from_json(const Json& j);
Json instance_to_json(const RoutingInstance& instance);
std::string serialize_instance(const RoutingInstance& instance);

RoutingSolution parse_solution(std::string_view text);
RoutingSolution solution_from_json(const Json& j);
Json solution_to_json(const RoutingSolution& solution);
std::string serialize_solution(const RoutingSolution& solution);

Json variant_to_json(const Variant& variant);
Variant variant_from_json(const Json& j);

Json artifact_to_json(const ReductionArtifact& artifact);
/// Timings are left out unless asked for, so the report is reproducible.
Json report_to_json(const EquivalenceReport& report, bool include_timings = false);

// Source problems for the reduction gadgets.

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0). Clauses
/// with fewer than 3 literals are padded by repeating the last one.
CnfFormula parse_dimacs_cnf(std::string_view text);
/// DIMACS edge format ("p edge <V> <E>", "e <u> <v>").
UndirectedGraph parse_dimacs_graph(std::string_view text);

struct DisjointPathsProblem {
  DirectedGraph graph;
  std::pair<int, int> first;
  std::pair<int, int> second;
};
/// "p 2edp <nodes> <arcs>", "a <u> <v>" per arc, "t <o1> <d1> <o2> <d2>".
DisjointPathsProblem parse_disjoint_paths(std::string_view text);

struct ReduceOptions {
  std::optional<int> cover_size;  // mvc-1sfcs, required
  std::optional<int> target;      // max3sat-2ufcs
  HubSetting hub = HubSetting::kSpare;
};
/// Parses `text` in the source format of `family` and builds the gadget.
ReductionArtifact reduce_text(Family family, std::string_view text, const ReduceOptions& options = {});

/// "size:server:c1,c2@w,...", weights optional.
Model parse_model_spec(std::string_view spec);

/// Instance over the intra arcs of `tvg` under the named variant. Without
/// models, satellite 1 serves one unit-size model to every other satellite.
RoutingInstance instance_on(const TimeVaryingGraph& tvg, std::string_view variant,
                            std::vector<Model> models, CacheSetting cache = {});

std::string read_text_file(const std::string& path);

}  // namespace satroute
