#pragma once

// Helpers shared by the download/upload solvers and the oracles.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satroute/flow.hpp"
#include "satroute/instance.hpp"

namespace satroute::detail {

RoutingSolution blank_solution(const RoutingInstance& inst, const Variant& variant,
                               SolverKind kind);

/// Throws UnsupportedVariant unless the instance has the given phase and a
/// model count accepted by `counts` (bit 1 = one model, bit 2 = two).
void require_shape(const RoutingInstance& inst, Phase phase, unsigned counts,
                   const std::string& solver);

std::vector<Rational> to_rational(const std::vector<Integer>& flow);

/// Node-index sequence of a decomposed path, plus its last arc.
struct NodePath {
  std::vector<int> nodes;
  std::size_t last_arc = 0;
  Rational amount;
};
std::vector<NodePath> node_paths(const FlowNetwork& net, const std::vector<FlowPath>& paths);

/// Maps TVG node indices to SatNodes; stops after the first node on
/// `stop_satellite` when given.
std::vector<SatNode> to_sat_nodes(const TimeVaryingGraph& tvg, const std::vector<int>& nodes,
                                  std::optional<int> stop_satellite);

/// Sorts by (model, client, nodes) and merges identical node sequences.
void normalize_paths(std::vector<PathAssignment>& paths);

/// Per (model, client): snapshot of the latest path end.
std::vector<ClientArrival> arrivals_from_paths(const std::vector<PathAssignment>& paths);

/// Breadth-first search tree over arcs accepted by `usable` (arc order
/// exploration, so deterministic).
struct SearchTree {
  std::vector<int> parent_arc;  // -1 for the source and unreached nodes
  std::vector<bool> reached;
};
SearchTree bfs_tree(const TimeVaryingGraph& tvg, int source,
                    const std::function<bool(std::size_t)>& usable);

/// Union of the tree paths from the source to `targets`, as TVG arc pairs in
/// discovery order.
std::vector<std::pair<SatNode, SatNode>> tree_arcs_to(const TimeVaryingGraph& tvg,
                                                      const SearchTree& tree,
                                                      const std::vector<int>& targets);

/// Distinct client ids over all models, in first-appearance order.
std::vector<int> client_ids(const RoutingInstance& inst);

/// Total amount client `id` must receive or send over all models.
Rational client_demand(const RoutingInstance& inst, int id);

}  // namespace satroute::detail
