#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "satroute/flow_network.hpp"
#include "satroute/rational.hpp"

namespace satroute {

struct IntegralFlow {
  std::vector<Integer> flow;  // per arc, in arc order
  Rational total_cost;
};

/// Minimum-cost feasible flow meeting all supplies/demands. Capacities and
/// supplies must be integers; arc costs may be negative. Returns nullopt when
/// the demands cannot be met. Throws NegativeCycle if the network contains a
/// negative-cost cycle of positive capacity, InvalidArgument if unbalanced or
/// non-integral.
std::optional<IntegralFlow> min_cost_flow(const FlowNetwork& net);

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> flow;
};

/// Maximum source->sink flow (Dinic). Supplies of `net` are ignored.
MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink);

struct Commodity {
  std::vector<std::pair<int, Rational>> sources;  // node, supply
  std::vector<std::pair<int, Rational>> sinks;    // node, demand
};

struct FractionalFlow {
  std::vector<std::vector<Rational>> commodity_flow;  // [commodity][arc]
  std::vector<Rational> slack;                        // rho per arc
};

struct FeasibilityResult {
  bool feasible = false;
  /// Optimal sum of slack; nullopt when no amount of slack helps (some sink is
  /// not connected to its sources at all).
  std::optional<Rational> min_total_slack;
  std::optional<FractionalFlow> flow;
};

enum class LpBackend {
  kAuto,     // network route for one commodity; several try sequential routing, then simplex
  kNetwork,  // single commodity only
  kSimplex,
};

/// Minimises sum(rho) subject to per-commodity conservation and
/// sum_j f_j(a) <= capacity(a) + rho(a). Supplies stored in `net` are ignored.
FeasibilityResult fractional_feasibility(const FlowNetwork& net,
                                         std::span<const Commodity> commodities,
                                         LpBackend backend = LpBackend::kAuto);

/// True iff 0 <= flow <= capacity on every arc and inflow - outflow equals
/// -supply at every node.
bool check_flow_conservation(const FlowNetwork& net, std::span<const Rational> flow);
bool check_flow_conservation(const FlowNetwork& net, std::span<const Integer> flow);

/// A path in a flow network carrying `amount`, as arc indices.
struct FlowPath {
  std::vector<std::size_t> arcs;
  Rational amount;
};

/// Decomposes a flow into source->sink paths. Sources are nodes with positive
/// `excess`, sinks nodes with negative excess. Cycles carrying flow are dropped.
/// Arcs are explored in index order, so the result is deterministic.
std::vector<FlowPath> decompose_flow(const FlowNetwork& net, std::vector<Rational> flow,
                                     std::vector<Rational> excess);

}  // namespace satroute
