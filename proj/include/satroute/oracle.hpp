#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satroute/arborescence.hpp"
#include "satroute/flow_network.hpp"
#include "satroute/instance.hpp"
#include "satroute/problems.hpp"

namespace satroute {

/// Size ceilings for the brute-force oracles. Larger inputs are refused with
/// BudgetExceeded.
struct OracleBudget {
  int max_nodes = 64;
  int max_clients = 8;
  int max_snapshots = 6;
  std::int64_t max_subsets = 1 << 12;
  std::int64_t max_paths = 50'000;  // per unit
  std::int64_t max_steps = 200'000'000;
  double time_limit_seconds = 300.0;

  static OracleBudget from_env();
};

struct OracleResult {
  bool feasible = false;
  Rational value;            // optimum, or total utility for selection
  RoutingSolution witness;   // replayable, solver kind "oracle"
};

/// Exhaustive unicast download optimum under `objective`; the instance's flow
/// kind (UF or SF) decides the routing model.
OracleResult brute_force_unicast(const RoutingInstance& instance, Objective objective,
                                 const OracleBudget& budget = {});
/// Exhaustive multicast download optimum (one tree per model).
OracleResult brute_force_multicast(const RoutingInstance& instance, Objective objective,
                                   const OracleBudget& budget = {});
/// Exhaustive upload feasibility for all clients (no selection).
OracleResult brute_force_upload(const RoutingInstance& instance, const OracleBudget& budget = {});
/// Maximum-utility feasible client subset by enumerating all subsets.
OracleResult brute_force_cs(const RoutingInstance& instance, const OracleBudget& budget = {});

struct SatResult {
  bool satisfiable = false;
  int max_satisfied = 0;
  std::vector<bool> assignment;  // one achieving max_satisfied
};
SatResult sat_brute_force(const CnfFormula& formula, int max_variables = 20);

struct CoverResult {
  int size = 0;
  std::vector<int> cover;
};
CoverResult mvc_brute_force(const UndirectedGraph& graph, int max_vertices = 20);

/// Minimum cost of an arborescence rooted at `root` containing all
/// terminals, by enumerating every parent choice; nullopt if none exists.
std::optional<Rational> brute_force_steiner_arborescence(const Digraph& g, int root,
                                                         std::span<const int> terminals,
                                                         std::int64_t max_combinations = 5'000'000);

/// Minimum-cost integral flow meeting the supplies by enumerating every
/// integral assignment of the non-tree arcs of a spanning forest (tree arcs
/// are then forced). nullopt if no feasible flow exists.
std::optional<Rational> brute_force_min_cost_flow(const FlowNetwork& net,
                                                  std::int64_t max_combinations = 5'000'000);

}  // namespace satroute
