#include "satroute/upload.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <map>

#include "satroute/errors.hpp"
#include "solver_common.hpp"

namespace satroute {

using detail::blank_solution;
using detail::require_shape;

namespace {

struct Unit {
  int model;
  int client;
  Rational size;
  int start;
  int server;
  Rational utility;
};

std::vector<Unit> all_units(const RoutingInstance& inst) {
  std::vector<Unit> out;
  for (int m = 0; m < inst.model_count(); ++m) {
    const auto& model = inst.models[m];
    for (const auto& c : model.clients) {
      out.push_back({m, c.id, model.size, c.start, model.server, c.utility});
    }
  }
  return out;
}

Variant upload_variant(FlowKind flow, bool cs) {
  Variant v;
  v.flow = flow;
  v.client_selection = cs;
  return v;
}

SatNode source_of(const Unit& u) { return SatNode::at(u.client, u.start); }

// Units that already sit on the server node at the deadline.
bool trivial(const Unit& u, int K) { return u.client == u.server && u.start == K; }

// Fractional collection of `units`; nullopt when infeasible.
std::optional<std::vector<PathAssignment>> splittable_upload(const RoutingInstance& inst,
                                                             const std::vector<Unit>& units,
                                                             LpBackend backend) {
  const auto& g = inst.tvg;
  const int K = g.snapshot_count();
  std::vector<PathAssignment> out;
  std::vector<Unit> routed;
  for (const auto& u : units) {
    if (trivial(u, K)) out.push_back({u.model, u.client, u.size, {source_of(u)}});
    else routed.push_back(u);
  }
  if (routed.empty()) return out;

  const FlowNetwork net = as_flow_network(g);
  const bool common = !inst.separate_servers();
  std::vector<Commodity> commodities;
  std::vector<int> commodity_model;
  for (int m = 0; m < inst.model_count(); ++m) {
    if (common && m > 0) break;
    Commodity c;
    std::map<int, Rational> supply;
    Rational total = 0;
    for (const auto& u : routed) {
      if (!common && u.model != m) continue;
      supply[g.index(source_of(u))] += u.size;
      total += u.size;
    }
    if (supply.empty()) continue;
    for (const auto& [n, s] : supply) c.sources.emplace_back(n, s);
    c.sinks.emplace_back(g.index(SatNode::at(inst.models[m].server, K)), total);
    commodities.push_back(std::move(c));
    commodity_model.push_back(common ? -1 : m);
  }
  const auto result = fractional_feasibility(net, commodities, backend);
  if (!result.feasible) return std::nullopt;

  std::map<std::pair<int, int>, Rational> remaining;
  for (const auto& u : routed) remaining[{u.model, u.client}] = u.size;
  for (std::size_t j = 0; j < commodities.size(); ++j) {
    std::vector<Rational> excess(static_cast<std::size_t>(net.node_count()));
    for (const auto& [n, s] : commodities[j].sources) excess[n] += s;
    for (const auto& [n, d] : commodities[j].sinks) excess[n] -= d;
    const auto flows = decompose_flow(net, result.flow->commodity_flow[j], std::move(excess));
    for (const auto& np : detail::node_paths(net, flows)) {
      auto nodes = detail::to_sat_nodes(g, np.nodes, std::nullopt);
      Rational left = np.amount;
      for (const auto& u : routed) {
        if (sgn(left) <= 0) break;
        if (commodity_model[j] >= 0 && u.model != commodity_model[j]) continue;
        if (source_of(u) != nodes.front()) continue;
        auto& rem = remaining[{u.model, u.client}];
        if (sgn(rem) <= 0) continue;
        const Rational take = std::min(left, rem);
        rem -= take;
        left -= take;
        out.push_back({u.model, u.client, take, nodes});
      }
    }
  }
  detail::normalize_paths(out);
  return out;
}

// Depth-first unsplittable routing of every unit to its server.
class UnsplittableRouter {
 public:
  UnsplittableRouter(const RoutingInstance& inst, Budget& budget)
      : g_(inst.tvg), budget_(budget) {
    for (const auto& a : g_.arcs()) residual_.push_back(a.capacity);
  }

  std::optional<std::vector<PathAssignment>> route(std::vector<Unit> units) {
    std::stable_sort(units.begin(), units.end(),
                     [](const Unit& a, const Unit& b) { return a.size > b.size; });
    units_ = std::move(units);
    paths_.assign(units_.size(), {});
    if (!dfs(0)) return std::nullopt;
    std::vector<PathAssignment> out;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      out.push_back({units_[i].model, units_[i].client, units_[i].size,
                     detail::to_sat_nodes(g_, paths_[i], std::nullopt)});
    }
    detail::normalize_paths(out);
    return out;
  }

 private:
  bool can_reach(const Unit& u) const {
    const auto tree = detail::bfs_tree(g_, g_.index(source_of(u)),
                                       [&](std::size_t a) { return residual_[a] >= u.size; });
    for (int k = 1; k <= g_.snapshot_count(); ++k) {
      if (tree.reached[g_.index(SatNode::at(u.server, k))]) return true;
    }
    return false;
  }

  bool dfs(std::size_t depth) {
    budget_.step();
    if (depth == units_.size()) return true;
    for (std::size_t i = depth; i < units_.size(); ++i) {
      if (!can_reach(units_[i])) return false;
    }
    std::vector<bool> on_path(static_cast<std::size_t>(g_.node_count()), false);
    std::vector<int> nodes{g_.index(source_of(units_[depth]))};
    std::vector<std::size_t> arcs;
    on_path[nodes[0]] = true;
    return extend(depth, nodes, arcs, on_path);
  }

  bool extend(std::size_t depth, std::vector<int>& nodes, std::vector<std::size_t>& arcs,
              std::vector<bool>& on_path) {
    budget_.step();
    const Unit& u = units_[depth];
    if (g_.node(nodes.back()).satellite == u.server) {
      for (auto a : arcs) residual_[a] -= u.size;
      paths_[depth] = nodes;
      if (dfs(depth + 1)) return true;
      for (auto a : arcs) residual_[a] += u.size;
      return false;
    }
    for (auto a : g_.out_arcs(nodes.back())) {
      if (residual_[a] < u.size) continue;
      const int v = g_.index(g_.arcs()[a].to);
      if (on_path[v]) continue;
      on_path[v] = true;
      nodes.push_back(v);
      arcs.push_back(a);
      const bool done = extend(depth, nodes, arcs, on_path);
      arcs.pop_back();
      nodes.pop_back();
      on_path[v] = false;
      if (done) return true;
    }
    return false;
  }

  const TimeVaryingGraph& g_;
  Budget& budget_;
  std::vector<Rational> residual_;
  std::vector<Unit> units_;
  std::vector<std::vector<int>> paths_;
};

std::optional<std::vector<PathAssignment>> collect(const RoutingInstance& inst,
                                                   const Variant& variant,
                                                   const std::vector<Unit>& units, Budget& budget) {
  if (variant.flow == FlowKind::kSplittable) return splittable_upload(inst, units, LpBackend::kAuto);
  return UnsplittableRouter(inst, budget).route(units);
}

void set_selection(RoutingSolution& sol, const std::vector<Unit>& chosen) {
  sol.selected.clear();
  sol.objective = 0;
  for (const auto& u : chosen) {
    sol.selected.push_back({u.model, u.client});
    sol.objective += u.utility;
  }
  std::sort(sol.selected.begin(), sol.selected.end());
}

RoutingSolution splittable_ncs(const RoutingInstance& inst, LpBackend backend, int models) {
  const std::string name = models == 1 ? "1-SF-NCS" : "2-SF-NCS";
  require_shape(inst, Phase::kUpload, models == 1 ? 1u : 2u, name);
  auto sol = blank_solution(inst, upload_variant(FlowKind::kSplittable, false),
                            SolverKind::kPolynomial);
  auto paths = splittable_upload(inst, all_units(inst), backend);
  if (!paths) return sol;
  sol.paths = std::move(*paths);
  sol.status = SolveStatus::kFeasible;
  return sol;
}

}  // namespace

RoutingSolution solve_1sfncs(const RoutingInstance& inst, LpBackend backend) {
  return splittable_ncs(inst, backend, 1);
}

RoutingSolution solve_2sfncs(const RoutingInstance& inst, LpBackend backend) {
  return splittable_ncs(inst, backend, 2);
}

RoutingSolution solve_1ufncs(const RoutingInstance& inst) {
  require_shape(inst, Phase::kUpload, 1u, "1-UF-NCS");
  auto sol = blank_solution(inst, upload_variant(FlowKind::kUnsplittable, false),
                            SolverKind::kPolynomial);
  const auto& g = inst.tvg;
  const int K = g.snapshot_count();
  const auto& model = inst.models[0];
  FlowNetwork net = normalize_capacities(g, model.size);
  const int sink = g.index(SatNode::at(model.server, K));
  std::vector<PathAssignment> paths;
  long routed = 0;
  for (const auto& u : all_units(inst)) {
    if (trivial(u, K)) {
      paths.push_back({0, u.client, u.size, {source_of(u)}});
      continue;
    }
    const int src = g.index(source_of(u));
    net.add_arc(src, sink, 1, 1);
    net.set_supply(src, 1);
    ++routed;
  }
  net.add_supply(sink, -routed);
  const auto flow = min_cost_flow(net);
  if (!flow || sgn(flow->total_cost) != 0) return sol;
  const auto flows = decompose_flow(net, detail::to_rational(flow->flow), net.supplies());
  for (const auto& np : detail::node_paths(net, flows)) {
    auto nodes = detail::to_sat_nodes(g, np.nodes, std::nullopt);
    paths.push_back({0, nodes.front().satellite, model.size, std::move(nodes)});
  }
  detail::normalize_paths(paths);
  sol.paths = std::move(paths);
  sol.status = SolveStatus::kFeasible;
  return sol;
}

RoutingSolution solve_1ufcs(const RoutingInstance& inst) {
  require_shape(inst, Phase::kUpload, 1u, "1-UF-CS");
  auto sol = blank_solution(inst, upload_variant(FlowKind::kUnsplittable, true),
                            SolverKind::kPolynomial);
  const auto& g = inst.tvg;
  const int K = g.snapshot_count();
  const auto& model = inst.models[0];
  const auto units = all_units(inst);
  FlowNetwork net = normalize_capacities(g, model.size);
  const int sink = g.index(SatNode::at(model.server, K));
  const int a = net.add_node();
  const long n = static_cast<long>(units.size());
  // eps * n stays below the smallest utility gap, so among optimal selections
  // the largest one wins
  Integer den = 1;
  for (const auto& u : units) den = lcm(den, Integer(u.utility.get_den()));
  const Rational eps = Rational(1) / (Rational(den) * (n + 1));
  std::vector<std::size_t> selector;
  for (const auto& u : units) {
    selector.push_back(net.add_arc(a, g.index(source_of(u)), 1, -u.utility - eps));
  }
  net.add_arc(a, sink, n, 0);
  net.set_supply(a, n);
  net.add_supply(sink, -n);
  const auto flow = min_cost_flow(net);
  if (!flow) throw InvariantViolation("1-UF-CS network has no feasible flow");

  std::vector<Unit> chosen;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (flow->flow[selector[i]] == 1) chosen.push_back(units[i]);
  }
  set_selection(sol, chosen);
  if (sol.objective + eps * static_cast<long>(chosen.size()) != -flow->total_cost) {
    throw InvariantViolation("1-UF-CS selection disagrees with the flow cost");
  }
  const auto flows = decompose_flow(net, detail::to_rational(flow->flow), net.supplies());
  for (const auto& p : flows) {
    // paths through the overflow arc carry no client
    const auto it = std::find(selector.begin(), selector.end(), p.arcs.front());
    if (it == selector.end()) continue;
    const Unit& u = units[static_cast<std::size_t>(it - selector.begin())];
    std::vector<int> nodes;
    for (auto arc : p.arcs) nodes.push_back(net.arc(arc).to);
    sol.paths.push_back({0, u.client, model.size, detail::to_sat_nodes(g, nodes, std::nullopt)});
  }
  detail::normalize_paths(sol.paths);
  sol.status = SolveStatus::kOptimal;
  return sol;
}

RoutingSolution solve_exact_upload(const Variant& variant, const RoutingInstance& inst,
                                   const SearchLimits& limits) {
  require_shape(inst, Phase::kUpload, 3u, "exact upload search");
  if (variant.multicast) throw UnsupportedVariant("multicast is a download-only variant");
  Budget budget(limits);
  budget.require(inst.tvg.node_count() <= limits.max_graph_nodes,
                 "graph has " + std::to_string(inst.tvg.node_count()) + " nodes, limit " +
                     std::to_string(limits.max_graph_nodes));
  const auto units = all_units(inst);
  budget.require(static_cast<int>(units.size()) <= limits.max_units,
                 std::to_string(units.size()) + " units exceed the limit");
  auto sol = blank_solution(inst, variant, SolverKind::kExactSearch);

  if (!variant.client_selection) {
    auto paths = collect(inst, variant, units, budget);
    if (!paths) return sol;
    sol.paths = std::move(*paths);
    sol.status = SolveStatus::kFeasible;
    return sol;
  }

  // Units that cannot be collected even alone never appear in a feasible set.
  std::vector<Unit> viable;
  for (const auto& u : units) {
    if (collect(inst, variant, {u}, budget)) viable.push_back(u);
  }
  const std::size_t n = viable.size();
  budget.require(static_cast<std::int64_t>(1) << n <= limits.max_vectors,
                 std::to_string(n) + " selectable clients exceed the subset limit");
  // best utility first, larger selections break ties
  std::vector<std::tuple<Rational, int, std::uint64_t>> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) u += viable[i].utility;
    }
    subsets.emplace_back(-u, -std::popcount(mask), mask);
  }
  std::stable_sort(subsets.begin(), subsets.end());
  for (const auto& [neg, count, mask] : subsets) {
    budget.step();
    std::vector<Unit> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) chosen.push_back(viable[i]);
    }
    auto paths = collect(inst, variant, chosen, budget);
    if (!paths) continue;
    set_selection(sol, chosen);
    sol.paths = std::move(*paths);
    sol.status = SolveStatus::kOptimal;
    return sol;
  }
  throw InvariantViolation("empty selection reported infeasible");
}

}  // namespace satroute
