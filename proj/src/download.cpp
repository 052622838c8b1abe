#include "satroute/download.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "satroute/arborescence.hpp"
#include "satroute/errors.hpp"
#include "solver_common.hpp"

namespace satroute {

using detail::blank_solution;
using detail::require_shape;

namespace {

Variant download_variant(FlowKind flow, Objective objective, bool multicast = false) {
  Variant v;
  v.flow = flow;
  v.objective = objective;
  v.multicast = multicast;
  return v;
}

void finish(const RoutingInstance& inst, RoutingSolution& sol, Objective objective) {
  detail::normalize_paths(sol.paths);
  sol.arrivals = detail::arrivals_from_paths(sol.paths);
  sol.objective = download_objective(inst, objective, sol.arrivals);
  sol.status = SolveStatus::kOptimal;
}

// Fractional routing in which client c is fully served by snapshot
// deadline[c]. A client in both models of a common server is one sink.
std::vector<PathAssignment> splittable_routes(const RoutingInstance& inst,
                                              const TimeVaryingGraph& g,
                                              const std::map<int, int>& deadline,
                                              LpBackend backend, bool& feasible) {
  feasible = false;
  const auto ids = detail::client_ids(inst);
  if (ids.empty()) {
    feasible = true;
    return {};
  }
  FlowNetwork net = as_flow_network(g);
  std::map<int, int> aux;
  for (int id : ids) {
    const int a = net.add_node();
    aux[id] = a;
    const Rational demand = detail::client_demand(inst, id);
    for (int k = 1; k <= deadline.at(id); ++k) net.add_arc(g.index(SatNode::at(id, k)), a, demand);
  }

  const bool common = !inst.separate_servers();
  std::vector<Commodity> commodities;
  std::vector<int> commodity_model;
  if (common) {
    Commodity c;
    c.sources.emplace_back(g.index(SatNode::at(inst.models[0].server, 1)),
                           total_demand(inst.models));
    for (int id : ids) c.sinks.emplace_back(aux[id], detail::client_demand(inst, id));
    commodities.push_back(std::move(c));
    commodity_model.push_back(-1);
  } else {
    for (int m = 0; m < inst.model_count(); ++m) {
      const auto& model = inst.models[m];
      if (model.clients.empty()) continue;
      Commodity c;
      c.sources.emplace_back(g.index(SatNode::at(model.server, 1)),
                             model.size * static_cast<long>(model.clients.size()));
      for (const auto& cl : model.clients) c.sinks.emplace_back(aux[cl.id], model.size);
      commodities.push_back(std::move(c));
      commodity_model.push_back(m);
    }
  }

  const auto result = fractional_feasibility(net, commodities, backend);
  if (!result.feasible) return {};
  feasible = true;

  std::map<std::pair<int, int>, Rational> remaining;
  for (int m = 0; m < inst.model_count(); ++m) {
    for (const auto& cl : inst.models[m].clients) remaining[{m, cl.id}] = inst.models[m].size;
  }
  std::vector<PathAssignment> out;
  for (std::size_t j = 0; j < commodities.size(); ++j) {
    std::vector<Rational> excess(static_cast<std::size_t>(net.node_count()));
    for (const auto& [n, s] : commodities[j].sources) excess[n] += s;
    for (const auto& [n, d] : commodities[j].sinks) excess[n] -= d;
    const auto flows = decompose_flow(net, result.flow->commodity_flow[j], std::move(excess));
    for (const auto& np : detail::node_paths(net, flows)) {
      const int id = ids[static_cast<std::size_t>(np.nodes.back() - g.node_count())];
      auto nodes = detail::to_sat_nodes(g, np.nodes, id);
      Rational left = np.amount;
      for (int m = 0; m < inst.model_count() && sgn(left) > 0; ++m) {
        if (commodity_model[j] >= 0 && commodity_model[j] != m) continue;
        const auto it = remaining.find({m, id});
        if (it == remaining.end() || sgn(it->second) <= 0) continue;
        const Rational take = std::min(left, it->second);
        it->second -= take;
        left -= take;
        out.push_back({m, id, take, nodes});
      }
    }
  }
  return out;
}

// Smallest k in 1..K for which `attempt` succeeds; 0 if none.
int search_snapshot(int K, MmSearch mode, const std::function<bool(int)>& attempt) {
  if (mode == MmSearch::kLinear) {
    for (int k = 1; k <= K; ++k) {
      if (attempt(k)) return k;
    }
    return 0;
  }
  if (!attempt(K)) return 0;
  int lo = 1, hi = K;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (attempt(mid)) hi = mid;
    else lo = mid + 1;
  }
  attempt(lo);  // leave the witness of the answer in place
  return lo;
}

RoutingSolution splittable_mm(const RoutingInstance& inst, const DownloadOptions& options,
                              int models) {
  const std::string name = models == 1 ? "1-SF-MM" : "2-SF-MM";
  require_shape(inst, Phase::kDownload, models == 1 ? 1u : 2u, name);
  auto sol = blank_solution(inst, download_variant(FlowKind::kSplittable, Objective::kMinMax),
                            SolverKind::kPolynomial);
  std::vector<PathAssignment> witness;
  const int k = search_snapshot(inst.tvg.snapshot_count(), options.mm_search, [&](int k) {
    const auto g = truncate(inst.tvg, k);
    std::map<int, int> deadline;
    for (int id : detail::client_ids(inst)) deadline[id] = k;
    bool feasible = false;
    auto paths = splittable_routes(inst, g, deadline, options.backend, feasible);
    if (feasible) witness = std::move(paths);
    return feasible;
  });
  if (k == 0) return sol;
  sol.paths = std::move(witness);
  finish(inst, sol, Objective::kMinMax);
  return sol;
}

// Unit-capacity routing of all clients of model 0 within the prefix graph.
std::optional<std::vector<PathAssignment>> unsplittable_by(const RoutingInstance& inst, int k) {
  const auto& model = inst.models[0];
  const auto g = truncate(inst.tvg, k);
  FlowNetwork net = normalize_capacities(g, model.size);
  const int s = g.index(SatNode::at(model.server, 1));
  std::vector<int> owner;  // aux node -> client id
  for (const auto& c : model.clients) {
    const int a = net.add_node();
    owner.push_back(c.id);
    for (int kk = 1; kk <= k; ++kk) net.add_arc(g.index(SatNode::at(c.id, kk)), a, 1, 0);
    net.add_arc(s, a, 1, 1);
    net.set_supply(a, -1);
  }
  net.set_supply(s, static_cast<long>(model.clients.size()));
  const auto flow = min_cost_flow(net);
  if (!flow || sgn(flow->total_cost) != 0) return std::nullopt;
  std::vector<PathAssignment> out;
  const auto paths = decompose_flow(net, detail::to_rational(flow->flow), net.supplies());
  for (const auto& np : detail::node_paths(net, paths)) {
    const int id = owner[static_cast<std::size_t>(np.nodes.back() - g.node_count())];
    out.push_back({0, id, model.size, detail::to_sat_nodes(g, np.nodes, id)});
  }
  return out;
}

// Earliest-arrival multicast tree per model over the allowed arcs.
struct MulticastPlan {
  bool feasible = false;
  std::vector<ClientArrival> arrivals;
  std::vector<TreeAssignment> trees;
};

MulticastPlan multicast_plan(const RoutingInstance& inst,
                             const std::vector<std::function<bool(std::size_t)>>& usable) {
  MulticastPlan plan;
  const auto& g = inst.tvg;
  for (int m = 0; m < inst.model_count(); ++m) {
    const auto& model = inst.models[m];
    const auto tree = detail::bfs_tree(g, g.index(SatNode::at(model.server, 1)), usable[m]);
    std::vector<int> targets;
    for (const auto& c : model.clients) {
      int best = 0;
      for (int k = 1; k <= g.snapshot_count(); ++k) {
        if (tree.reached[g.index(SatNode::at(c.id, k))]) {
          best = k;
          break;
        }
      }
      if (best == 0) return plan;
      targets.push_back(g.index(SatNode::at(c.id, best)));
      plan.arrivals.push_back({m, c.id, best});
    }
    plan.trees.push_back({m, detail::tree_arcs_to(g, tree, targets)});
  }
  plan.feasible = true;
  return plan;
}

// ---------------------------------------------------------------------------
// Exact search for unsplittable unicast: depth-first over units, each unit
// choosing (arrival snapshot, simple path) in the residual graph.

struct Unit {
  int model;
  int client;
  Rational size;
  int server;
};

class UnsplittableSearch {
 public:
  UnsplittableSearch(const RoutingInstance& inst, Objective objective, Budget& budget)
      : inst_(inst), g_(inst.tvg), objective_(objective), budget_(budget) {
    for (int m = 0; m < inst.model_count(); ++m) {
      for (const auto& c : inst.models[m].clients) {
        units_.push_back({m, c.id, inst.models[m].size, inst.models[m].server});
        weight_.emplace(c.id, c.weight);
      }
    }
    std::stable_sort(units_.begin(), units_.end(),
                     [](const Unit& a, const Unit& b) { return a.size > b.size; });
    residual_.reserve(g_.arcs().size());
    for (const auto& a : g_.arcs()) residual_.push_back(a.capacity);
    arrival_.assign(units_.size(), 0);
    path_.resize(units_.size());
  }

  bool run() {
    dfs(0);
    return best_.has_value();
  }

  const Rational& best_value() const { return *best_; }
  std::vector<PathAssignment> best_paths() const {
    std::vector<PathAssignment> out;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      out.push_back({units_[i].model, units_[i].client, units_[i].size,
                     detail::to_sat_nodes(g_, best_path_[i], std::nullopt)});
    }
    return out;
  }

 private:
  Rational value_of(const std::vector<int>& arrival) const {
    std::map<int, int> k;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      auto& slot = k[units_[i].client];
      slot = std::max(slot, arrival[i]);
    }
    Rational v = 0;
    for (const auto& [c, kc] : k) {
      if (objective_ == Objective::kWeightedSum) v += weight_.at(c) * kc;
      else if (v < kc) v = kc;
    }
    return v;
  }

  int earliest(const Unit& u) const {
    const auto tree = detail::bfs_tree(g_, g_.index(SatNode::at(u.server, 1)),
                                       [&](std::size_t a) { return residual_[a] >= u.size; });
    for (int k = 1; k <= g_.snapshot_count(); ++k) {
      if (tree.reached[g_.index(SatNode::at(u.client, k))]) return k;
    }
    return 0;
  }

  void dfs(std::size_t depth) {
    budget_.step();
    if (depth == units_.size()) {
      const Rational v = value_of(arrival_);
      if (!best_ || v < *best_) {
        best_ = v;
        best_path_ = path_;
      }
      return;
    }
    std::vector<int> bound = arrival_;
    for (std::size_t i = depth; i < units_.size(); ++i) {
      bound[i] = earliest(units_[i]);
      if (bound[i] == 0) return;
    }
    if (best_ && value_of(bound) >= *best_) return;

    const Unit& u = units_[depth];
    for (int k = bound[depth]; k <= g_.snapshot_count(); ++k) {
      bound[depth] = k;
      if (best_ && value_of(bound) >= *best_) break;
      arrival_[depth] = k;
      std::vector<bool> on_path(static_cast<std::size_t>(g_.node_count()), false);
      std::vector<int> nodes{g_.index(SatNode::at(u.server, 1))};
      std::vector<std::size_t> arcs;
      on_path[nodes[0]] = true;
      extend(depth, k, nodes, arcs, on_path);
    }
    arrival_[depth] = 0;
  }

  // Enumerates simple paths ending at client§k that touch the client only at
  // the end and stay within snapshots <= k.
  void extend(std::size_t depth, int k, std::vector<int>& nodes, std::vector<std::size_t>& arcs,
              std::vector<bool>& on_path) {
    budget_.step();
    const Unit& u = units_[depth];
    const SatNode here = g_.node(nodes.back());
    if (here.satellite == u.client) {
      if (here.snapshot != k) return;
      for (auto a : arcs) residual_[a] -= u.size;
      path_[depth] = nodes;
      dfs(depth + 1);
      for (auto a : arcs) residual_[a] += u.size;
      return;
    }
    for (auto a : g_.out_arcs(nodes.back())) {
      if (residual_[a] < u.size) continue;
      const int v = g_.index(g_.arcs()[a].to);
      if (on_path[v] || g_.arcs()[a].to.snapshot > k) continue;
      on_path[v] = true;
      nodes.push_back(v);
      arcs.push_back(a);
      extend(depth, k, nodes, arcs, on_path);
      arcs.pop_back();
      nodes.pop_back();
      on_path[v] = false;
    }
  }

  const RoutingInstance& inst_;
  const TimeVaryingGraph& g_;
  Objective objective_;
  Budget& budget_;
  std::vector<Unit> units_;
  std::map<int, Rational> weight_;
  std::vector<Rational> residual_;
  std::vector<int> arrival_;
  std::vector<std::vector<int>> path_;
  std::optional<Rational> best_;
  std::vector<std::vector<int>> best_path_;
};

int positive_earliest(const RoutingInstance& inst, int id) {
  const auto& g = inst.tvg;
  int latest = 1;
  for (const auto& m : inst.models) {
    if (std::none_of(m.clients.begin(), m.clients.end(), [&](const Client& c) { return c.id == id; }))
      continue;
    const auto tree = detail::bfs_tree(g, g.index(SatNode::at(m.server, 1)),
                                       [&](std::size_t a) { return sgn(g.arcs()[a].capacity) > 0; });
    int first = 0;
    for (int k = 1; k <= g.snapshot_count() && first == 0; ++k) {
      if (tree.reached[g.index(SatNode::at(id, k))]) first = k;
    }
    if (first == 0) return 0;
    latest = std::max(latest, first);
  }
  return latest;
}

RoutingSolution exact_splittable(const RoutingInstance& inst, const Variant& variant,
                                 Budget& budget) {
  auto sol = blank_solution(inst, variant, SolverKind::kExactSearch);
  const auto ids = detail::client_ids(inst);
  const int K = inst.tvg.snapshot_count();
  std::vector<int> low;
  std::int64_t count = 1;
  for (int id : ids) {
    const int e = positive_earliest(inst, id);
    if (e == 0) return sol;
    low.push_back(e);
    count *= K - e + 1;
    budget.require(count <= budget.limits().max_vectors,
                   "more than " + std::to_string(budget.limits().max_vectors) + " arrival vectors");
  }
  std::map<int, Rational> weight;
  for (const auto& m : inst.models) {
    for (const auto& c : m.clients) weight.emplace(c.id, c.weight);
  }
  auto value = [&](const std::vector<int>& k) {
    Rational v = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (variant.objective == Objective::kWeightedSum) v += weight[ids[i]] * k[i];
      else if (v < k[i]) v = k[i];
    }
    return v;
  };
  std::vector<std::pair<Rational, std::vector<int>>> vectors;
  vectors.reserve(static_cast<std::size_t>(count));
  std::vector<int> k = low;
  while (true) {
    vectors.emplace_back(value(k), k);
    std::size_t i = k.size();
    while (i > 0 && k[i - 1] == K) {
      k[i - 1] = low[i - 1];
      --i;
    }
    if (i == 0) break;
    ++k[i - 1];
  }
  std::stable_sort(vectors.begin(), vectors.end());

  for (const auto& [v, ks] : vectors) {
    budget.step(static_cast<std::int64_t>(inst.tvg.arcs().size()) + 1);
    std::map<int, int> deadline;
    for (std::size_t i = 0; i < ids.size(); ++i) deadline[ids[i]] = ks[i];
    bool feasible = false;
    auto paths = splittable_routes(inst, inst.tvg, deadline, LpBackend::kAuto, feasible);
    if (!feasible) continue;
    sol.paths = std::move(paths);
    finish(inst, sol, variant.objective);
    return sol;
  }
  return sol;
}

RoutingSolution exact_multicast(const RoutingInstance& inst, const Variant& variant,
                                Budget& budget) {
  auto sol = blank_solution(inst, variant, SolverKind::kExactSearch);
  const auto& g = inst.tvg;
  const auto& arcs = g.arcs();
  const int M = inst.model_count();
  auto fits = [&](std::size_t a, const Rational& q) { return arcs[a].cache || arcs[a].capacity >= q; };

  std::vector<std::size_t> contested;
  if (M == 2) {
    const Rational both = inst.models[0].size + inst.models[1].size;
    std::vector<std::vector<bool>> optimistic;
    for (int m = 0; m < 2; ++m) {
      optimistic.push_back(detail::bfs_tree(g, g.index(SatNode::at(inst.models[m].server, 1)),
                                            [&](std::size_t a) { return fits(a, inst.models[m].size); })
                               .reached);
    }
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (arcs[a].cache || arcs[a].capacity >= both) continue;
      if (!fits(a, inst.models[0].size) || !fits(a, inst.models[1].size)) continue;
      const int tail = g.index(arcs[a].from);
      if (optimistic[0][tail] && optimistic[1][tail]) contested.push_back(a);
    }
  }
  budget.require(static_cast<int>(contested.size()) <= budget.limits().max_contested_arcs,
                 std::to_string(contested.size()) + " contested arcs exceed the limit");

  std::vector<int> owner(arcs.size(), -1);  // -1: not contested
  std::optional<Rational> best;
  MulticastPlan best_plan;
  const std::uint64_t combos = std::uint64_t{1} << contested.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    budget.step(static_cast<std::int64_t>(arcs.size()));
    for (std::size_t i = 0; i < contested.size(); ++i) owner[contested[i]] = (mask >> i) & 1;
    std::vector<std::function<bool(std::size_t)>> usable;
    for (int m = 0; m < M; ++m) {
      usable.push_back([&, m](std::size_t a) {
        return fits(a, inst.models[m].size) && (owner[a] < 0 || owner[a] == m);
      });
    }
    auto plan = multicast_plan(inst, usable);
    if (!plan.feasible) continue;
    const Rational v = download_objective(inst, variant.objective, plan.arrivals);
    if (!best || v < *best) {
      best = v;
      best_plan = std::move(plan);
    }
  }
  if (!best) return sol;
  sol.arrivals = std::move(best_plan.arrivals);
  sol.trees = std::move(best_plan.trees);
  sol.objective = *best;
  sol.status = SolveStatus::kOptimal;
  return sol;
}

}  // namespace

RoutingSolution solve_1ufws(const RoutingInstance& inst) {
  require_shape(inst, Phase::kDownload, 1u, "1-UF-WS");
  auto sol = blank_solution(inst, download_variant(FlowKind::kUnsplittable, Objective::kWeightedSum),
                            SolverKind::kPolynomial);
  const auto& model = inst.models[0];
  if (model.clients.empty()) {
    sol.status = SolveStatus::kOptimal;
    return sol;
  }
  std::vector<ClientWeight> clients;
  for (const auto& c : model.clients) clients.push_back({c.id, c.weight});
  const ExpandedGraph ex = expand_with_client_sinks(inst.tvg, clients, 1);
  FlowNetwork net = ex.flow_network(normalize_capacities(inst.tvg, model.size));
  net.set_supply(inst.tvg.index(SatNode::at(model.server, 1)),
                 static_cast<long>(model.clients.size()));
  for (std::size_t p = 0; p < clients.size(); ++p) net.set_supply(ex.aux_index(static_cast<int>(p)), -1);

  const auto flow = min_cost_flow(net);
  if (!flow) return sol;
  const auto paths = decompose_flow(net, detail::to_rational(flow->flow), net.supplies());
  const std::size_t base_arcs = inst.tvg.arcs().size();
  for (const auto& np : detail::node_paths(net, paths)) {
    // the entry arc used tells which client this unit serves
    const auto& entry = ex.entry_arcs()[np.last_arc - base_arcs];
    const int id = clients[static_cast<std::size_t>(entry.client_position)].client;
    sol.paths.push_back({0, id, model.size, detail::to_sat_nodes(inst.tvg, np.nodes, id)});
  }
  finish(inst, sol, Objective::kWeightedSum);
  if (sol.objective != flow->total_cost) {
    throw InvariantViolation("1-UF-WS witness disagrees with the flow cost");
  }
  return sol;
}

RoutingSolution solve_1ufmm(const RoutingInstance& inst, const DownloadOptions& options) {
  require_shape(inst, Phase::kDownload, 1u, "1-UF-MM");
  auto sol = blank_solution(inst, download_variant(FlowKind::kUnsplittable, Objective::kMinMax),
                            SolverKind::kPolynomial);
  std::vector<PathAssignment> witness;
  const int k = search_snapshot(inst.tvg.snapshot_count(), options.mm_search, [&](int k) {
    auto paths = unsplittable_by(inst, k);
    if (paths) witness = std::move(*paths);
    return paths.has_value();
  });
  if (k == 0) return sol;
  sol.paths = std::move(witness);
  finish(inst, sol, Objective::kMinMax);
  return sol;
}

RoutingSolution solve_1sfmm(const RoutingInstance& inst, const DownloadOptions& options) {
  return splittable_mm(inst, options, 1);
}

RoutingSolution solve_2sfmm(const RoutingInstance& inst, const DownloadOptions& options) {
  return splittable_mm(inst, options, 2);
}

RoutingSolution solve_mul1mm(const RoutingInstance& inst) {
  require_shape(inst, Phase::kDownload, 1u, "mul-1-MM");
  auto sol = blank_solution(
      inst, download_variant(FlowKind::kUnsplittable, Objective::kMinMax, true),
      SolverKind::kPolynomial);
  const auto& q = inst.models[0].size;
  const auto& arcs = inst.tvg.arcs();
  auto plan = multicast_plan(
      inst, {[&](std::size_t a) { return arcs[a].cache || arcs[a].capacity >= q; }});
  if (!plan.feasible) return sol;
  sol.arrivals = std::move(plan.arrivals);
  sol.trees = std::move(plan.trees);
  sol.objective = download_objective(inst, Objective::kMinMax, sol.arrivals);
  sol.status = SolveStatus::kOptimal;
  return sol;
}

RoutingSolution solve_mul1ws(const RoutingInstance& inst) {
  require_shape(inst, Phase::kDownload, 1u, "mul-1-WS");
  auto sol = blank_solution(
      inst, download_variant(FlowKind::kUnsplittable, Objective::kWeightedSum, true),
      SolverKind::kPolynomial);
  const auto& model = inst.models[0];
  const auto& g = inst.tvg;
  const auto& arcs = g.arcs();
  const auto reach = reachable_mask(g, SatNode::at(model.server, 1), model.size);

  // G^M: reachable satellite nodes, then one sink per client
  Digraph gm;
  std::vector<int> id_of(static_cast<std::size_t>(g.node_count()), -1);
  std::vector<int> tvg_of;
  for (int n = 0; n < g.node_count(); ++n) {
    if (!reach[n]) continue;
    id_of[n] = gm.node_count++;
    tvg_of.push_back(n);
    const SatNode s = g.node(n);
    gm.tie_rank.push_back(static_cast<std::int64_t>(s.satellite) * (g.snapshot_count() + 1) +
                          s.snapshot);
  }
  std::vector<std::size_t> tvg_arc;  // digraph arc -> tvg arc (entry arcs excluded)
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const int u = g.index(arcs[a].from), v = g.index(arcs[a].to);
    if (!reach[u] || !reach[v]) continue;
    if (!arcs[a].cache && arcs[a].capacity < model.size) continue;
    gm.arcs.push_back({id_of[u], id_of[v], 0});
    tvg_arc.push_back(a);
  }
  const std::int64_t rank_base =
      static_cast<std::int64_t>(g.satellite_count() + 1) * (g.snapshot_count() + 1);
  std::vector<int> terminals;
  for (std::size_t p = 0; p < model.clients.size(); ++p) {
    const auto& c = model.clients[p];
    const int sink = gm.node_count++;
    gm.tie_rank.push_back(rank_base + static_cast<std::int64_t>(p));
    terminals.push_back(sink);
    bool any = false;
    for (int k = 1; k <= g.snapshot_count(); ++k) {
      const int n = g.index(SatNode::at(c.id, k));
      if (!reach[n]) continue;
      gm.arcs.push_back({id_of[n], sink, c.weight * k});
      any = true;
    }
    if (!any) return sol;
  }

  const int root = id_of[g.index(SatNode::at(model.server, 1))];
  const auto tree = prune_to_steiner(gm, min_cost_arborescence(gm, root), terminals);

  TreeAssignment t{0, {}};
  for (int v = 0; v < gm.node_count; ++v) {
    const int a = tree.parent_arc[v];
    if (a < 0 || static_cast<std::size_t>(a) >= tvg_arc.size()) continue;
    const auto& arc = arcs[tvg_arc[a]];
    t.arcs.emplace_back(arc.from, arc.to);
  }
  for (const auto& c : model.clients) {
    int first = 0;
    for (int v = 0; v < static_cast<int>(tvg_of.size()); ++v) {
      if (!tree.contains[v]) continue;
      const SatNode s = g.node(tvg_of[v]);
      if (s.satellite == c.id && (first == 0 || s.snapshot < first)) first = s.snapshot;
    }
    sol.arrivals.push_back({0, c.id, first});
  }
  sol.trees.push_back(std::move(t));
  sol.objective = download_objective(inst, Objective::kWeightedSum, sol.arrivals);
  if (sol.objective != tree.total_cost) {
    throw InvariantViolation("mul-1-WS witness disagrees with the arborescence cost");
  }
  sol.status = SolveStatus::kOptimal;
  return sol;
}

RoutingSolution solve_exact_download(const Variant& variant, const RoutingInstance& inst,
                                     const SearchLimits& limits) {
  require_shape(inst, Phase::kDownload, 3u, "exact download search");
  if (variant.multicast && variant.flow != FlowKind::kUnsplittable) {
    throw UnsupportedVariant("splittable multicast is not a supported variant");
  }
  Budget budget(limits);
  budget.require(inst.tvg.node_count() <= limits.max_graph_nodes,
                 "graph has " + std::to_string(inst.tvg.node_count()) + " nodes, limit " +
                     std::to_string(limits.max_graph_nodes));
  int units = 0;
  for (const auto& m : inst.models) units += static_cast<int>(m.clients.size());
  budget.require(units <= limits.max_units, std::to_string(units) + " units exceed the limit");

  if (variant.multicast) return exact_multicast(inst, variant, budget);
  if (variant.flow == FlowKind::kSplittable) return exact_splittable(inst, variant, budget);

  auto sol = blank_solution(inst, variant, SolverKind::kExactSearch);
  UnsplittableSearch search(inst, variant.objective, budget);
  if (!search.run()) return sol;
  sol.paths = search.best_paths();
  finish(inst, sol, variant.objective);
  if (sol.objective != search.best_value()) {
    throw InvariantViolation("exact search witness disagrees with its objective");
  }
  return sol;
}

}  // namespace satroute
