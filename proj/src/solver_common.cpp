#include "solver_common.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "satroute/errors.hpp"

namespace satroute::detail {

RoutingSolution blank_solution(const RoutingInstance& inst, const Variant& variant,
                               SolverKind kind) {
  RoutingSolution sol;
  sol.phase = inst.phase;
  sol.variant = variant_name(inst.phase, variant, inst.model_count());
  sol.solver = kind;
  sol.status = SolveStatus::kInfeasible;
  return sol;
}

void require_shape(const RoutingInstance& inst, Phase phase, unsigned counts,
                   const std::string& solver) {
  if (inst.phase != phase) {
    throw UnsupportedVariant(solver + " needs a " + to_string(phase) + " instance");
  }
  const unsigned bit = inst.model_count() == 1 ? 1u : 2u;
  if ((counts & bit) == 0) {
    throw UnsupportedVariant(solver + " does not accept " + std::to_string(inst.model_count()) +
                             " model(s)");
  }
}

std::vector<Rational> to_rational(const std::vector<Integer>& flow) {
  std::vector<Rational> out;
  out.reserve(flow.size());
  for (const auto& f : flow) out.emplace_back(f);
  return out;
}

std::vector<NodePath> node_paths(const FlowNetwork& net, const std::vector<FlowPath>& paths) {
  std::vector<NodePath> out;
  for (const auto& p : paths) {
    if (p.arcs.empty()) continue;
    NodePath np;
    np.nodes.push_back(net.arc(p.arcs.front()).from);
    for (auto a : p.arcs) np.nodes.push_back(net.arc(a).to);
    np.last_arc = p.arcs.back();
    np.amount = p.amount;
    out.push_back(std::move(np));
  }
  return out;
}

std::vector<SatNode> to_sat_nodes(const TimeVaryingGraph& tvg, const std::vector<int>& nodes,
                                  std::optional<int> stop_satellite) {
  std::vector<SatNode> out;
  for (int n : nodes) {
    if (n >= tvg.node_count()) break;
    out.push_back(tvg.node(n));
    if (stop_satellite && out.back().satellite == *stop_satellite) break;
  }
  return out;
}

void normalize_paths(std::vector<PathAssignment>& paths) {
  auto key = [](const PathAssignment& p) { return std::tie(p.model, p.client, p.nodes); };
  std::stable_sort(paths.begin(), paths.end(),
                   [&](const PathAssignment& a, const PathAssignment& b) { return key(a) < key(b); });
  std::vector<PathAssignment> merged;
  for (auto& p : paths) {
    if (!merged.empty() && key(merged.back()) == key(p)) {
      merged.back().amount += p.amount;
    } else {
      merged.push_back(std::move(p));
    }
  }
  paths = std::move(merged);
}

std::vector<ClientArrival> arrivals_from_paths(const std::vector<PathAssignment>& paths) {
  std::map<std::pair<int, int>, int> latest;
  for (const auto& p : paths) {
    auto& k = latest[{p.model, p.client}];
    k = std::max(k, p.nodes.back().snapshot);
  }
  std::vector<ClientArrival> out;
  for (const auto& [key, k] : latest) out.push_back({key.first, key.second, k});
  return out;
}

SearchTree bfs_tree(const TimeVaryingGraph& tvg, int source,
                    const std::function<bool(std::size_t)>& usable) {
  SearchTree tree;
  tree.parent_arc.assign(static_cast<std::size_t>(tvg.node_count()), -1);
  tree.reached.assign(static_cast<std::size_t>(tvg.node_count()), false);
  std::deque<int> queue{source};
  tree.reached[source] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (auto a : tvg.out_arcs(u)) {
      if (!usable(a)) continue;
      const int v = tvg.index(tvg.arcs()[a].to);
      if (tree.reached[v]) continue;
      tree.reached[v] = true;
      tree.parent_arc[v] = static_cast<int>(a);
      queue.push_back(v);
    }
  }
  return tree;
}

std::vector<std::pair<SatNode, SatNode>> tree_arcs_to(const TimeVaryingGraph& tvg,
                                                      const SearchTree& tree,
                                                      const std::vector<int>& targets) {
  std::set<int> taken;
  std::vector<std::pair<SatNode, SatNode>> out;
  for (int t : targets) {
    std::vector<std::pair<SatNode, SatNode>> chain;
    for (int v = t; tree.parent_arc[v] >= 0 && !taken.count(v);) {
      taken.insert(v);
      const auto& arc = tvg.arcs()[tree.parent_arc[v]];
      chain.emplace_back(arc.from, arc.to);
      v = tvg.index(arc.from);
    }
    out.insert(out.end(), chain.rbegin(), chain.rend());
  }
  return out;
}

std::vector<int> client_ids(const RoutingInstance& inst) {
  std::vector<int> ids;
  for (const auto& m : inst.models) {
    for (const auto& c : m.clients) {
      if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) ids.push_back(c.id);
    }
  }
  return ids;
}

Rational client_demand(const RoutingInstance& inst, int id) {
  Rational total = 0;
  for (const auto& m : inst.models) {
    for (const auto& c : m.clients) {
      if (c.id == id) total += m.size;
    }
  }
  return total;
}

}  // namespace satroute::detail
