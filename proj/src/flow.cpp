#include "satroute/flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <string>

#include "satroute/errors.hpp"
#include "satroute/lp.hpp"

namespace satroute {

namespace {

// Residual graph; edge e and e^1 are mutual reverses.
class Residual {
 public:
  struct Edge {
    int to;
    Rational cap;
    Rational cost;
  };

  explicit Residual(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  int add_edge(int u, int v, const Rational& cap, const Rational& cost) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({v, cap, cost});
    edges_.push_back({u, 0, -cost});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
  }

  int node_count() const { return static_cast<int>(adj_.size()); }
  std::vector<Edge>& edges() { return edges_; }
  const std::vector<int>& adj(int u) const { return adj_[u]; }
  int tail(int e) const { return edges_[e ^ 1].to; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct SspOutcome {
  bool feasible = false;
  std::vector<Rational> flow;
  Rational cost;
};

// Label-correcting potentials from a virtual root joined to every node, so
// negative arc costs are admissible as long as no negative cycle exists.
std::vector<Rational> initial_potentials(Residual& g) {
  const int n = g.node_count();
  std::vector<Rational> pi(static_cast<std::size_t>(n), Rational(0));
  auto& edges = g.edges();
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      for (int e : g.adj(u)) {
        if (sgn(edges[e].cap) <= 0) continue;
        const int v = edges[e].to;
        Rational cand = pi[u] + edges[e].cost;
        if (cand < pi[v]) {
          pi[v] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) return pi;
  }
  throw NegativeCycle("network contains a negative-cost cycle");
}

SspOutcome successive_shortest_paths(const FlowNetwork& net) {
  if (!net.balanced()) throw InvalidArgument("supplies and demands are not balanced");
  const int n = net.node_count();
  Residual g(n);
  for (const auto& arc : net.arcs()) g.add_edge(arc.from, arc.to, arc.capacity, arc.cost);
  const int source = g.add_node();
  const int sink = g.add_node();
  Rational remaining = 0;
  for (int v = 0; v < n; ++v) {
    const auto& s = net.supply(v);
    if (sgn(s) > 0) {
      g.add_edge(source, v, s, 0);
      remaining += s;
    } else if (sgn(s) < 0) {
      g.add_edge(v, sink, -s, 0);
    }
  }

  auto& edges = g.edges();
  std::vector<Rational> pi = initial_potentials(g);
  const int total = g.node_count();
  std::vector<Rational> dist(static_cast<std::size_t>(total));
  std::vector<bool> done(static_cast<std::size_t>(total));
  std::vector<bool> reached(static_cast<std::size_t>(total));
  std::vector<int> pred(static_cast<std::size_t>(total));
  using Item = std::pair<Rational, int>;
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };

  while (sgn(remaining) > 0) {
    std::fill(done.begin(), done.end(), false);
    std::fill(reached.begin(), reached.end(), false);
    std::fill(pred.begin(), pred.end(), -1);
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
    dist[source] = 0;
    reached[source] = true;
    heap.emplace(Rational(0), source);
    Rational reduced;
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = true;
      for (int e : g.adj(u)) {
        const auto& edge = edges[e];
        if (sgn(edge.cap) <= 0) continue;
        const int v = edge.to;
        if (done[v]) continue;
        reduced = edge.cost + pi[u] - pi[v];
        Rational cand = dist[u] + reduced;
        if (!reached[v] || cand < dist[v]) {
          dist[v] = cand;
          reached[v] = true;
          pred[v] = e;
          heap.emplace(std::move(cand), v);
        }
      }
    }
    if (!reached[sink]) return {};

    Rational max_dist = 0;
    for (int v = 0; v < total; ++v) {
      if (reached[v] && dist[v] > max_dist) max_dist = dist[v];
    }
    for (int v = 0; v < total; ++v) pi[v] += reached[v] ? dist[v] : max_dist;

    Rational push = remaining;
    for (int v = sink; v != source; v = g.tail(pred[v])) push = std::min(push, edges[pred[v]].cap);
    for (int v = sink; v != source; v = g.tail(pred[v])) {
      edges[pred[v]].cap -= push;
      edges[pred[v] ^ 1].cap += push;
    }
    remaining -= push;
  }

  SspOutcome out;
  out.feasible = true;
  out.cost = 0;
  out.flow.reserve(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    out.flow.push_back(edges[2 * i + 1].cap);
    out.cost += out.flow.back() * net.arc(i).cost;
  }
  return out;
}

void check_commodities(const FlowNetwork& net, std::span<const Commodity> commodities) {
  for (const auto& c : commodities) {
    Rational in = 0;
    Rational out = 0;
    for (const auto& [node, amount] : c.sources) {
      if (node < 0 || node >= net.node_count()) throw InvalidArgument("commodity source out of range");
      if (sgn(amount) < 0) throw InvalidArgument("negative commodity supply");
      in += amount;
    }
    for (const auto& [node, amount] : c.sinks) {
      if (node < 0 || node >= net.node_count()) throw InvalidArgument("commodity sink out of range");
      if (sgn(amount) < 0) throw InvalidArgument("negative commodity demand");
      out += amount;
    }
    if (in != out) throw InvalidArgument("unbalanced commodity: supply " + to_string(in) +
                                         " vs demand " + to_string(out));
  }
}

FeasibilityResult feasibility_by_network(const FlowNetwork& net, const Commodity& commodity) {
  Rational big = 0;
  for (const auto& [node, amount] : commodity.sources) big += amount;
  FlowNetwork aug(net.node_count());
  for (const auto& arc : net.arcs()) {
    aug.add_arc(arc.from, arc.to, arc.capacity, 0);
    aug.add_arc(arc.from, arc.to, big, 1);
  }
  for (const auto& [node, amount] : commodity.sources) aug.add_supply(node, amount);
  for (const auto& [node, amount] : commodity.sinks) aug.add_supply(node, -amount);

  FeasibilityResult out;
  auto ssp = successive_shortest_paths(aug);
  if (!ssp.feasible) return out;
  FractionalFlow flow;
  flow.commodity_flow.emplace_back();
  auto& f = flow.commodity_flow.back();
  for (std::size_t a = 0; a < net.arc_count(); ++a) {
    f.push_back(ssp.flow[2 * a] + ssp.flow[2 * a + 1]);
    flow.slack.push_back(ssp.flow[2 * a + 1]);
  }
  out.min_total_slack = ssp.cost;
  out.feasible = sgn(ssp.cost) == 0;
  out.flow = std::move(flow);
  return out;
}

std::vector<bool> sweep(const FlowNetwork& net, const std::vector<int>& seeds, bool forward) {
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(net.node_count()));
  for (std::size_t a = 0; a < net.arc_count(); ++a) {
    const auto& arc = net.arc(a);
    adj[forward ? arc.from : arc.to].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(net.node_count()), false);
  std::deque<int> queue;
  for (int s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (std::size_t a : adj[u]) {
      const int v = forward ? net.arc(a).to : net.arc(a).from;
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

FeasibilityResult feasibility_by_simplex(const FlowNetwork& net,
                                         std::span<const Commodity> commodities) {
  const std::size_t arcs = net.arc_count();
  const std::size_t k = commodities.size();
  LinearProgram lp;
  std::vector<std::vector<int>> var(k, std::vector<int>(arcs, -1));
  std::vector<int> slack_var(arcs, -1);

  for (std::size_t j = 0; j < k; ++j) {
    std::vector<int> sources;
    std::vector<int> sinks;
    for (const auto& [node, amount] : commodities[j].sources) {
      if (sgn(amount) > 0) sources.push_back(node);
    }
    for (const auto& [node, amount] : commodities[j].sinks) {
      if (sgn(amount) > 0) sinks.push_back(node);
    }
    const auto fwd = sweep(net, sources, true);
    const auto bwd = sweep(net, sinks, false);
    for (std::size_t a = 0; a < arcs; ++a) {
      if (fwd[net.arc(a).from] && bwd[net.arc(a).to]) var[j][a] = lp.add_variable(0);
    }
  }
  for (std::size_t a = 0; a < arcs; ++a) {
    bool used = false;
    for (std::size_t j = 0; j < k; ++j) used = used || var[j][a] >= 0;
    if (used) slack_var[a] = lp.add_variable(1);
  }

  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> supply(static_cast<std::size_t>(net.node_count()), Rational(0));
    for (const auto& [node, amount] : commodities[j].sources) supply[node] += amount;
    for (const auto& [node, amount] : commodities[j].sinks) supply[node] -= amount;
    std::vector<std::vector<std::pair<int, Rational>>> rows(static_cast<std::size_t>(net.node_count()));
    for (std::size_t a = 0; a < arcs; ++a) {
      if (var[j][a] < 0) continue;
      rows[net.arc(a).from].emplace_back(var[j][a], 1);
      rows[net.arc(a).to].emplace_back(var[j][a], -1);
    }
    for (int v = 0; v < net.node_count(); ++v) {
      if (rows[v].empty() && sgn(supply[v]) == 0) continue;
      lp.add_constraint(std::move(rows[v]), ConstraintSense::kEqual, supply[v]);
    }
  }
  for (std::size_t a = 0; a < arcs; ++a) {
    if (slack_var[a] < 0) continue;
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t j = 0; j < k; ++j) {
      if (var[j][a] >= 0) terms.emplace_back(var[j][a], 1);
    }
    terms.emplace_back(slack_var[a], -1);
    lp.add_constraint(std::move(terms), ConstraintSense::kLessEqual, net.arc(a).capacity);
  }

  FeasibilityResult out;
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return out;
  FractionalFlow flow;
  flow.commodity_flow.assign(k, std::vector<Rational>(arcs, Rational(0)));
  flow.slack.assign(arcs, Rational(0));
  for (std::size_t a = 0; a < arcs; ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      if (var[j][a] >= 0) flow.commodity_flow[j][a] = sol.values[var[j][a]];
    }
    if (slack_var[a] >= 0) flow.slack[a] = sol.values[slack_var[a]];
  }
  out.min_total_slack = sol.objective;
  out.feasible = sgn(sol.objective) == 0;
  out.flow = std::move(flow);
  return out;
}

// Routes the commodities one at a time through what the earlier ones left.
// Any success is an exact zero-slack witness; failure proves nothing.
std::optional<FractionalFlow> sequential_witness(const FlowNetwork& net,
                                                 std::span<const Commodity> commodities,
                                                 const std::vector<std::size_t>& order) {
  std::vector<Rational> left;
  for (const auto& arc : net.arcs()) left.push_back(arc.capacity);
  FractionalFlow flow;
  flow.commodity_flow.resize(commodities.size());
  flow.slack.assign(net.arc_count(), Rational(0));
  for (std::size_t j : order) {
    FlowNetwork residual(net.node_count());
    for (std::size_t a = 0; a < net.arc_count(); ++a) {
      residual.add_arc(net.arc(a).from, net.arc(a).to, left[a], 0);
    }
    auto one = feasibility_by_network(residual, commodities[j]);
    if (!one.feasible) return std::nullopt;
    auto& f = one.flow->commodity_flow.front();
    for (std::size_t a = 0; a < net.arc_count(); ++a) left[a] -= f[a];
    flow.commodity_flow[j] = std::move(f);
  }
  return flow;
}

}  // namespace

std::optional<IntegralFlow> min_cost_flow(const FlowNetwork& net) {
  for (const auto& arc : net.arcs()) {
    if (!is_integer(arc.capacity)) throw InvalidArgument("min_cost_flow needs integer capacities");
  }
  for (const auto& s : net.supplies()) {
    if (!is_integer(s)) throw InvalidArgument("min_cost_flow needs integer supplies");
  }
  auto ssp = successive_shortest_paths(net);
  if (!ssp.feasible) return std::nullopt;
  IntegralFlow out;
  out.total_cost = ssp.cost;
  out.flow.reserve(ssp.flow.size());
  for (const auto& f : ssp.flow) {
    if (!is_integer(f)) throw InvariantViolation("non-integral flow from integral network");
    out.flow.push_back(f.get_num());
  }
  return out;
}

MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink) {
  const int n = net.node_count();
  if (source < 0 || source >= n || sink < 0 || sink >= n) throw InvalidArgument("terminal out of range");
  MaxFlowResult out;
  out.value = 0;
  if (source == sink) {
    out.flow.assign(net.arc_count(), Rational(0));
    return out;
  }
  Residual g(n);
  for (const auto& arc : net.arcs()) g.add_edge(arc.from, arc.to, arc.capacity, 0);
  auto& edges = g.edges();
  std::vector<int> level(static_cast<std::size_t>(n));
  std::vector<std::size_t> it(static_cast<std::size_t>(n));

  std::function<Rational(int, const Rational&)> push = [&](int u, const Rational& limit) -> Rational {
    if (u == sink) return limit;
    for (auto& i = it[u]; i < g.adj(u).size(); ++i) {
      const int e = g.adj(u)[i];
      const int v = edges[e].to;
      if (sgn(edges[e].cap) <= 0 || level[v] != level[u] + 1) continue;
      Rational pushed = push(v, std::min(limit, edges[e].cap));
      if (sgn(pushed) > 0) {
        edges[e].cap -= pushed;
        edges[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  };

  while (true) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> queue{source};
    level[source] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : g.adj(u)) {
        if (sgn(edges[e].cap) > 0 && level[edges[e].to] < 0) {
          level[edges[e].to] = level[u] + 1;
          queue.push_back(edges[e].to);
        }
      }
    }
    if (level[sink] < 0) break;
    std::fill(it.begin(), it.end(), 0);
    Rational unbounded = 1;
    for (const auto& arc : net.arcs()) unbounded += arc.capacity;
    while (true) {
      Rational pushed = push(source, unbounded);
      if (sgn(pushed) == 0) break;
      out.value += pushed;
    }
  }
  out.flow.reserve(net.arc_count());
  for (std::size_t a = 0; a < net.arc_count(); ++a) out.flow.push_back(edges[2 * a + 1].cap);
  return out;
}

FeasibilityResult fractional_feasibility(const FlowNetwork& net,
                                         std::span<const Commodity> commodities,
                                         LpBackend backend) {
  check_commodities(net, commodities);
  if (commodities.empty()) {
    FeasibilityResult out;
    out.feasible = true;
    out.min_total_slack = Rational(0);
    out.flow = FractionalFlow{{}, std::vector<Rational>(net.arc_count(), Rational(0))};
    return out;
  }
  if (backend == LpBackend::kNetwork && commodities.size() != 1) {
    throw InvalidArgument("the network backend handles a single commodity only");
  }
  if (backend == LpBackend::kNetwork ||
      (backend == LpBackend::kAuto && commodities.size() == 1)) {
    return feasibility_by_network(net, commodities.front());
  }
  if (backend == LpBackend::kAuto) {
    std::vector<std::size_t> order(commodities.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    for (int attempt = 0; attempt < 2; ++attempt) {
      if (auto flow = sequential_witness(net, commodities, order)) {
        FeasibilityResult out;
        out.feasible = true;
        out.min_total_slack = Rational(0);
        out.flow = std::move(flow);
        return out;
      }
      std::reverse(order.begin(), order.end());
    }
  }
  return feasibility_by_simplex(net, commodities);
}

namespace {

template <typename Value>
bool conservation_holds(const FlowNetwork& net, std::span<const Value> flow) {
  if (flow.size() != net.arc_count()) return false;
  std::vector<Rational> balance(static_cast<std::size_t>(net.node_count()), Rational(0));
  for (std::size_t a = 0; a < flow.size(); ++a) {
    const Rational f(flow[a]);
    if (sgn(f) < 0 || f > net.arc(a).capacity) return false;
    balance[net.arc(a).from] += f;
    balance[net.arc(a).to] -= f;
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (balance[v] != net.supply(v)) return false;
  }
  return true;
}

}  // namespace

bool check_flow_conservation(const FlowNetwork& net, std::span<const Rational> flow) {
  return conservation_holds(net, flow);
}

bool check_flow_conservation(const FlowNetwork& net, std::span<const Integer> flow) {
  return conservation_holds(net, flow);
}

std::vector<FlowPath> decompose_flow(const FlowNetwork& net, std::vector<Rational> flow,
                                     std::vector<Rational> excess) {
  const int n = net.node_count();
  std::vector<std::vector<std::size_t>> out_arcs(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < net.arc_count(); ++a) out_arcs[net.arc(a).from].push_back(a);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  auto next_arc = [&](int u) -> std::optional<std::size_t> {
    auto& c = cursor[u];
    while (c < out_arcs[u].size() && sgn(flow[out_arcs[u][c]]) <= 0) ++c;
    if (c == out_arcs[u].size()) return std::nullopt;
    return out_arcs[u][c];
  };

  std::vector<FlowPath> paths;
  std::vector<int> on_path(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    while (sgn(excess[s]) > 0) {
      std::vector<std::size_t> arcs;
      std::vector<int> nodes{s};
      on_path[s] = 0;
      int u = s;
      bool stuck = false;
      while (true) {
        if (u != s && sgn(excess[u]) < 0) break;
        const auto a = next_arc(u);
        if (!a) {
          stuck = true;
          break;
        }
        const int v = net.arc(*a).to;
        if (on_path[v] >= 0) {
          // Cancel the cycle v -> ... -> u -> v and resume from v.
          const std::size_t start = static_cast<std::size_t>(on_path[v]);
          Rational amount = flow[*a];
          for (std::size_t i = start; i < arcs.size(); ++i) amount = std::min(amount, flow[arcs[i]]);
          for (std::size_t i = start; i < arcs.size(); ++i) flow[arcs[i]] -= amount;
          flow[*a] -= amount;
          for (std::size_t i = start + 1; i < nodes.size(); ++i) on_path[nodes[i]] = -1;
          nodes.resize(start + 1);
          arcs.resize(start);
          u = v;
          continue;
        }
        arcs.push_back(*a);
        nodes.push_back(v);
        on_path[v] = static_cast<int>(nodes.size()) - 1;
        u = v;
      }
      for (int node : nodes) on_path[node] = -1;
      if (stuck) throw InvariantViolation("flow decomposition: conservation violated");
      Rational amount = std::min(excess[s], Rational(-excess[u]));
      for (std::size_t a : arcs) amount = std::min(amount, flow[a]);
      for (std::size_t a : arcs) flow[a] -= amount;
      excess[s] -= amount;
      excess[u] += amount;
      paths.push_back(FlowPath{std::move(arcs), amount});
    }
  }
  return paths;
}

}  // namespace satroute
