#include "satroute/arborescence.hpp"

#include <deque>
#include <string>

#include "satroute/errors.hpp"

namespace satroute {

std::size_t Arborescence::arc_count() const {
  std::size_t n = 0;
  for (int a : parent_arc) n += a >= 0 ? 1 : 0;
  return n;
}

std::vector<int> Arborescence::leaves(const Digraph& g) const {
  std::vector<int> children(contains.size(), 0);
  for (int a : parent_arc) {
    if (a >= 0) ++children[g.arcs[a].from];
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < contains.size(); ++v) {
    if (contains[v] && children[v] == 0 && static_cast<int>(v) != root) out.push_back(static_cast<int>(v));
  }
  return out;
}

namespace {

struct LevelArc {
  int from;
  int to;
  Rational cost;
  int below;  // arc index one level down (original arc index on level 0)
  int orig;
};

struct Level {
  int nodes;
  int root;
  std::vector<LevelArc> arcs;
  std::vector<int> chosen;  // per node, index into arcs
  std::vector<bool> in_cycle;
};

bool better(const Digraph& g, const LevelArc& a, const LevelArc& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  const auto ra = g.rank(g.arcs[a.orig].from);
  const auto rb = g.rank(g.arcs[b.orig].from);
  if (ra != rb) return ra < rb;
  return a.orig < b.orig;
}

}  // namespace

Arborescence min_cost_arborescence(const Digraph& g, int root) {
  if (root < 0 || root >= g.node_count) throw InvalidArgument("root out of range");
  if (!g.tie_rank.empty() && static_cast<int>(g.tie_rank.size()) != g.node_count) {
    throw InvalidArgument("tie_rank size mismatch");
  }
  std::vector<Level> levels;
  {
    Level base{g.node_count, root, {}, {}, {}};
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      const auto& arc = g.arcs[a];
      if (arc.from < 0 || arc.from >= g.node_count || arc.to < 0 || arc.to >= g.node_count) {
        throw InvalidArgument("arc endpoint out of range");
      }
      base.arcs.push_back({arc.from, arc.to, arc.cost, static_cast<int>(a), static_cast<int>(a)});
    }
    levels.push_back(std::move(base));
  }

  while (true) {
    Level& cur = levels.back();
    cur.chosen.assign(static_cast<std::size_t>(cur.nodes), -1);
    for (std::size_t a = 0; a < cur.arcs.size(); ++a) {
      const auto& arc = cur.arcs[a];
      if (arc.from == arc.to || arc.to == cur.root) continue;
      int& best = cur.chosen[arc.to];
      if (best < 0 || better(g, arc, cur.arcs[best])) best = static_cast<int>(a);
    }
    for (int v = 0; v < cur.nodes; ++v) {
      if (v != cur.root && cur.chosen[v] < 0) {
        throw UnreachableNode("node unreachable from the arborescence root");
      }
    }

    // Find cycles formed by the chosen arcs.
    std::vector<int> comp(static_cast<std::size_t>(cur.nodes), -1);
    std::vector<int> visit(static_cast<std::size_t>(cur.nodes), -1);
    cur.in_cycle.assign(static_cast<std::size_t>(cur.nodes), false);
    int next_comp = 0;
    for (int v = 0; v < cur.nodes; ++v) {
      int u = v;
      while (u != cur.root && visit[u] < 0 && comp[u] < 0) {
        visit[u] = v;
        u = cur.arcs[cur.chosen[u]].from;
      }
      if (u != cur.root && visit[u] == v && comp[u] < 0) {
        int w = u;
        do {
          comp[w] = next_comp;
          cur.in_cycle[w] = true;
          w = cur.arcs[cur.chosen[w]].from;
        } while (w != u);
        ++next_comp;
      }
    }
    if (next_comp == 0) break;
    for (int v = 0; v < cur.nodes; ++v) {
      if (comp[v] < 0) comp[v] = next_comp++;
    }

    Level next{next_comp, comp[cur.root], {}, {}, {}};
    for (std::size_t a = 0; a < cur.arcs.size(); ++a) {
      const auto& arc = cur.arcs[a];
      const int cu = comp[arc.from];
      const int cv = comp[arc.to];
      if (cu == cv) continue;
      Rational cost = arc.cost;
      if (cur.in_cycle[arc.to]) cost -= cur.arcs[cur.chosen[arc.to]].cost;
      next.arcs.push_back({cu, cv, std::move(cost), static_cast<int>(a), arc.orig});
    }
    levels.push_back(std::move(next));
  }

  // Expand from the top level back down.
  std::vector<int> selected;  // arc indices on the current level
  {
    const Level& top = levels.back();
    for (int v = 0; v < top.nodes; ++v) {
      if (v != top.root) selected.push_back(top.chosen[v]);
    }
  }
  for (std::size_t li = levels.size() - 1; li-- > 0;) {
    const Level& lower = levels[li];
    const Level& upper = levels[li + 1];
    std::vector<int> incoming(static_cast<std::size_t>(lower.nodes), -1);
    for (int a : selected) {
      const int b = upper.arcs[a].below;
      incoming[lower.arcs[b].to] = b;
    }
    for (int v = 0; v < lower.nodes; ++v) {
      if (v != lower.root && incoming[v] < 0 && lower.in_cycle[v]) incoming[v] = lower.chosen[v];
    }
    selected.clear();
    for (int v = 0; v < lower.nodes; ++v) {
      if (v == lower.root) continue;
      if (incoming[v] < 0) throw InvariantViolation("arborescence expansion lost a node");
      selected.push_back(incoming[v]);
    }
  }

  Arborescence out;
  out.root = root;
  out.parent_arc.assign(static_cast<std::size_t>(g.node_count), -1);
  out.contains.assign(static_cast<std::size_t>(g.node_count), true);
  out.total_cost = 0;
  for (int a : selected) {
    out.parent_arc[g.arcs[a].to] = a;
    out.total_cost += g.arcs[a].cost;
  }
  return out;
}

Arborescence prune_to_steiner(const Digraph& g, const Arborescence& arb,
                              std::span<const int> terminals) {
  std::vector<bool> terminal(arb.contains.size(), false);
  for (int t : terminals) {
    if (t < 0 || t >= static_cast<int>(arb.contains.size()) || !arb.contains[t]) {
      throw InvalidArgument("terminal " + std::to_string(t) + " is not in the arborescence");
    }
    terminal[t] = true;
  }
  Arborescence out = arb;
  std::vector<int> children(arb.contains.size(), 0);
  for (int a : out.parent_arc) {
    if (a >= 0) ++children[g.arcs[a].from];
  }
  std::deque<int> queue;
  for (std::size_t v = 0; v < out.contains.size(); ++v) {
    if (out.contains[v] && children[v] == 0 && !terminal[v] && static_cast<int>(v) != out.root) {
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int a = out.parent_arc[v];
    out.contains[v] = false;
    out.parent_arc[v] = -1;
    out.total_cost -= g.arcs[a].cost;
    const int p = g.arcs[a].from;
    if (--children[p] == 0 && !terminal[p] && p != out.root) queue.push_back(p);
  }
  return out;
}

bool is_arborescence(const Digraph& g, const Arborescence& arb) {
  const auto n = static_cast<std::size_t>(g.node_count);
  if (arb.parent_arc.size() != n || arb.contains.size() != n) return false;
  if (arb.root < 0 || arb.root >= g.node_count || !arb.contains[arb.root] ||
      arb.parent_arc[arb.root] != -1) {
    return false;
  }
  Rational cost = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const int a = arb.parent_arc[v];
    if (!arb.contains[v]) {
      if (a != -1) return false;
      continue;
    }
    if (static_cast<int>(v) == arb.root) continue;
    if (a < 0 || a >= static_cast<int>(g.arcs.size())) return false;
    if (g.arcs[a].to != static_cast<int>(v) || !arb.contains[g.arcs[a].from]) return false;
    cost += g.arcs[a].cost;
  }
  // Every member must reach the root by following parents.
  std::vector<int> state(n, 0);  // 0 unknown, 1 in progress, 2 ok
  state[arb.root] = 2;
  for (std::size_t v = 0; v < n; ++v) {
    if (!arb.contains[v]) continue;
    std::vector<int> trail;
    int u = static_cast<int>(v);
    while (state[u] == 0) {
      state[u] = 1;
      trail.push_back(u);
      u = g.arcs[arb.parent_arc[u]].from;
    }
    if (state[u] == 1) return false;
    for (int w : trail) state[w] = 2;
  }
  return cost == arb.total_cost;
}

}  // namespace satroute
