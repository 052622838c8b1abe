#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "satroute/rational.hpp"

namespace satroute {

struct WeightedArc {
  int from = 0;
  int to = 0;
  Rational cost;
};

struct Digraph {
  int node_count = 0;
  std::vector<WeightedArc> arcs;
  /// Optional ordering key per node used to break cost ties (smaller tail
  /// wins). Defaults to the node index.
  std::vector<std::int64_t> tie_rank;

  std::int64_t rank(int node) const { return tie_rank.empty() ? node : tie_rank[node]; }
};

struct Arborescence {
  int root = 0;
  /// Incoming arc (index into Digraph::arcs) per node; -1 for the root and for
  /// nodes outside the arborescence.
  std::vector<int> parent_arc;
  std::vector<bool> contains;
  Rational total_cost;

  std::size_t arc_count() const;
  std::vector<int> leaves(const Digraph& g) const;
};

/// Minimum-cost spanning arborescence rooted at `root` (Chu-Liu/Edmonds with an
/// explicit contraction stack). Throws UnreachableNode if some node cannot be
/// reached from the root.
Arborescence min_cost_arborescence(const Digraph& g, int root);

/// Repeatedly removes non-terminal leaves. Throws InvalidArgument if a terminal
/// is not part of `arb`.
Arborescence prune_to_steiner(const Digraph& g, const Arborescence& arb,
                              std::span<const int> terminals);

/// Structural check: one incoming arc per non-root member, parents are members,
/// no cycles, cost matches.
bool is_arborescence(const Digraph& g, const Arborescence& arb);

}  // namespace satroute
