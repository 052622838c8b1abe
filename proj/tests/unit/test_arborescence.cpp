#include "doctest.h"

#include <random>

#include "satroute/arborescence.hpp"
#include "satroute/errors.hpp"
#include "satroute/oracle.hpp"
#include "satroute/random.hpp"

using namespace satroute;

TEST_CASE("arborescence needs contraction") {
  // cheapest in-arcs of 1 and 2 form a cycle
  Digraph g;
  g.node_count = 3;
  g.arcs = {{0, 1, 5}, {0, 2, 6}, {1, 2, 1}, {2, 1, 1}};
  const auto a = min_cost_arborescence(g, 0);
  CHECK(a.total_cost == 6);
  CHECK(is_arborescence(g, a));
  CHECK(a.arc_count() == 2);
}

TEST_CASE("unreachable node") {
  Digraph g;
  g.node_count = 3;
  g.arcs = {{0, 1, 1}, {2, 1, 1}};
  CHECK_THROWS_AS(min_cost_arborescence(g, 0), UnreachableNode);
}

TEST_CASE("pruning keeps terminals only as leaves") {
  Digraph g;
  g.node_count = 5;
  g.arcs = {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}};
  const auto a = min_cost_arborescence(g, 0);
  const std::vector<int> terminals = {2};
  const auto p = prune_to_steiner(g, a, terminals);
  CHECK(p.total_cost == 2);
  CHECK(p.leaves(g) == std::vector<int>{2});
  CHECK(is_arborescence(g, p));
  CHECK_FALSE(p.contains[4]);

  Arborescence partial = p;
  const std::vector<int> outside = {4};
  CHECK_THROWS_AS(prune_to_steiner(g, partial, outside), InvalidArgument);
}

TEST_CASE("tie rank decides between equal arcs") {
  Digraph g;
  g.node_count = 3;
  g.arcs = {{0, 1, 1}, {0, 2, 1}, {1, 2, 0}, {0, 2, 0}};
  g.tie_rank = {5, 1, 2};
  const auto a = min_cost_arborescence(g, 0);
  CHECK(a.total_cost == 1);
  // node 1 ranks before node 0, so 2 hangs off 1
  CHECK(g.arcs[a.parent_arc[2]].from == 1);
}

TEST_CASE("spanning arborescence matches enumeration") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    Digraph g;
    g.node_count = static_cast<int>(uniform_int(rng, 2, 6));
    for (int v = 1; v < g.node_count; ++v) g.arcs.push_back({0, v, uniform_int(rng, 5, 9)});
    for (int u = 0; u < g.node_count; ++u) {
      for (int v = 1; v < g.node_count; ++v) {
        if (u != v && bernoulli(rng, 1, 2)) g.arcs.push_back({u, v, uniform_int(rng, 0, 6)});
      }
    }
    std::vector<int> all;
    for (int v = 1; v < g.node_count; ++v) all.push_back(v);
    const auto a = min_cost_arborescence(g, 0);
    CHECK(is_arborescence(g, a));
    const auto best = brute_force_steiner_arborescence(g, 0, all);
    REQUIRE(best);
    CHECK(a.total_cost == *best);
  }
}
