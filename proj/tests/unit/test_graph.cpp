#include "doctest.h"

#include "builders.hpp"
#include "satroute/errors.hpp"
#include "satroute/tvg.hpp"

using namespace test;

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK(floor_div(Rational(7, 2), Rational(1, 2)) == 7);
  CHECK(floor_div(Rational(5), Rational(2)) == 2);
  CHECK(is_integer(parse_rational("4/2")));
  CHECK_FALSE(is_integer(Rational(1, 3)));
}

TEST_CASE("tvg indexing and arc order") {
  CachePolicy cache{Rational(2), {{3, Rational(5)}}};
  TimeVaryingGraph g(3, 2, {arc(1, 2, 1, 1), arc(2, 3, 2, 4), arc(1, 2, 1, 2)}, cache);
  CHECK(g.node_count() == 6);
  for (int i = 0; i < g.node_count(); ++i) CHECK(g.index(g.node(i)) == i);
  CHECK_THROWS_AS(g.index(SatNode::at(4, 1)), InvalidArgument);
  CHECK_THROWS_AS(g.index(SatNode::at(1, 3)), InvalidArgument);

  // parallel arcs merge, intra before cache
  REQUIRE(g.intra_arc_count() == 2);
  CHECK(g.arcs()[0].capacity == 3);
  CHECK_FALSE(g.arcs()[0].cache);
  CHECK(g.cache_arc_count() == 3);
  for (const auto& a : g.cache_arcs()) {
    CHECK(a.cache);
    CHECK(a.to.snapshot == a.from.snapshot + 1);
    CHECK(a.capacity == (a.from.satellite == 3 ? 5 : 2));
  }
  const auto found = g.find_arc(SatNode::at(2, 2), SatNode::at(3, 2));
  REQUIRE(found);
  CHECK(g.arcs()[*found].capacity == 4);
  CHECK_FALSE(g.find_arc(SatNode::at(3, 2), SatNode::at(2, 2)));
}

TEST_CASE("tvg rejects malformed arcs") {
  CHECK_THROWS(TimeVaryingGraph(2, 2, {{SatNode::at(1, 1), SatNode::at(2, 2), 1}}, {}));
  CHECK_THROWS(TimeVaryingGraph(2, 1, {arc(1, 1, 1, 1)}, {}));
  CHECK_THROWS(TimeVaryingGraph(2, 1, {arc(1, 3, 1, 1)}, {}));
  CHECK_THROWS(TimeVaryingGraph(2, 1, {arc(1, 2, 1, -1)}, {}));
}

TEST_CASE("build_tvg from links") {
  const std::vector<LinkSpec> links = {{1, 2, 1, 1, 2}, {2, 3, 2, 3, 0}};
  const auto g = build_tvg(3, 2, links, Rational(7));
  CHECK(g.find_arc(SatNode::at(1, 1), SatNode::at(2, 1)));
  CHECK(g.find_arc(SatNode::at(2, 1), SatNode::at(1, 1)));
  CHECK(g.find_arc(SatNode::at(2, 2), SatNode::at(3, 2)));
  const auto back = g.find_arc(SatNode::at(3, 2), SatNode::at(2, 2));
  CHECK((!back || g.arcs()[*back].capacity == 0));
  for (const auto& a : g.cache_arcs()) CHECK(a.capacity == 7);
  const std::vector<LinkSpec> dup = {{1, 2, 1, 1, 1}, {2, 1, 1, 1, 1}};
  CHECK_THROWS(build_tvg(2, 1, dup, Rational(1)));
}

TEST_CASE("truncate and reachability") {
  std::vector<IntraArc> arcs;
  arcs.push_back(arc(1, 2, 1, 1));
  arcs.push_back(arc(2, 3, 2, Rational(1, 2)));
  arcs.push_back(arc(3, 1, 3, 1));
  TimeVaryingGraph g(3, 3, arcs, {Rational(1), {}});
  const auto t = truncate(g, 2);
  CHECK(t.snapshot_count() == 2);
  CHECK(t.intra_arc_count() == 2);
  CHECK(t.cache_arc_count() == 3);

  const auto all = reachable_set(g, SatNode::at(1, 1), Rational(1, 2));
  CHECK(all.contains(SatNode::at(3, 2)));
  const auto strong = reachable_set(g, SatNode::at(1, 1), Rational(1));
  CHECK_FALSE(strong.contains(SatNode::at(3, 2)));
  CHECK(strong.contains(SatNode::at(2, 3)));
  const auto mask = reachable_mask(g, SatNode::at(1, 1), Rational(1));
  for (int i = 0; i < g.node_count(); ++i) CHECK(mask[i] == strong.contains(g.node(i)));
}

TEST_CASE("capacity normalisation") {
  TimeVaryingGraph g(2, 2, {arc(1, 2, 1, Rational(5, 2)), arc(2, 1, 2, Rational(1, 3))},
                     {Rational(3), {}});
  const auto net = normalize_capacities(g, Rational(1, 2));
  REQUIRE(net.arc_count() == g.arcs().size());
  CHECK(net.arc(0).capacity == 5);
  CHECK(net.arc(1).capacity == 0);
  CHECK(net.arc(2).capacity == 6);
  const auto exact = as_flow_network(g);
  CHECK(exact.arc(1).capacity == Rational(1, 3));
}

TEST_CASE("expanded graph entry arcs") {
  TimeVaryingGraph g(2, 3, {arc(1, 2, 1, 1)}, {Rational(1), {}});
  const std::vector<ClientWeight> clients = {{2, Rational(3)}};
  const auto x = expand_with_client_sinks(g, clients, Rational(1));
  CHECK(x.node_count() == 7);
  REQUIRE(x.entry_arcs().size() == 3);
  for (const auto& e : x.entry_arcs()) CHECK(e.cost == 3 * e.snapshot);
  const auto net = x.flow_network(normalize_capacities(g, 1));
  CHECK(net.arc_count() == x.arc_count());
  CHECK(net.arc(net.arc_count() - 1).to == x.aux_index(0));
}

TEST_CASE("variant names round trip") {
  for (const char* name : {"1-UF-WS", "2-SF-MM", "mul-2-MM", "1-UF-CS", "2-SF-NCS", "mul-1-WS"}) {
    const auto p = parse_variant_name(name);
    CHECK(variant_name(p.phase, p.variant, p.model_count) == name);
  }
  CHECK_THROWS_AS(parse_variant_name("3-UF-WS"), InvalidArgument);
  CHECK_THROWS_AS(parse_variant_name("mul-1-CS"), InvalidArgument);
}
