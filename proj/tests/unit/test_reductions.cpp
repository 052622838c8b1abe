#include <doctest.h>

#include "builders.hpp"
#include "satroute/errors.hpp"
#include "satroute/oracle.hpp"
#include "satroute/reductions.hpp"
#include "satroute/solver.hpp"
#include "satroute/validate.hpp"

using namespace test;

namespace {

Literal pos(int v) { return {v, false}; }
Literal neg(int v) { return {v, true}; }

CnfFormula formula(int m, std::vector<Clause> clauses) { return {m, std::move(clauses)}; }

// (x1|x2|x3) & (~x1|~x2|~x3) & (x1|~x2|x3)
CnfFormula sat3() {
  return formula(3, {{pos(1), pos(2), pos(3)}, {neg(1), neg(2), neg(3)}, {pos(1), neg(2), pos(3)}});
}

// x1 & ~x1
CnfFormula unsat1() { return formula(1, {{pos(1), pos(1), pos(1)}, {neg(1), neg(1), neg(1)}}); }

// (x1|x2) & (~x1|x2) & (x1|~x2) & (~x1|~x2)
CnfFormula unsat2() {
  return formula(2, {{pos(1), pos(2), pos(2)},
                     {neg(1), pos(2), pos(2)},
                     {pos(1), neg(2), neg(2)},
                     {neg(1), neg(2), neg(2)}});
}

std::optional<Rational> cap(const RoutingInstance& inst, int u, int v, int k) {
  for (const auto& a : inst.tvg.intra_arc_list()) {
    if (a.from == SatNode::at(u, k) && a.to == SatNode::at(v, k)) return a.capacity;
  }
  return std::nullopt;
}

RoutingSolution solved(const RoutingInstance& inst) {
  auto sol = solve(inst);
  auto report = validate_solution(inst, sol);
  INFO(report.problems.size());
  CHECK(report.ok);
  return sol;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto f : {Family::k3SatTo1SfWs, Family::k3SatTo2UfMm, Family::k3SatTo2UfNcs,
                 Family::kMax3SatTo2UfCs, Family::kMvcTo1SfCs, Family::k2EdpToMul2Mm}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("3sat"), InvalidArgument);
}

TEST_CASE("gadgets reject reducible formulas") {
  auto f = formula(2, {{pos(1), pos(2), pos(2)}, {neg(1), pos(2), pos(2)}});
  CHECK_FALSE(f.irreducible());
  CHECK_THROWS_AS(reduce_3sat_to_1sfws(f), InvalidArgument);
  CHECK_THROWS_AS(reduce_3sat_to_2ufmm(f), InvalidArgument);
  CHECK_THROWS_AS(reduce_3sat_to_2ufncs(f), InvalidArgument);
  CHECK_THROWS_AS(reduce_max3sat_to_2ufcs(f), InvalidArgument);
}

TEST_CASE("1-SF-WS gadget structure") {
  const auto f = sat3();
  const auto art = reduce_3sat_to_1sfws(f);
  const auto& inst = art.instance;
  CHECK(inst.tvg.satellite_count() == 3 * 3 + 3 + 1);
  CHECK(inst.tvg.snapshot_count() == 2);
  CHECK(inst.models[0].size == 1);
  CHECK(inst.models[0].clients.size() == 2 * 3 + 3);
  // clause e1 is satellite 11; n = 3
  REQUIRE(cap(inst, 1, 11, 1));
  CHECK(*cap(inst, 1, 11, 1) == Rational(3, 4));
  // x1 in e1, so the arc comes from ~x1 (satellite 4)
  REQUIRE(cap(inst, 4, 11, 1));
  CHECK(*cap(inst, 4, 11, 1) == Rational(1, 4));
  CHECK(*cap(inst, 1, 2, 1) == Rational(7, 4));

  int clause_arcs_1 = 0, clause_arcs_2 = 0;
  for (const auto& a : inst.tvg.intra_arc_list()) {
    if (a.to.satellite >= 11) ++(a.to.snapshot == 1 ? clause_arcs_1 : clause_arcs_2);
  }
  CHECK(clause_arcs_1 == 4 * 3);
  CHECK(clause_arcs_2 == 0);
  CHECK(inst.label(4) == "~x1");

  const auto narrow = reduce_3sat_to_1sfws(f, narrow_hub_capacity(3));
  CHECK(*cap(narrow.instance, 1, 2, 1) == Rational(4, 3));
}

TEST_CASE("1-SF-WS gadget decides small formulas") {
  // m=2, n=2 satisfiable: (x1|x2) & (~x1|~x2)
  const auto f = formula(2, {{pos(1), pos(2), pos(2)}, {neg(1), neg(2), neg(2)}});
  const auto art = reduce_3sat_to_1sfws(f);
  const auto sol = solved(art.instance);
  CHECK(sol.status == SolveStatus::kOptimal);
  CHECK(sol.objective == 3 * 2 + 2);
  for (const auto& a : sol.arrivals) CHECK(a.snapshot <= 2);
  CHECK(decide(art, sol));

  const auto no = reduce_3sat_to_1sfws(unsat1());
  CHECK_FALSE(decide(no, solved(no.instance)));
}

TEST_CASE("2-UF-MM gadget") {
  const auto f = formula(3, {{pos(1), pos(2), pos(3)},
                             {neg(1), neg(2), neg(3)},
                             {pos(1), neg(2), pos(3)},
                             {neg(1), pos(2), neg(3)}});
  const auto art = reduce_3sat_to_2ufmm(f);
  const auto& inst = art.instance;
  CHECK(inst.tvg.satellite_count() == 3 * 3 + 4 + 1);
  CHECK(inst.models[0].size == 4);
  CHECK(inst.models[1].size == 1);
  for (int l = 1; l <= 3; ++l) {
    const int x = 2 + 3 * (l - 1);
    CHECK(*cap(inst, 1, x, 1) == 4);
    CHECK(*cap(inst, x, x + 2, 1) == 4);
    CHECK(*cap(inst, 1, x + 1, 1) == 4);
    CHECK(*cap(inst, x + 1, x + 2, 1) == 4);
  }
  const auto sol = solved(inst);
  CHECK(sol.solved());
  CHECK(sol.objective == 1);
  CHECK(decide(art, sol));

  const auto no = reduce_3sat_to_2ufmm(unsat2());
  const auto nsol = solve(no.instance);
  CHECK(nsol.status == SolveStatus::kInfeasible);
  CHECK_FALSE(decide(no, nsol));
}

TEST_CASE("2-UF-NCS gadget is the reversed 2-UF-MM gadget") {
  const auto f = sat3();
  const auto down = reduce_3sat_to_2ufmm(f).instance;
  const auto art = reduce_3sat_to_2ufncs(f);
  const auto& up = art.instance;
  CHECK(up.phase == Phase::kUpload);
  CHECK(up.tvg.intra_arc_list().size() == down.tvg.intra_arc_list().size());
  for (const auto& a : down.tvg.intra_arc_list()) {
    const auto r = cap(up, a.to.satellite, a.from.satellite, 1);
    REQUIRE(r);
    CHECK(*r == a.capacity);
  }
  CHECK(decide(art, solved(up)));
  CHECK_FALSE(decide(reduce_3sat_to_2ufncs(unsat2()), solve(reduce_3sat_to_2ufncs(unsat2()).instance)));
}

TEST_CASE("2-UF-CS gadget utilities") {
  const auto f = sat3();
  const auto art = reduce_max3sat_to_2ufcs(f);
  CHECK(art.instance.models[0].clients[0].utility == 4);
  CHECK(art.instance.models[1].clients[0].utility == 1);

  // satisfiable, m=2, n=2: utility 2*3 + 2
  const auto g = formula(2, {{pos(1), pos(2), pos(2)}, {neg(1), neg(2), neg(2)}});
  const auto sol = solved(reduce_max3sat_to_2ufcs(g).instance);
  CHECK(sol.objective == 8);
  CHECK(satisfied_clauses_from_utility(g, sol.objective) == 2);

  // x1 & ~x1: one of two clauses
  const auto h = unsat1();
  const auto hsol = solved(reduce_max3sat_to_2ufcs(h).instance);
  CHECK(hsol.objective == 1 * 3 + 1);
  CHECK(decide(reduce_max3sat_to_2ufcs(h, 1), hsol));
  CHECK_FALSE(decide(reduce_max3sat_to_2ufcs(h), hsol));
}

TEST_CASE("1-SF-CS gadget from vertex cover") {
  const UndirectedGraph triangle{3, {{1, 2}, {2, 3}, {1, 3}}};
  const auto two = reduce_mvc_to_1sfcs(triangle, 2);
  CHECK(two.instance.models[0].size == 3);
  REQUIRE(cap(two.instance, 2, 1, 1));
  CHECK(*cap(two.instance, 2, 1, 1) == 3);
  CHECK(decide(two, solved(two.instance)));
  const auto one = reduce_mvc_to_1sfcs(triangle, 1);
  CHECK_FALSE(decide(one, solved(one.instance)));

  const UndirectedGraph edge{2, {{1, 2}}};
  const auto e = reduce_mvc_to_1sfcs(edge, 1);
  CHECK(e.instance.models[0].size == 1);
  CHECK(decide(e, solved(e.instance)));

  const UndirectedGraph empty{2, {}};
  CHECK(decide(reduce_mvc_to_1sfcs(empty, 2), solve(reduce_mvc_to_1sfcs(empty, 2).instance)));

  CHECK_THROWS_AS(reduce_mvc_to_1sfcs(triangle, 0), InvalidArgument);
  CHECK_THROWS_AS(reduce_mvc_to_1sfcs(triangle, 4), InvalidArgument);
}

TEST_CASE("mul-2-MM gadget from disjoint paths") {
  // 1->5->2 and 3->6->4
  const DirectedGraph parallel{6, {{1, 5}, {5, 2}, {3, 6}, {6, 4}}};
  auto art = reduce_2edp_to_mul2mm(parallel, {1, 2}, {3, 4});
  CHECK(decide(art, solved(art.instance)));
  CHECK(two_disjoint_paths_brute_force(parallel, {1, 2}, {3, 4}));

  // both routes need the bridge 5->6
  const DirectedGraph bridge{6, {{1, 5}, {3, 5}, {5, 6}, {6, 2}, {6, 4}}};
  art = reduce_2edp_to_mul2mm(bridge, {1, 2}, {3, 4});
  CHECK_FALSE(decide(art, solve(art.instance)));
  CHECK_FALSE(two_disjoint_paths_brute_force(bridge, {1, 2}, {3, 4}));

  const DirectedGraph adjacent{4, {{1, 2}, {3, 4}}};
  art = reduce_2edp_to_mul2mm(adjacent, {1, 2}, {3, 4});
  CHECK(decide(art, solved(art.instance)));

  CHECK_THROWS_AS(reduce_2edp_to_mul2mm(adjacent, {1, 5}, {3, 4}), InvalidArgument);
  CHECK_THROWS_AS(reduce_2edp_to_mul2mm(adjacent, {1, 2}, {1, 4}), InvalidArgument);
}

TEST_CASE("formula enumeration") {
  const auto one = enumerate_irreducible_formulas(1, 2);
  // up to flipping x1: {x1,~x1} pairs over clauses {x1}, {~x1}, {x1,~x1}
  for (const auto& f : one) CHECK(f.irreducible());
  CHECK(one.size() == 3);
  const auto more = enumerate_irreducible_formulas(2, 3);
  for (const auto& f : more) CHECK(f.irreducible());

  std::mt19937_64 rng(7);
  auto f = random_irreducible_formula(3, 4, rng);
  REQUIRE(f);
  CHECK(f->irreducible());
  CHECK(f->clause_count() == 4);
  CHECK_FALSE(random_irreducible_formula(3, 1, rng));
}

TEST_CASE("graph enumeration counts isomorphism classes") {
  auto count = [](int n) {
    int c = 0;
    for (const auto& g : enumerate_graphs(n)) c += g.vertices == n;
    return c;
  };
  CHECK(count(1) == 1);
  CHECK(count(2) == 2);
  CHECK(count(3) == 4);
  CHECK(count(4) == 11);
  CHECK(count(5) == 34);
}

TEST_CASE("equivalence harness") {
  EquivalenceParams p;
  p.max_variables = 3;
  p.max_clauses = 4;
  const auto a = verify_reduction_equivalence(Family::k3SatTo2UfMm, p, 20, 11);
  CHECK(a.cases == 20);
  CHECK(a.agreements == 20);
  const auto b = verify_reduction_equivalence(Family::k3SatTo2UfMm, p, 20, 11);
  REQUIRE(b.details.size() == a.details.size());
  for (std::size_t i = 0; i < a.details.size(); ++i) CHECK(a.details[i].source == b.details[i].source);

  EquivalenceParams g;
  g.exhaustive = true;
  g.max_vertices = 4;
  const auto mvc = verify_reduction_equivalence(Family::kMvcTo1SfCs, g, 0, 0);
  CHECK(mvc.cases > 0);
  CHECK(mvc.disagreements == 0);
  CHECK(mvc.unresolved == 0);
}
