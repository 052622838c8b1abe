#include "doctest.h"

#include "builders.hpp"
#include "satroute/errors.hpp"
#include "satroute/oracle.hpp"
#include "satroute/validate.hpp"

using namespace test;

TEST_CASE("unicast oracle on the line") {
  const auto inst = line3(download(UF, WS), {1, 2});
  const auto r = brute_force_unicast(inst, WS);
  REQUIRE(r.feasible);
  // both packets need 1->2 in snapshot 1; the heavier client 3 goes first
  CHECK(r.value == 1 * 2 + 2 * 1);
  CHECK(validate_solution(inst, r.witness).ok);
  CHECK(r.witness.solver == SolverKind::kOracle);
  const auto mm = brute_force_unicast(line3(download(UF, MM)), MM);
  CHECK(mm.value == 2);
}

TEST_CASE("oracle refuses large inputs") {
  const auto inst = line3(download(UF, WS));
  OracleBudget tiny;
  tiny.max_nodes = 2;
  CHECK_THROWS_AS(brute_force_unicast(inst, WS, tiny), BudgetExceeded);
}

TEST_CASE("multicast oracle shares arcs") {
  std::vector<IntraArc> arcs = {arc(1, 2, 1, 1), arc(2, 3, 1, 1), arc(2, 4, 1, 1)};
  const auto inst = make_instance(Phase::kDownload, 4, 1, arcs, {model(1, 1, {3, 4})},
                                  download(UF, MM, true));
  const auto r = brute_force_multicast(inst, MM);
  REQUIRE(r.feasible);
  CHECK(r.value == 1);
  CHECK(validate_solution(inst, r.witness).ok);
}

TEST_CASE("upload and selection oracles") {
  Model m{1, 1, {}};
  for (int c : {2, 3}) {
    Client cl;
    cl.id = c;
    cl.utility = c;
    m.clients.push_back(cl);
  }
  // both clients need the single unit arc 4 -> 1
  std::vector<IntraArc> arcs = {arc(2, 4, 1, 1), arc(3, 4, 1, 1), arc(4, 1, 1, 1)};
  const auto inst = make_instance(Phase::kUpload, 4, 1, arcs, {m}, upload(UF, false));
  CHECK_FALSE(brute_force_upload(inst).feasible);
  const auto cs = brute_force_cs(with_models(make_instance(Phase::kUpload, 4, 1, arcs, {m},
                                                           upload(UF, true)),
                                             {m}));
  REQUIRE(cs.feasible);
  CHECK(cs.value == 3);
}

TEST_CASE("sat and cover brute force") {
  CnfFormula f;
  f.variables = 2;
  const Literal a{1, false}, na{1, true}, b{2, false}, nb{2, true};
  f.clauses = {{a, b, b}, {na, b, b}, {a, nb, nb}, {na, nb, nb}};
  const auto r = sat_brute_force(f);
  CHECK_FALSE(r.satisfiable);
  CHECK(r.max_satisfied == 3);
  CHECK(f.count_satisfied(r.assignment) == 3);

  UndirectedGraph tri{3, {{1, 2}, {2, 3}, {1, 3}}};
  CHECK(mvc_brute_force(tri).size == 2);
  UndirectedGraph star{4, {{1, 2}, {1, 3}, {1, 4}}};
  const auto c = mvc_brute_force(star);
  CHECK(c.size == 1);
  CHECK(c.cover == std::vector<int>{1});
}
