#include "doctest.h"

#include "builders.hpp"
#include "satroute/download.hpp"
#include "satroute/errors.hpp"
#include "satroute/oracle.hpp"
#include "satroute/validate.hpp"

using namespace test;

namespace {

void require_valid(const RoutingInstance& inst, const RoutingSolution& sol) {
  const auto report = validate_solution(inst, sol);
  for (const auto& p : report.problems) INFO(p);
  CHECK(report.ok);
}

}  // namespace

TEST_CASE("1-UF-WS: adjacent client with weight 2") {
  auto inst = make_instance(Phase::kDownload, 2, 1, {arc(1, 2, 1, 3)}, {model(2, 1, {2}, {2})},
                            download(UF, WS));
  const auto sol = solve_1ufws(inst);
  CHECK(sol.status == SolveStatus::kOptimal);
  CHECK(sol.objective == 2);
  require_valid(inst, sol);
}

TEST_CASE("1-UF-WS: LINE3") {
  const auto inst = line3(download(UF, WS));
  const auto sol = solve_1ufws(inst);
  CHECK(sol.objective == 3);
  require_valid(inst, sol);
  CHECK(brute_force_unicast(inst, WS).value == 3);

  const auto heavy = line3(download(UF, WS), {1, 10});
  const auto s2 = solve_1ufws(heavy);
  CHECK(s2.objective == 12);
  CHECK(completion_snapshots(s2).at(3) == 1);
  require_valid(heavy, s2);
  CHECK(brute_force_unicast(heavy, WS).value == 12);
}

TEST_CASE("1-UF-WS: unreachable client is infeasible") {
  auto inst = make_instance(Phase::kDownload, 3, 2, {arc(1, 2, 1, 1)}, {model(1, 1, {2, 3})},
                            download(UF, WS));
  CHECK(solve_1ufws(inst).status == SolveStatus::kInfeasible);
}

TEST_CASE("1-UF-MM: adjacent, LINE3, zero capacity") {
  auto adj = make_instance(Phase::kDownload, 2, 2, {arc(1, 2, 1, 1)}, {model(1, 1, {2})},
                           download(UF, MM));
  CHECK(solve_1ufmm(adj).objective == 1);

  const auto inst = line3(download(UF, MM));
  for (auto mode : {MmSearch::kLinear, MmSearch::kBisection}) {
    const auto sol = solve_1ufmm(inst, {mode, LpBackend::kAuto});
    CHECK(sol.objective == 2);
    require_valid(inst, sol);
  }

  auto dead = make_instance(Phase::kDownload, 2, 2, {arc(1, 2, 1, 0), arc(1, 2, 2, 0)},
                            {model(1, 1, {2})}, download(UF, MM));
  CHECK(solve_1ufmm(dead).status == SolveStatus::kInfeasible);
}

TEST_CASE("1-SF-MM: forced split and parallel halves") {
  auto half = make_instance(Phase::kDownload, 2, 2, {arc(1, 2, 1, Rational(1, 2)), arc(1, 2, 2, Rational(1, 2))},
                            {model(1, 1, {2})}, download(SF, MM));
  const auto s = solve_1sfmm(half);
  CHECK(s.objective == 2);
  require_valid(half, s);

  CHECK(solve_1sfmm(line3(download(SF, MM))).objective == 2);

  // two half-capacity routes 1->2->4 and 1->3->4: UF impossible at k=1, SF fine
  std::vector<IntraArc> arcs{arc(1, 2, 1, Rational(1, 2)), arc(2, 4, 1, Rational(1, 2)),
                             arc(1, 3, 1, Rational(1, 2)), arc(3, 4, 1, Rational(1, 2))};
  auto par = make_instance(Phase::kDownload, 4, 1, arcs, {model(1, 1, {4})}, download(SF, MM));
  const auto sp = solve_1sfmm(par);
  CHECK(sp.objective == 1);
  CHECK(sp.paths.size() == 2);
  require_valid(par, sp);
  auto par_uf = make_instance(Phase::kDownload, 4, 1, arcs, {model(1, 1, {4})}, download(UF, MM));
  CHECK(solve_1ufmm(par_uf).status == SolveStatus::kInfeasible);
}

TEST_CASE("2-SF-MM: disjoint, overlapping, separate servers") {
  // model 1: 1->2, model 2: 3->4, disjoint
  auto disjoint = make_instance(Phase::kDownload, 4, 2, {arc(1, 2, 1, 1), arc(1, 4, 1, 1)},
                                {model(1, 1, {2}), model(1, 1, {4})}, download(SF, MM));
  CHECK(solve_2sfmm(disjoint).objective == 1);

  // client 2 in both models needs 2 units over a capacity-1 link
  std::vector<IntraArc> arcs;
  every_snapshot(arcs, 1, 2, 2, 1);
  auto overlap = make_instance(Phase::kDownload, 2, 2, arcs, {model(1, 1, {2}), model(1, 1, {2})},
                               download(SF, MM));
  const auto so = solve_2sfmm(overlap);
  CHECK(so.objective == 2);
  require_valid(overlap, so);

  // servers 1 and 2 both need the single link 3->4 to reach client 4
  std::vector<IntraArc> shared;
  for (int k = 1; k <= 2; ++k) {
    shared.push_back(arc(1, 3, k, 1));
    shared.push_back(arc(2, 3, k, 1));
    shared.push_back(arc(3, 4, k, 1));
  }
  auto sep = make_instance(Phase::kDownload, 4, 2, shared, {model(1, 1, {4}), model(1, 2, {4})},
                           download(SF, MM));
  const auto ss = solve_2sfmm(sep);
  CHECK(ss.objective == 2);
  require_valid(sep, ss);
  CHECK(brute_force_unicast(sep, MM).value == 2);
}

TEST_CASE("mul-1-MM: chain, threshold, disconnected") {
  auto chain = make_instance(Phase::kDownload, 3, 1, {arc(1, 2, 1, 1), arc(2, 3, 1, 1)},
                             {model(1, 1, {2, 3})}, download(UF, MM, true));
  const auto sc = solve_mul1mm(chain);
  CHECK(sc.objective == 1);
  require_valid(chain, sc);

  auto thr = make_instance(Phase::kDownload, 3, 2,
                           {arc(1, 3, 1, Rational(1, 2)), arc(1, 3, 2, 1)},
                           {model(1, 1, {3})}, download(UF, MM, true));
  CHECK(solve_mul1mm(thr).objective == 2);

  auto cut = make_instance(Phase::kDownload, 3, 1, {arc(1, 2, 1, 1)}, {model(1, 1, {3})},
                           download(UF, MM, true));
  CHECK(solve_mul1mm(cut).status == SolveStatus::kInfeasible);
}

TEST_CASE("mul-1-WS: chain, weighted, late client") {
  auto chain = make_instance(Phase::kDownload, 3, 1, {arc(1, 2, 1, 1), arc(2, 3, 1, 1)},
                             {model(1, 1, {2, 3})}, download(UF, WS, true));
  const auto s = solve_mul1ws(chain);
  CHECK(s.objective == 2);
  require_valid(chain, s);
  CHECK(brute_force_multicast(chain, WS).value == 2);

  std::vector<IntraArc> arcs;
  every_snapshot(arcs, 1, 2, 3, 1);
  auto adj = make_instance(Phase::kDownload, 2, 3, arcs, {model(1, 1, {2}, {7})},
                           download(UF, WS, true));
  CHECK(solve_mul1ws(adj).objective == 7);

  auto late = make_instance(Phase::kDownload, 3, 2, {arc(1, 2, 1, 1), arc(1, 3, 2, 1)},
                            {model(1, 1, {2, 3}, {1, 5})}, download(UF, WS, true));
  const auto sl = solve_mul1ws(late);
  CHECK(sl.objective == 1 + 2 * 5);
  require_valid(late, sl);
}

TEST_CASE("exact download agrees with polynomial solvers on LINE3") {
  for (auto v : {download(UF, WS), download(UF, MM), download(SF, MM), download(SF, WS),
                 download(UF, WS, true), download(UF, MM, true)}) {
    const auto inst = line3(v);
    const auto exact = solve_exact_download(v, inst);
    require_valid(inst, exact);
    if (v.multicast) {
      CHECK(exact.objective == brute_force_multicast(inst, v.objective).value);
    } else {
      CHECK(exact.objective == brute_force_unicast(inst, v.objective).value);
    }
  }
}

TEST_CASE("exact download refuses oversized instances") {
  std::vector<IntraArc> arcs;
  for (int i = 1; i < 40; ++i) every_snapshot(arcs, i, i + 1, 20, 1);
  auto big = make_instance(Phase::kDownload, 40, 20, arcs, {model(1, 1, {40})}, download(UF, WS));
  CHECK_THROWS_AS(solve_exact_download(download(UF, WS), big), BudgetExceeded);
}
