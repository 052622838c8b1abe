#include "doctest.h"

#include <random>

#include "satroute/errors.hpp"
#include "satroute/flow.hpp"
#include "satroute/lp.hpp"
#include "satroute/oracle.hpp"
#include "satroute/random.hpp"

using namespace satroute;

namespace {

// 0 -> 1 -> 3 and 0 -> 2 -> 3, the upper route cheaper but narrow
FlowNetwork diamond() {
  FlowNetwork net(4);
  net.add_arc(0, 1, 1, 1);
  net.add_arc(1, 3, 1, 1);
  net.add_arc(0, 2, 3, 2);
  net.add_arc(2, 3, 3, 2);
  net.set_supply(0, 2);
  net.set_supply(3, -2);
  return net;
}

}  // namespace

TEST_CASE("min-cost flow on a diamond") {
  const auto net = diamond();
  const auto f = min_cost_flow(net);
  REQUIRE(f);
  CHECK(f->total_cost == 6);
  CHECK(f->flow[0] == 1);
  CHECK(f->flow[2] == 1);
  CHECK(check_flow_conservation(net, std::span<const Integer>(f->flow)));
}

TEST_CASE("min-cost flow infeasible and input errors") {
  auto net = diamond();
  net.set_supply(0, 5);
  net.set_supply(3, -5);
  CHECK_FALSE(min_cost_flow(net));

  FlowNetwork frac(2);
  frac.add_arc(0, 1, Rational(1, 2));
  CHECK_THROWS_AS(min_cost_flow(frac), InvalidArgument);

  FlowNetwork unbalanced(2);
  unbalanced.add_arc(0, 1, 1);
  unbalanced.set_supply(0, 1);
  CHECK_THROWS_AS(min_cost_flow(unbalanced), InvalidArgument);

  FlowNetwork cycle(2);
  cycle.add_arc(0, 1, 1, -1);
  cycle.add_arc(1, 0, 1, -1);
  CHECK_THROWS_AS(min_cost_flow(cycle), NegativeCycle);
}

TEST_CASE("min-cost flow with negative and fractional costs") {
  FlowNetwork net(3);
  net.add_arc(0, 1, 2, Rational(-1, 2));
  net.add_arc(1, 2, 2, Rational(1, 3));
  net.add_arc(0, 2, 2, 0);
  net.set_supply(0, 3);
  net.set_supply(2, -3);
  const auto f = min_cost_flow(net);
  REQUIRE(f);
  CHECK(f->total_cost == Rational(-1, 3));
}

TEST_CASE("min-cost flow matches enumeration on random networks") {
  std::mt19937_64 rng(7);
  int feasible = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = static_cast<int>(uniform_int(rng, 2, 5));
    FlowNetwork net(n);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && bernoulli(rng, 2, 5)) net.add_arc(u, v, uniform_int(rng, 0, 2), uniform_int(rng, 0, 4));
      }
    }
    const std::int64_t s = uniform_int(rng, 0, 2);
    net.set_supply(0, s);
    net.add_supply(n - 1, -s);
    const auto f = min_cost_flow(net);
    const auto best = brute_force_min_cost_flow(net);
    REQUIRE(f.has_value() == best.has_value());
    if (!f) continue;
    ++feasible;
    CHECK(f->total_cost == *best);
  }
  CHECK(feasible > 20);
}

TEST_CASE("max flow") {
  FlowNetwork net(4);
  net.add_arc(0, 1, Rational(3, 2));
  net.add_arc(0, 2, 1);
  net.add_arc(1, 2, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 2);
  const auto r = max_flow(net, 0, 3);
  CHECK(r.value == Rational(5, 2));
  Rational out = r.flow[0] + r.flow[1];
  CHECK(out == r.value);
  for (std::size_t a = 0; a < net.arc_count(); ++a) CHECK(r.flow[a] <= net.arc(a).capacity);
}

TEST_CASE("fractional feasibility backends agree") {
  FlowNetwork net(4);
  net.add_arc(0, 1, Rational(1, 2));
  net.add_arc(1, 3, 1);
  net.add_arc(0, 2, Rational(1, 3));
  net.add_arc(2, 3, 1);
  const std::vector<Commodity> ok = {{{{0, Rational(5, 6)}}, {{3, Rational(5, 6)}}}};
  const std::vector<Commodity> bad = {{{{0, 1}}, {{3, 1}}}};
  for (auto backend : {LpBackend::kNetwork, LpBackend::kSimplex, LpBackend::kAuto}) {
    const auto a = fractional_feasibility(net, ok, backend);
    CHECK(a.feasible);
    CHECK(*a.min_total_slack == 0);
    const auto b = fractional_feasibility(net, bad, backend);
    CHECK_FALSE(b.feasible);
    CHECK(*b.min_total_slack == Rational(1, 6));
  }
}

TEST_CASE("two commodities sharing a bottleneck") {
  // 0 -> 4 and 1 -> 5 both need the arc 2 -> 3
  FlowNetwork net(6);
  net.add_arc(0, 2, 1);
  net.add_arc(1, 2, 1);
  net.add_arc(2, 3, 1);
  net.add_arc(3, 4, 1);
  net.add_arc(3, 5, 1);
  const std::vector<Commodity> fits = {{{{0, Rational(1, 2)}}, {{4, Rational(1, 2)}}},
                                       {{{1, Rational(1, 2)}}, {{5, Rational(1, 2)}}}};
  const std::vector<Commodity> over = {{{{0, Rational(2, 3)}}, {{4, Rational(2, 3)}}},
                                       {{{1, Rational(1, 2)}}, {{5, Rational(1, 2)}}}};
  for (auto backend : {LpBackend::kSimplex, LpBackend::kAuto}) {
    const auto a = fractional_feasibility(net, fits, backend);
    REQUIRE(a.feasible);
    CHECK(a.flow->commodity_flow[0][2] + a.flow->commodity_flow[1][2] <= 1);
    const auto b = fractional_feasibility(net, over, backend);
    CHECK_FALSE(b.feasible);
    CHECK(*b.min_total_slack == Rational(1, 6));
  }
  CHECK_THROWS_AS(fractional_feasibility(net, fits, LpBackend::kNetwork), InvalidArgument);
  const std::vector<Commodity> lopsided = {{{{0, 1}}, {{4, 2}}}};
  CHECK_THROWS_AS(fractional_feasibility(net, lopsided), InvalidArgument);
}

TEST_CASE("flow decomposition") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 3, 2);
  net.add_arc(0, 2, 2);
  net.add_arc(2, 3, 2);
  net.add_arc(1, 2, 1);
  net.add_arc(2, 1, 1);
  // one unit through each side plus a 1-2-1 cycle
  const std::vector<Rational> flow = {1, 1, Rational(1, 2), Rational(1, 2), 1, 1};
  const std::vector<Rational> excess = {Rational(3, 2), 0, 0, Rational(-3, 2)};
  const auto paths = decompose_flow(net, flow, excess);
  Rational total = 0;
  for (const auto& p : paths) {
    total += p.amount;
    CHECK(net.arc(p.arcs.front()).from == 0);
    CHECK(net.arc(p.arcs.back()).to == 3);
    for (std::size_t i = 1; i < p.arcs.size(); ++i) {
      CHECK(net.arc(p.arcs[i - 1]).to == net.arc(p.arcs[i]).from);
    }
  }
  CHECK(total == Rational(3, 2));
}

TEST_CASE("simplex statuses") {
  LinearProgram lp;
  const int x = lp.add_variable(-1);
  const int y = lp.add_variable(-1);
  lp.add_constraint({{x, 1}, {y, 2}}, ConstraintSense::kLessEqual, 4);
  lp.add_constraint({{x, 3}, {y, 1}}, ConstraintSense::kLessEqual, 6);
  const auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective == Rational(-14, 5));
  CHECK(s.values[x] == Rational(8, 5));
  CHECK(s.values[y] == Rational(6, 5));

  LinearProgram infeasible;
  const int z = infeasible.add_variable();
  infeasible.add_constraint({{z, 1}}, ConstraintSense::kGreaterEqual, 2);
  infeasible.add_constraint({{z, 1}}, ConstraintSense::kLessEqual, 1);
  CHECK(solve_lp(infeasible).status == LpStatus::kInfeasible);

  LinearProgram unbounded;
  const int w = unbounded.add_variable(-1);
  unbounded.add_constraint({{w, 1}}, ConstraintSense::kGreaterEqual, 1);
  CHECK(solve_lp(unbounded).status == LpStatus::kUnbounded);

  LinearProgram negative_rhs;
  const int v = negative_rhs.add_variable(1);
  negative_rhs.add_constraint({{v, -1}}, ConstraintSense::kLessEqual, -3);
  const auto r = solve_lp(negative_rhs);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.values[v] == 3);

  CHECK_THROWS_AS(lp.add_constraint({{9, 1}}, ConstraintSense::kEqual, 0), InvalidArgument);
}
