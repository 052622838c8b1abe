// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "satroute/arborescence.hpp"
#include "satroute/download.hpp"
#include "satroute/errors.hpp"
#include "satroute/flow.hpp"
#include "satroute/generators.hpp"
#include "satroute/io.hpp"
#include "satroute/oracle.hpp"
#include "satroute/random.hpp"
#include "satroute/reductions.hpp"
#include "satroute/segment_stack.hpp"
#include "satroute/solver.hpp"
#include "satroute/upload.hpp"
#include "satroute/validate.hpp"

using namespace satroute;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;  // first failure, for diagnosis

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  std::printf("%s %2d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(),
              since(t0));
  if (!out.pass) {
    std::printf("     first failure: %s\n", out.failure.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) { return uniform_int(rng, lo, hi); }
Rational frac(std::int64_t p, std::int64_t q) { Rational r(p, q); r.canonicalize(); return r; }

// ------------------------------------------------------------ criterion 1

FlowNetwork random_network(std::mt19937_64& rng) {
  const int n = static_cast<int>(pick(rng, 2, 12));
  FlowNetwork net(n);
  std::vector<int> potential(n);
  for (auto& p : potential) p = static_cast<int>(pick(rng, -3, 3));
  const int arcs = static_cast<int>(pick(rng, n - 1, n + 4));
  for (int a = 0; a < arcs; ++a) {
    const int u = static_cast<int>(pick(rng, 0, n - 1));
    int v = static_cast<int>(pick(rng, 0, n - 2));
    if (v >= u) ++v;
    // reduced costs are non-negative, so no cycle is negative
    const int cost = static_cast<int>(pick(rng, 0, 5)) + potential[u] - potential[v];
    net.add_arc(u, v, Rational(pick(rng, 0, 3)), Rational(cost));
  }
  const int pairs = static_cast<int>(pick(rng, 1, 3));
  for (int p = 0; p < pairs; ++p) {
    const int s = static_cast<int>(pick(rng, 0, n - 1));
    const int t = static_cast<int>(pick(rng, 0, n - 1));
    const Rational amount(pick(rng, 1, 3));
    net.add_supply(s, amount);
    net.add_supply(t, -amount);
  }
  return net;
}

Outcome criterion1() {
  Outcome out;
  std::mt19937_64 rng(1001);
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto net = random_network(rng);
    const auto fast = min_cost_flow(net);
    const auto slow = brute_force_min_cost_flow(net);
    if (fast.has_value() != slow.has_value()) {
      out.fail("network " + std::to_string(trial) + ": feasibility differs");
      continue;
    }
    if (!fast) continue;
    ++feasible;
    Rational cost = 0;
    for (std::size_t a = 0; a < net.arc_count(); ++a) cost += Rational(fast->flow[a]) * net.arc(a).cost;
    if (!check_flow_conservation(net, std::span<const Integer>(fast->flow))) {
      out.fail("network " + std::to_string(trial) + ": flow violates conservation or capacity");
    } else if (cost != fast->total_cost || fast->total_cost != *slow) {
      out.fail("network " + std::to_string(trial) + ": cost " + to_string(fast->total_cost) +
               " vs enumeration " + to_string(*slow));
    }
  }
  out.detail = "1000 networks, " + std::to_string(feasible) + " feasible, integral flows at the enumerated optimum";
  return out;
}

// ------------------------------------------------------------ criterion 2

struct RandomDownload {
  int sats, snaps;
  std::vector<IntraArc> arcs;
  std::map<int, Rational> weight;
};

RandomDownload random_download_graph(std::mt19937_64& rng) {
  RandomDownload g;
  g.sats = static_cast<int>(pick(rng, 2, 5));
  g.snaps = static_cast<int>(pick(rng, 1, 3));
  const int density = static_cast<int>(pick(rng, 25, 60));
  for (int k = 1; k <= g.snaps; ++k) {
    for (int i = 1; i <= g.sats; ++i) {
      for (int j = 1; j <= g.sats; ++j) {
        if (i != j && pick(rng, 0, 99) < density) {
          g.arcs.push_back({SatNode::at(i, k), SatNode::at(j, k), frac(pick(rng, 1, 4), 2)});
        }
      }
    }
  }
  for (int c = 1; c <= g.sats; ++c) g.weight[c] = Rational(pick(rng, 1, 3));
  return g;
}

Model random_model(std::mt19937_64& rng, const RandomDownload& g, int max_clients) {
  Model m;
  m.size = frac(pick(rng, 2, 3), 2);
  m.server = static_cast<int>(pick(rng, 1, g.sats));
  std::vector<int> others;
  for (int c = 1; c <= g.sats; ++c) {
    if (c != m.server) others.push_back(c);
  }
  std::shuffle(others.begin(), others.end(), rng);
  const int count = static_cast<int>(pick(rng, 1, std::min<int>(max_clients, others.size())));
  std::sort(others.begin(), others.begin() + count);
  for (int i = 0; i < count; ++i) {
    Client c;
    c.id = others[i];
    c.weight = g.weight.at(c.id);
    m.clients.push_back(c);
  }
  return m;
}

Variant dl(FlowKind f, Objective o, bool multicast = false) {
  Variant v;
  v.flow = f;
  v.objective = o;
  v.multicast = multicast;
  return v;
}

Outcome criterion2() {
  Outcome out;
  std::mt19937_64 rng(2002);
  struct Check {
    const char* name;
    Variant variant;
    int models;
    std::function<RoutingSolution(const RoutingInstance&)> solve;
  };
  const std::vector<Check> checks = {
      {"1-UF-WS", dl(FlowKind::kUnsplittable, Objective::kWeightedSum), 1, solve_1ufws},
      {"1-UF-MM", dl(FlowKind::kUnsplittable, Objective::kMinMax), 1,
       [](const RoutingInstance& i) { return solve_1ufmm(i); }},
      {"1-SF-MM", dl(FlowKind::kSplittable, Objective::kMinMax), 1,
       [](const RoutingInstance& i) { return solve_1sfmm(i); }},
      {"2-SF-MM", dl(FlowKind::kSplittable, Objective::kMinMax), 2,
       [](const RoutingInstance& i) { return solve_2sfmm(i); }},
      {"mul-1-MM", dl(FlowKind::kUnsplittable, Objective::kMinMax, true), 1, solve_mul1mm},
      {"mul-1-WS", dl(FlowKind::kUnsplittable, Objective::kWeightedSum, true), 1, solve_mul1ws},
  };
  int feasible = 0, compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_download_graph(rng);
    const Model first = random_model(rng, g, 3);
    const Model second = random_model(rng, g, 2);
    for (const auto& check : checks) {
      std::vector<Model> models{first};
      if (check.models == 2) models.push_back(second);
      const auto inst = make_instance(Phase::kDownload, g.sats, g.snaps, g.arcs, models, check.variant);
      const auto sol = check.solve(inst);
      const auto oracle = check.variant.multicast
                              ? brute_force_multicast(inst, check.variant.objective)
                              : brute_force_unicast(inst, check.variant.objective);
      ++compared;
      const std::string where = std::string(check.name) + " instance " + std::to_string(trial);
      if (sol.solved() != oracle.feasible) {
        out.fail(where + ": feasibility differs from the oracle");
        continue;
      }
      if (!sol.solved()) continue;
      ++feasible;
      if (sol.objective != oracle.value) {
        out.fail(where + ": objective " + to_string(sol.objective) + " vs oracle " + to_string(oracle.value));
      }
      const auto v = validate_solution(inst, sol);
      if (!v.ok) out.fail(where + ": invalid witness: " + v.problems.front());
    }
  }
  out.detail = std::to_string(compared) + " solver runs on 200 instances, " + std::to_string(feasible) +
               " feasible, all objectives equal to the oracle";
  return out;
}

// ------------------------------------------------------------ criterion 3

Outcome criterion3() {
  Outcome out;
  std::mt19937_64 rng(3003);
  int built = 0;
  while (built < 100) {
    // TVG with at most 6 nodes plus one sink per client
    const int sats = static_cast<int>(pick(rng, 2, 3));
    const int snaps = sats == 3 ? static_cast<int>(pick(rng, 1, 2)) : static_cast<int>(pick(rng, 1, 3));
    const int clients = static_cast<int>(pick(rng, 1, std::min(3, sats - 1 + 1)));
    Digraph g;
    g.node_count = sats * snaps + clients;
    auto id = [sats](int i, int k) { return (k - 1) * sats + (i - 1); };
    for (int k = 1; k <= snaps; ++k) {
      for (int i = 1; i <= sats; ++i) {
        for (int j = 1; j <= sats; ++j) {
          if (i != j && pick(rng, 0, 1)) g.arcs.push_back({id(i, k), id(j, k), 0});
        }
        if (k < snaps) g.arcs.push_back({id(i, k), id(i, k + 1), 0});
      }
    }
    std::vector<int> terminals;
    for (int c = 0; c < clients; ++c) {
      const int sink = sats * snaps + c;
      const int sat = static_cast<int>(pick(rng, 1, sats));
      const Rational w(pick(rng, 1, 3));
      for (int k = 1; k <= snaps; ++k) g.arcs.push_back({id(sat, k), sink, w * k});
      terminals.push_back(sink);
    }
    const int root = id(1, 1);
    // keep the nodes reachable from the root
    std::vector<bool> seen(g.node_count, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& a : g.arcs) {
        if (a.from == u && !seen[a.to]) seen[a.to] = true, stack.push_back(a.to);
      }
    }
    bool all_terminals = true;
    for (int t : terminals) all_terminals = all_terminals && seen[t];
    if (!all_terminals) continue;
    std::vector<int> renumber(g.node_count, -1);
    Digraph h;
    for (int v = 0; v < g.node_count; ++v) {
      if (seen[v]) renumber[v] = h.node_count++;
    }
    for (const auto& a : g.arcs) {
      if (seen[a.from] && seen[a.to]) h.arcs.push_back({renumber[a.from], renumber[a.to], a.cost});
    }
    for (int& t : terminals) t = renumber[t];
    ++built;

    const auto spanning = min_cost_arborescence(h, renumber[root]);
    const auto pruned = prune_to_steiner(h, spanning, terminals);
    const auto best = brute_force_steiner_arborescence(h, renumber[root], terminals);
    const std::string where = "graph " + std::to_string(built) + " (" + std::to_string(h.node_count) + " nodes)";
    if (!best) {
      out.fail(where + ": enumeration found no arborescence");
    } else if (spanning.total_cost != *best || pruned.total_cost != *best) {
      out.fail(where + ": arborescence cost " + to_string(spanning.total_cost) + ", pruned " +
               to_string(pruned.total_cost) + ", Steiner optimum " + to_string(*best));
    }
    if (!is_arborescence(h, spanning) || !is_arborescence(h, pruned)) out.fail(where + ": malformed arborescence");
    const std::set<int> term(terminals.begin(), terminals.end());
    for (int leaf : pruned.leaves(h)) {
      if (!term.count(leaf)) out.fail(where + ": pruned leaf " + std::to_string(leaf) + " is not a terminal");
    }
  }
  out.detail = "100 graphs, spanning and pruned costs equal the Steiner optimum, leaves are terminals";
  return out;
}

// ------------------------------------------------------------ criteria 4-7

Outcome all_agree(std::initializer_list<EquivalenceReport> reports) {
  Outcome out;
  std::ostringstream detail;
  bool first = true;
  for (const auto& r : reports) {
    if (!first) detail << "; ";
    first = false;
    detail << r.family << " " << (r.parameters.rfind("exhaustive", 0) == 0 ? "exhaustive" : "random") << " "
           << r.agreements << "/" << r.cases;
    if (r.agreements != r.cases) {
      for (const auto& c : r.details) {
        if (!c.agree) {
          out.fail(r.family + " on " + c.source + ": expected " + c.expected + ", got " + c.actual +
                   (c.witness.empty() ? "" : " (" + c.witness + ")"));
          break;
        }
      }
    }
  }
  out.detail = detail.str();
  return out;
}

EquivalenceParams exhaustive_formulas() {
  EquivalenceParams p;
  p.exhaustive = true;
  p.max_variables = 3;
  p.max_clauses = 3;
  return p;
}

EquivalenceParams random_formulas() {
  EquivalenceParams p;
  p.max_variables = 4;
  p.max_clauses = 5;
  return p;
}

Outcome criterion4() {
  return all_agree({verify_reduction_equivalence(Family::k3SatTo2UfMm, exhaustive_formulas(), 0, 4),
                    verify_reduction_equivalence(Family::k3SatTo2UfMm, random_formulas(), 100, 4)});
}

Outcome criterion5() {
  return all_agree({verify_reduction_equivalence(Family::k3SatTo2UfNcs, exhaustive_formulas(), 0, 5),
                    verify_reduction_equivalence(Family::k3SatTo2UfNcs, random_formulas(), 100, 5),
                    verify_reduction_equivalence(Family::kMax3SatTo2UfCs, exhaustive_formulas(), 0, 5),
                    verify_reduction_equivalence(Family::kMax3SatTo2UfCs, random_formulas(), 100, 5)});
}

Outcome criterion6() {
  EquivalenceParams p;
  p.exhaustive = true;
  p.max_vertices = 5;
  auto out = all_agree({verify_reduction_equivalence(Family::kMvcTo1SfCs, p, 0, 6)});
  out.detail += " (every graph up to isomorphism with at most 5 vertices, every cover size)";
  return out;
}

Outcome criterion7(const std::string& report_path) {
  Outcome out;
  Json combined = Json::array();
  std::ostringstream detail;
  for (auto hub : {HubSetting::kNarrow, HubSetting::kSpare}) {
    auto p = exhaustive_formulas();
    p.hub = hub;
    const auto a = verify_reduction_equivalence(Family::k3SatTo1SfWs, p, 0, 7);
    const auto b = verify_reduction_equivalence(Family::k3SatTo1SfWs, p, 0, 7);
    const auto ja = report_to_json(a);
    if (ja != report_to_json(b)) out.fail(std::string("report for hub ") + to_string(hub) + " is not deterministic");
    if (a.cases == 0) out.fail("no formulas enumerated");
    if (a.unresolved > 0) out.fail(std::to_string(a.unresolved) + " cases hit the search budget");
    combined.push_back(ja);
    char rate[64];
    std::snprintf(rate, sizeof rate, "%.4f", a.agreement_rate());
    detail << "hub " << to_string(hub) << " agreement " << rate << " (" << a.agreements << "/" << a.cases << "); ";
  }
  std::ofstream(report_path) << format_json(combined);
  out.detail = detail.str() + "deterministic, report in " + report_path;
  return out;
}

// ------------------------------------------------------------ criterion 8

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(8008);
  int ncs_feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int sats = static_cast<int>(pick(rng, 3, 7));
    const int snaps = static_cast<int>(pick(rng, 1, 2));
    std::vector<IntraArc> arcs;
    for (int k = 1; k <= snaps; ++k) {
      for (int i = 1; i <= sats; ++i) {
        for (int j = 1; j <= sats; ++j) {
          if (i != j && pick(rng, 0, 99) < 35) arcs.push_back({SatNode::at(i, k), SatNode::at(j, k), Rational(pick(rng, 1, 3))});
        }
      }
    }
    Model m;
    m.size = Rational(pick(rng, 1, 2));
    m.server = static_cast<int>(pick(rng, 1, sats));
    for (int c = 1; c <= sats && m.clients.size() < 6; ++c) {
      if (c == m.server || pick(rng, 0, 3) == 0) continue;
      Client cl;
      cl.id = c;
      cl.utility = Rational(pick(rng, 0, 5));
      cl.start = static_cast<int>(pick(rng, 1, snaps));
      m.clients.push_back(cl);
    }
    if (m.clients.empty()) {
      --trial;
      continue;
    }
    Variant cs;
    cs.client_selection = true;
    const auto inst = make_instance(Phase::kUpload, sats, snaps, arcs, {m}, cs);
    const auto sol = solve_1ufcs(inst);
    const auto oracle = brute_force_cs(inst);
    const std::string where = "instance " + std::to_string(trial);
    if (sol.objective != oracle.value) {
      out.fail(where + ": utility " + to_string(sol.objective) + " vs subset enumeration " + to_string(oracle.value));
    }
    const auto v = validate_solution(inst, sol);
    if (!v.ok) out.fail(where + ": invalid selection: " + v.problems.front());
    Variant ncs;
    const auto full = solve_1ufncs(make_instance(Phase::kUpload, sats, snaps, arcs, {m}, ncs));
    if (full.solved()) {
      ++ncs_feasible;
      if (sol.selected.size() != m.clients.size()) out.fail(where + ": NCS feasible but not every client selected");
    }
  }
  out.detail = "200 instances, utilities equal subset enumeration; " + std::to_string(ncs_feasible) +
               " NCS-feasible instances select every client";
  return out;
}

// ------------------------------------------------------------ criterion 9

PathAssignment path(std::initializer_list<int> sats, Rational amount) {
  PathAssignment p;
  p.client = 4;
  p.amount = std::move(amount);
  for (int s : sats) p.nodes.push_back(SatNode::at(s, 1));
  return p;
}

Outcome criterion9() {
  Outcome out;
  const std::map<int, std::string> labels{{1, "A"}, {2, "B"}, {3, "C"}, {4, "D"}, {5, "E"}, {6, "F"}};
  auto expect = [&](const RoutingSolution& sol, const std::vector<std::string>& want) {
    std::vector<std::string> got;
    for (const auto& s : render_segment_stacks(sol, labels)) got.push_back(to_string(s));
    if (got != want) {
      std::string g;
      for (const auto& s : got) g += s + " ";
      out.fail("rendered " + g);
    }
  };
  RoutingSolution unicast;
  unicast.paths = {path({1, 2, 3, 4}, 1)};
  expect(unicast, {"[B, C, D]"});

  RoutingSolution split;
  split.paths = {path({1, 2, 3, 4}, Rational(1, 2)), path({1, 5, 6, 4}, Rational(1, 2))};
  expect(split, {"[B, C, D]", "[E, F, D]"});

  RoutingSolution multicast;
  auto n = [](int s) { return SatNode::at(s, 1); };
  multicast.trees = {TreeAssignment{0, {{n(1), n(2)}, {n(2), n(3)}, {n(2), n(4)}, {n(4), n(5)}, {n(4), n(6)}}}};
  expect(multicast, {"[A, B, Replication, [C], [D, Replication, [E], [F]]]"});
  out.detail = "[B, C, D]; [B, C, D] + [E, F, D]; [A, B, Replication, [C], [D, Replication, [E], [F]]]";
  return out;
}

// ------------------------------------------------------------ criterion 10

Outcome criterion10() {
  Outcome out;
  RingParams ring;
  ring.planes = 10;
  ring.sats_per_plane = 10;
  ring.snapshots = 20;
  ring.intra_capacity = 2;
  ring.cross_capacity = 1;
  ring.cross_shift = 1;
  const auto tvg = generate_ring_constellation(ring);
  const auto arcs = tvg.intra_arc_list();
  const int I = tvg.satellite_count(), K = tvg.snapshot_count();

  auto model = [](int server, std::initializer_list<int> clients, int start = 1) {
    Model m{1, server, {}};
    for (int c : clients) {
      Client cl;
      cl.id = c;
      cl.start = start;
      m.clients.push_back(cl);
    }
    return m;
  };
  const Model one = model(1, {15, 37, 58, 73, 99});
  const Model two = model(46, {24, 62, 88});
  const Model up_one = model(1, {15, 37, 58, 73, 99}, 2);
  const Model up_two = model(46, {24, 62, 88}, 3);

  auto down = [&](Variant v, std::vector<Model> ms) {
    return make_instance(Phase::kDownload, I, K, arcs, std::move(ms), v);
  };
  auto up = [&](FlowKind f, bool cs, std::vector<Model> ms) {
    Variant v;
    v.flow = f;
    v.client_selection = cs;
    return make_instance(Phase::kUpload, I, K, arcs, std::move(ms), v);
  };

  struct Run {
    const char* name;
    std::function<RoutingSolution()> solve;
  };
  const auto ws = dl(FlowKind::kUnsplittable, Objective::kWeightedSum);
  const auto mm = dl(FlowKind::kUnsplittable, Objective::kMinMax);
  const auto sfmm = dl(FlowKind::kSplittable, Objective::kMinMax);
  const std::vector<Run> runs = {
      {"1-UF-WS", [&] { return solve_1ufws(down(ws, {one})); }},
      {"1-UF-MM", [&] { return solve_1ufmm(down(mm, {one})); }},
      {"1-SF-MM", [&] { return solve_1sfmm(down(sfmm, {one})); }},
      {"2-SF-MM", [&] { return solve_2sfmm(down(sfmm, {one, two})); }},
      {"mul-1-MM", [&] { return solve_mul1mm(down(dl(FlowKind::kUnsplittable, Objective::kMinMax, true), {one})); }},
      {"mul-1-WS", [&] { return solve_mul1ws(down(dl(FlowKind::kUnsplittable, Objective::kWeightedSum, true), {one})); }},
      {"1-SF-NCS", [&] { return solve_1sfncs(up(FlowKind::kSplittable, false, {up_one})); }},
      {"2-SF-NCS", [&] { return solve_2sfncs(up(FlowKind::kSplittable, false, {up_one, up_two})); }},
      {"1-UF-NCS", [&] { return solve_1ufncs(up(FlowKind::kUnsplittable, false, {up_one})); }},
      {"1-UF-CS", [&] { return solve_1ufcs(up(FlowKind::kUnsplittable, true, {up_one})); }},
  };
  double slowest = 0;
  std::string slowest_name;
  for (const auto& run : runs) {
    const auto t0 = Clock::now();
    const auto sol = run.solve();
    const double secs = since(t0);
    if (secs > slowest) slowest = secs, slowest_name = run.name;
    if (secs >= 30.0) out.fail(std::string(run.name) + " took " + std::to_string(secs) + "s");
    if (!sol.solved()) out.fail(std::string(run.name) + " found no solution on the ring");
  }

  struct Refusal {
    const char* name;
    std::function<void()> solve;
  };
  const SearchLimits limits;
  const std::vector<Refusal> refusals = {
      {"1-SF-WS", [&] { solve_exact_download(dl(FlowKind::kSplittable, Objective::kWeightedSum), down(dl(FlowKind::kSplittable, Objective::kWeightedSum), {one}), limits); }},
      {"2-UF-MM", [&] { solve_exact_download(mm, down(mm, {one, two}), limits); }},
      {"mul-2-MM", [&] { auto v = dl(FlowKind::kUnsplittable, Objective::kMinMax, true); solve_exact_download(v, down(v, {one, two}), limits); }},
      {"2-UF-NCS", [&] { Variant v; solve_exact_upload(v, up(FlowKind::kUnsplittable, false, {up_one, up_two}), limits); }},
      {"1-SF-CS", [&] { Variant v; v.flow = FlowKind::kSplittable; v.client_selection = true; solve_exact_upload(v, up(FlowKind::kSplittable, true, {up_one}), limits); }},
  };
  int refused = 0;
  for (const auto& r : refusals) {
    const auto t0 = Clock::now();
    try {
      r.solve();
      out.fail(std::string(r.name) + " exact search did not refuse");
    } catch (const BudgetExceeded&) {
      ++refused;
    }
    if (since(t0) > 30.0) out.fail(std::string(r.name) + " took too long to refuse");
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "I=%d K=%d (%d TVG nodes), 10 polynomial solvers, slowest %s %.2fs; %d/5 exact solvers refused",
                I, K, tvg.node_count(), slowest_name.c_str(), slowest, refused);
  out.detail = buf;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string report_path = argc > 1 ? argv[1] : "hub_probe_report.json";
  report(1, "min-cost flow integrality", criterion1);
  report(2, "polynomial solvers vs oracles", criterion2);
  report(3, "arborescence vs Steiner enumeration", criterion3);
  report(4, "3SAT -> 2-UF-MM", criterion4);
  report(5, "3SAT -> 2-UF-NCS, MAX-3SAT -> 2-UF-CS", criterion5);
  report(6, "MVC -> 1-SF-CS", criterion6);
  report(7, "3SAT -> 1-SF-WS hub probe", [&] { return criterion7(report_path); });
  report(8, "1-UF-CS vs subset enumeration", criterion8);
  report(9, "segment stacks", criterion9);
  report(10, "ring constellation scale", criterion10);
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
