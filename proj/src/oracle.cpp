#include "satroute/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "satroute/errors.hpp"
#include "satroute/limits.hpp"
#include "satroute/lp.hpp"

namespace satroute {

namespace {

struct Path {
  std::vector<int> nodes;
  std::vector<std::size_t> arcs;
  int end_snapshot = 0;
};

struct OracleUnit {
  int model;
  int client;
  Rational size;
  SatNode from;
  int target;  // satellite that ends the path
};

Budget make_budget(const OracleBudget& b) {
  SearchLimits l;
  l.max_steps = b.max_steps;
  l.time_limit_seconds = b.time_limit_seconds;
  return Budget(l);
}

void check_size(const RoutingInstance& inst, const OracleBudget& b) {
  const auto& g = inst.tvg;
  if (g.node_count() > b.max_nodes) {
    throw BudgetExceeded("oracle: " + std::to_string(g.node_count()) + " nodes exceed " +
                         std::to_string(b.max_nodes));
  }
  if (g.snapshot_count() > b.max_snapshots) throw BudgetExceeded("oracle: too many snapshots");
  int units = 0;
  for (const auto& m : inst.models) units += static_cast<int>(m.clients.size());
  if (units > b.max_clients) throw BudgetExceeded("oracle: too many clients");
}

// Every simple path from `u.from` that stops at the first node of satellite
// `u.target`, over arcs accepted by `usable`, shortest arrival first.
std::vector<Path> all_paths(const TimeVaryingGraph& g, const OracleUnit& u,
                            const std::function<bool(std::size_t)>& usable,
                            const OracleBudget& ob, Budget& budget) {
  std::vector<Path> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  Path cur;
  cur.nodes.push_back(g.index(u.from));
  seen[cur.nodes[0]] = true;
  std::function<void()> walk = [&]() {
    budget.step();
    const SatNode here = g.node(cur.nodes.back());
    if (here.satellite == u.target) {
      cur.end_snapshot = here.snapshot;
      out.push_back(cur);
      if (static_cast<std::int64_t>(out.size()) > ob.max_paths) {
        throw BudgetExceeded("oracle: more than " + std::to_string(ob.max_paths) + " paths");
      }
      return;
    }
    for (auto a : g.out_arcs(cur.nodes.back())) {
      if (!usable(a)) continue;
      const int v = g.index(g.arcs()[a].to);
      if (seen[v]) continue;
      seen[v] = true;
      cur.nodes.push_back(v);
      cur.arcs.push_back(a);
      walk();
      cur.arcs.pop_back();
      cur.nodes.pop_back();
      seen[v] = false;
    }
  };
  walk();
  std::stable_sort(out.begin(), out.end(),
                   [](const Path& a, const Path& b) { return a.end_snapshot < b.end_snapshot; });
  return out;
}

std::vector<OracleUnit> download_units(const RoutingInstance& inst) {
  std::vector<OracleUnit> out;
  for (int m = 0; m < inst.model_count(); ++m) {
    const auto& model = inst.models[m];
    for (const auto& c : model.clients) {
      out.push_back({m, c.id, model.size, SatNode::at(model.server, 1), c.id});
    }
  }
  return out;
}

std::vector<OracleUnit> upload_units(const RoutingInstance& inst) {
  std::vector<OracleUnit> out;
  for (int m = 0; m < inst.model_count(); ++m) {
    const auto& model = inst.models[m];
    for (const auto& c : model.clients) {
      out.push_back({m, c.id, model.size, SatNode::at(c.id, c.start), model.server});
    }
  }
  return out;
}

std::vector<SatNode> sat_nodes(const TimeVaryingGraph& g, const std::vector<int>& nodes) {
  std::vector<SatNode> out;
  for (int n : nodes) out.push_back(g.node(n));
  return out;
}

RoutingSolution oracle_solution(const RoutingInstance& inst, Variant variant) {
  RoutingSolution sol;
  sol.phase = inst.phase;
  sol.variant = variant_name(inst.phase, variant, inst.model_count());
  sol.solver = SolverKind::kOracle;
  return sol;
}

Rational objective_of(const RoutingInstance& inst, Objective obj,
                      const std::vector<OracleUnit>& units, const std::vector<int>& arrival,
                      std::size_t count) {
  std::vector<ClientArrival> a;
  for (std::size_t i = 0; i < count; ++i) a.push_back({units[i].model, units[i].client, arrival[i]});
  return download_objective(inst, obj, a);
}

// Unsplittable: pick one path per unit, all jointly within capacity. Calls
// `visit` on every complete assignment whose partial objective passes `keep`.
class PathProduct {
 public:
  PathProduct(const TimeVaryingGraph& g, const std::vector<OracleUnit>& units,
              const std::vector<std::vector<Path>>& lists, Budget& budget)
      : g_(g), units_(units), lists_(lists), budget_(budget), load_(g.arcs().size()),
        choice_(units.size(), 0) {}

  void run(const std::function<bool(std::size_t)>& keep, const std::function<void()>& visit) {
    keep_ = &keep;
    visit_ = &visit;
    dfs(0);
  }
  const Path& chosen(std::size_t unit) const { return lists_[unit][choice_[unit]]; }

 private:
  void dfs(std::size_t i) {
    budget_.step();
    if (!(*keep_)(i)) return;
    if (i == units_.size()) {
      (*visit_)();
      return;
    }
    for (std::size_t p = 0; p < lists_[i].size(); ++p) {
      const Path& path = lists_[i][p];
      bool fits = true;
      for (auto a : path.arcs) {
        if (load_[a] + units_[i].size > g_.arcs()[a].capacity) fits = false;
      }
      if (!fits) continue;
      for (auto a : path.arcs) load_[a] += units_[i].size;
      choice_[i] = p;
      dfs(i + 1);
      for (auto a : path.arcs) load_[a] -= units_[i].size;
    }
  }

  const TimeVaryingGraph& g_;
  const std::vector<OracleUnit>& units_;
  const std::vector<std::vector<Path>>& lists_;
  Budget& budget_;
  std::vector<Rational> load_;
  std::vector<std::size_t> choice_;
  const std::function<bool(std::size_t)>* keep_ = nullptr;
  const std::function<void()>* visit_ = nullptr;
};

// Splittable: path-flow LP. `allowed[i]` lists the usable path indices of
// unit i. Returns per-unit path amounts, or nullopt if infeasible.
std::optional<std::vector<std::vector<Rational>>> path_lp(
    const TimeVaryingGraph& g, const std::vector<OracleUnit>& units,
    const std::vector<std::vector<Path>>& lists, const std::vector<std::vector<std::size_t>>& allowed) {
  LinearProgram lp;
  std::vector<std::vector<int>> var(units.size());
  std::map<std::size_t, std::vector<std::pair<int, Rational>>> arc_rows;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (allowed[i].empty()) return std::nullopt;
    std::vector<std::pair<int, Rational>> demand_row;
    for (auto p : allowed[i]) {
      const int x = lp.add_variable(0);
      var[i].push_back(x);
      demand_row.emplace_back(x, 1);
      for (auto a : lists[i][p].arcs) arc_rows[a].emplace_back(x, 1);
    }
    lp.add_constraint(std::move(demand_row), ConstraintSense::kEqual, units[i].size);
  }
  for (auto& [a, row] : arc_rows) {
    lp.add_constraint(std::move(row), ConstraintSense::kLessEqual, g.arcs()[a].capacity);
  }
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<std::vector<Rational>> out(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (int x : var[i]) out[i].push_back(sol.values[x]);
  }
  return out;
}

void add_lp_paths(const TimeVaryingGraph& g, const std::vector<OracleUnit>& units,
                  const std::vector<std::vector<Path>>& lists,
                  const std::vector<std::vector<std::size_t>>& allowed,
                  const std::vector<std::vector<Rational>>& amounts, RoutingSolution& sol) {
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = 0; j < allowed[i].size(); ++j) {
      if (sgn(amounts[i][j]) <= 0) continue;
      sol.paths.push_back({units[i].model, units[i].client, amounts[i][j],
                           sat_nodes(g, lists[i][allowed[i][j]].nodes)});
    }
  }
}

std::vector<ClientArrival> latest_ends(const std::vector<PathAssignment>& paths) {
  std::map<std::pair<int, int>, int> k;
  for (const auto& p : paths) {
    auto& slot = k[{p.model, p.client}];
    slot = std::max(slot, p.nodes.back().snapshot);
  }
  std::vector<ClientArrival> out;
  for (const auto& [key, v] : k) out.push_back({key.first, key.second, v});
  return out;
}

// Feasibility of collecting `units` (upload) with the instance's flow kind.
std::optional<std::vector<PathAssignment>> upload_routes(const RoutingInstance& inst,
                                                         const std::vector<OracleUnit>& units,
                                                         const OracleBudget& ob, Budget& budget) {
  const auto& g = inst.tvg;
  const bool uf = inst.variant.flow == FlowKind::kUnsplittable;
  std::vector<std::vector<Path>> lists;
  for (const auto& u : units) {
    lists.push_back(all_paths(
        g, u,
        [&](std::size_t a) { return uf ? g.arcs()[a].capacity >= u.size : sgn(g.arcs()[a].capacity) > 0; },
        ob, budget));
    if (lists.back().empty()) return std::nullopt;
  }
  std::vector<PathAssignment> out;
  if (uf) {
    bool found = false;
    PathProduct product(g, units, lists, budget);
    product.run([&](std::size_t) { return !found; },
                [&]() {
                  found = true;
                  for (std::size_t i = 0; i < units.size(); ++i) {
                    out.push_back({units[i].model, units[i].client, units[i].size,
                                   sat_nodes(g, product.chosen(i).nodes)});
                  }
                });
    if (!found) return std::nullopt;
    return out;
  }
  std::vector<std::vector<std::size_t>> allowed(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    allowed[i].resize(lists[i].size());
    std::iota(allowed[i].begin(), allowed[i].end(), 0);
  }
  const auto amounts = path_lp(g, units, lists, allowed);
  if (!amounts) return std::nullopt;
  RoutingSolution tmp;
  add_lp_paths(g, units, lists, allowed, *amounts, tmp);
  return tmp.paths;
}

}  // namespace

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  const char* env = std::getenv("SATROUTE_ORACLE_BUDGET");
  if (!env) return b;
  std::string_view spec(env);
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string item(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("oracle budget entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const double v = std::strtod(item.c_str() + eq + 1, nullptr);
    if (v <= 0) throw InvalidArgument("oracle budget value for '" + key + "' must be positive");
    if (key == "nodes") b.max_nodes = static_cast<int>(v);
    else if (key == "clients") b.max_clients = static_cast<int>(v);
    else if (key == "snapshots") b.max_snapshots = static_cast<int>(v);
    else if (key == "subsets") b.max_subsets = static_cast<std::int64_t>(v);
    else if (key == "paths") b.max_paths = static_cast<std::int64_t>(v);
    else if (key == "steps") b.max_steps = static_cast<std::int64_t>(v);
    else if (key == "seconds") b.time_limit_seconds = v;
    else throw InvalidArgument("unknown oracle budget key '" + key + "'");
  }
  return b;
}

OracleResult brute_force_unicast(const RoutingInstance& inst, Objective objective,
                                 const OracleBudget& ob) {
  if (inst.phase != Phase::kDownload) throw UnsupportedVariant("unicast oracle needs a download");
  check_size(inst, ob);
  Budget budget = make_budget(ob);
  const auto& g = inst.tvg;
  const bool uf = inst.variant.flow == FlowKind::kUnsplittable;
  Variant variant;
  variant.flow = inst.variant.flow;
  variant.objective = objective;
  OracleResult result;
  result.witness = oracle_solution(inst, variant);
  const auto units = download_units(inst);

  std::vector<std::vector<Path>> lists;
  for (const auto& u : units) {
    lists.push_back(all_paths(
        g, u,
        [&](std::size_t a) { return uf ? g.arcs()[a].capacity >= u.size : sgn(g.arcs()[a].capacity) > 0; },
        ob, budget));
    if (lists.back().empty()) return result;
  }

  if (uf) {
    std::vector<int> arrival(units.size(), 0);
    std::optional<Rational> best;
    std::vector<Path> best_paths;
    PathProduct product(g, units, lists, budget);
    product.run(
        [&](std::size_t depth) {
          for (std::size_t i = 0; i < depth; ++i) arrival[i] = product.chosen(i).end_snapshot;
          return !best || objective_of(inst, objective, units, arrival, depth) < *best;
        },
        [&]() {
          best = objective_of(inst, objective, units, arrival, units.size());
          best_paths.clear();
          for (std::size_t i = 0; i < units.size(); ++i) best_paths.push_back(product.chosen(i));
        });
    if (!best) return result;
    for (std::size_t i = 0; i < units.size(); ++i) {
      result.witness.paths.push_back(
          {units[i].model, units[i].client, units[i].size, sat_nodes(g, best_paths[i].nodes)});
    }
  } else {
    const auto ids = [&]() {
      std::vector<int> out;
      for (const auto& u : units) {
        if (std::find(out.begin(), out.end(), u.client) == out.end()) out.push_back(u.client);
      }
      return out;
    }();
    const int K = g.snapshot_count();
    std::int64_t count = 1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      count *= K;
      if (count > ob.max_subsets * 256) throw BudgetExceeded("oracle: too many arrival vectors");
    }
    std::vector<std::pair<Rational, std::vector<int>>> vectors;
    std::vector<int> k(ids.size(), 1);
    while (true) {
      std::vector<ClientArrival> a;
      for (std::size_t i = 0; i < ids.size(); ++i) a.push_back({0, ids[i], k[i]});
      vectors.emplace_back(download_objective(inst, objective, a), k);
      std::size_t i = k.size();
      while (i > 0 && k[i - 1] == K) k[--i] = 1;
      if (i == 0) break;
      ++k[i - 1];
    }
    std::stable_sort(vectors.begin(), vectors.end());
    bool found = false;
    for (const auto& [value, ks] : vectors) {
      budget.step(1000);
      std::vector<std::vector<std::size_t>> allowed(units.size());
      for (std::size_t i = 0; i < units.size(); ++i) {
        const auto pos = std::find(ids.begin(), ids.end(), units[i].client) - ids.begin();
        for (std::size_t p = 0; p < lists[i].size(); ++p) {
          if (lists[i][p].end_snapshot <= ks[static_cast<std::size_t>(pos)]) allowed[i].push_back(p);
        }
      }
      const auto amounts = path_lp(g, units, lists, allowed);
      if (!amounts) continue;
      add_lp_paths(g, units, lists, allowed, *amounts, result.witness);
      found = true;
      break;
    }
    if (!found) return result;
  }
  result.witness.arrivals = latest_ends(result.witness.paths);
  result.witness.objective = download_objective(inst, objective, result.witness.arrivals);
  result.witness.status = SolveStatus::kOptimal;
  result.feasible = true;
  result.value = result.witness.objective;
  return result;
}

OracleResult brute_force_multicast(const RoutingInstance& inst, Objective objective,
                                   const OracleBudget& ob) {
  if (inst.phase != Phase::kDownload) throw UnsupportedVariant("multicast oracle needs a download");
  check_size(inst, ob);
  Budget budget = make_budget(ob);
  const auto& g = inst.tvg;
  const auto& arcs = g.arcs();
  Variant variant;
  variant.multicast = true;
  variant.objective = objective;
  OracleResult result;
  result.witness = oracle_solution(inst, variant);
  const auto units = download_units(inst);
  const int M = inst.model_count();

  std::vector<std::vector<Path>> lists;
  for (const auto& u : units) {
    lists.push_back(all_paths(
        g, u, [&](std::size_t a) { return arcs[a].cache || arcs[a].capacity >= u.size; }, ob,
        budget));
    if (lists.back().empty()) return result;
  }
  const Rational both = M == 2 ? inst.models[0].size + inst.models[1].size : Rational(0);
  std::vector<std::vector<int>> use(static_cast<std::size_t>(M), std::vector<int>(arcs.size(), 0));
  std::vector<int> arrival(units.size(), 0);
  std::vector<std::size_t> choice(units.size(), 0);
  std::optional<Rational> best;
  std::vector<std::size_t> best_choice;

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    budget.step();
    if (best && !(objective_of(inst, objective, units, arrival, i) < *best)) return;
    if (i == units.size()) {
      best = objective_of(inst, objective, units, arrival, i);
      best_choice = choice;
      return;
    }
    const int m = units[i].model;
    for (std::size_t p = 0; p < lists[i].size(); ++p) {
      const Path& path = lists[i][p];
      bool fits = true;
      for (auto a : path.arcs) {
        if (arcs[a].cache || M == 1) continue;
        if (use[m][a] == 0 && use[1 - m][a] > 0 && arcs[a].capacity < both) fits = false;
      }
      if (!fits) continue;
      for (auto a : path.arcs) ++use[m][a];
      choice[i] = p;
      arrival[i] = path.end_snapshot;
      dfs(i + 1);
      for (auto a : path.arcs) --use[m][a];
    }
  };
  dfs(0);
  if (!best) return result;

  // Witness: per model, a breadth-first tree inside the union of chosen paths.
  for (int m = 0; m < M; ++m) {
    std::vector<bool> in_union(arcs.size(), false);
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (units[i].model != m) continue;
      for (auto a : lists[i][best_choice[i]].arcs) in_union[a] = true;
    }
    const int root = g.index(SatNode::at(inst.models[m].server, 1));
    std::vector<int> parent(static_cast<std::size_t>(g.node_count()), -2);
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto a : g.out_arcs(queue[h])) {
        const int v = g.index(arcs[a].to);
        if (!in_union[a] || parent[v] != -2) continue;
        parent[v] = static_cast<int>(a);
        queue.push_back(v);
      }
    }
    TreeAssignment tree{m, {}};
    std::vector<bool> kept(static_cast<std::size_t>(g.node_count()), false);
    for (const auto& c : inst.models[m].clients) {
      int first = 0;
      for (int k = 1; k <= g.snapshot_count() && first == 0; ++k) {
        if (parent[g.index(SatNode::at(c.id, k))] != -2) first = k;
      }
      result.witness.arrivals.push_back({m, c.id, first});
      for (int v = g.index(SatNode::at(c.id, first)); parent[v] >= 0 && !kept[v];) {
        kept[v] = true;
        const auto& arc = arcs[parent[v]];
        tree.arcs.emplace_back(arc.from, arc.to);
        v = g.index(arc.from);
      }
    }
    result.witness.trees.push_back(std::move(tree));
  }
  result.witness.objective = download_objective(inst, objective, result.witness.arrivals);
  result.witness.status = SolveStatus::kOptimal;
  result.feasible = true;
  result.value = result.witness.objective;
  return result;
}

OracleResult brute_force_upload(const RoutingInstance& inst, const OracleBudget& ob) {
  if (inst.phase != Phase::kUpload) throw UnsupportedVariant("upload oracle needs an upload");
  check_size(inst, ob);
  Budget budget = make_budget(ob);
  Variant variant;
  variant.flow = inst.variant.flow;
  OracleResult result;
  result.witness = oracle_solution(inst, variant);
  auto paths = upload_routes(inst, upload_units(inst), ob, budget);
  if (!paths) return result;
  result.feasible = true;
  result.witness.paths = std::move(*paths);
  result.witness.status = SolveStatus::kFeasible;
  return result;
}

OracleResult brute_force_cs(const RoutingInstance& inst, const OracleBudget& ob) {
  if (inst.phase != Phase::kUpload) throw UnsupportedVariant("selection oracle needs an upload");
  check_size(inst, ob);
  Budget budget = make_budget(ob);
  Variant variant;
  variant.flow = inst.variant.flow;
  variant.client_selection = true;
  OracleResult result;
  result.witness = oracle_solution(inst, variant);
  const auto units = upload_units(inst);
  std::vector<Rational> utility;
  for (const auto& u : units) {
    for (const auto& c : inst.models[u.model].clients) {
      if (c.id == u.client) utility.push_back(c.utility);
    }
  }
  const std::size_t n = units.size();
  if ((std::int64_t{1} << n) > ob.max_subsets) throw BudgetExceeded("oracle: too many subsets");
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<OracleUnit> chosen;
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        chosen.push_back(units[i]);
        total += utility[i];
      }
    }
    if (best && total <= *best) continue;
    auto paths = upload_routes(inst, chosen, ob, budget);
    if (!paths) continue;
    best = total;
    result.witness.paths = std::move(*paths);
    result.witness.selected.clear();
    for (const auto& u : chosen) result.witness.selected.push_back({u.model, u.client});
  }
  std::sort(result.witness.selected.begin(), result.witness.selected.end());
  result.feasible = true;
  result.value = *best;
  result.witness.objective = *best;
  result.witness.status = SolveStatus::kOptimal;
  return result;
}

SatResult sat_brute_force(const CnfFormula& formula, int max_variables) {
  formula.validate();
  if (formula.variables > max_variables) {
    throw BudgetExceeded("oracle: " + std::to_string(formula.variables) + " variables exceed " +
                         std::to_string(max_variables));
  }
  SatResult result;
  result.max_satisfied = -1;
  std::vector<bool> assignment(static_cast<std::size_t>(formula.variables));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << formula.variables); ++bits) {
    for (int v = 0; v < formula.variables; ++v) assignment[v] = bits >> v & 1;
    const int s = formula.count_satisfied(assignment);
    if (s > result.max_satisfied) {
      result.max_satisfied = s;
      result.assignment = assignment;
    }
  }
  result.satisfiable = result.max_satisfied == formula.clause_count();
  return result;
}

CoverResult mvc_brute_force(const UndirectedGraph& graph, int max_vertices) {
  graph.validate();
  if (graph.vertices > max_vertices) throw BudgetExceeded("oracle: too many vertices");
  const int n = graph.vertices;
  for (int size = 0; size <= n; ++size) {
    // subsets of `size` vertices in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
      for (int v : pick) in[v] = true;
      const bool covers = std::all_of(graph.edges.begin(), graph.edges.end(),
                                      [&](const auto& e) { return in[e.first] || in[e.second]; });
      if (covers) return {size, pick};
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, {}};  // unreachable: the full vertex set always covers
}

std::optional<Rational> brute_force_steiner_arborescence(const Digraph& g, int root,
                                                         std::span<const int> terminals,
                                                         std::int64_t max_combinations) {
  const int n = g.node_count;
  // option 0 = node absent, option j = j-th incoming arc
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].to != root && g.arcs[a].from != g.arcs[a].to) incoming[g.arcs[a].to].push_back(static_cast<int>(a));
  }
  std::int64_t combos = 1;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    combos *= static_cast<std::int64_t>(incoming[v].size()) + 1;
    if (combos > max_combinations) throw BudgetExceeded("oracle: too many parent combinations");
  }
  std::vector<bool> terminal(static_cast<std::size_t>(n), false);
  for (int t : terminals) terminal[t] = true;
  std::vector<std::size_t> option(static_cast<std::size_t>(n), 0);
  std::optional<Rational> best;
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (v != root && terminal[v] && option[v] == 0) ok = false;
    }
    if (ok) {
      // present nodes must chain back to the root
      for (int v = 0; v < n && ok; ++v) {
        if (v == root || option[v] == 0) continue;
        int cur = v;
        for (int steps = 0; cur != root && ok; ++steps) {
          if (steps > n || option[cur] == 0) ok = false;
          else cur = g.arcs[incoming[cur][option[cur] - 1]].from;
        }
      }
    }
    if (ok) {
      Rational cost = 0;
      for (int v = 0; v < n; ++v) {
        if (v != root && option[v] > 0) cost += g.arcs[incoming[v][option[v] - 1]].cost;
      }
      if (!best || cost < *best) best = cost;
    }
    int v = 0;
    for (; v < n; ++v) {
      if (v == root) continue;
      if (++option[v] <= incoming[v].size()) break;
      option[v] = 0;
    }
    if (v == n) break;
  }
  return best;
}

std::optional<Rational> brute_force_min_cost_flow(const FlowNetwork& net,
                                                  std::int64_t max_combinations) {
  const int n = net.node_count();
  const auto& arcs = net.arcs();
  for (const auto& a : arcs) {
    if (a.capacity.get_den() != 1) throw InvalidArgument("oracle needs integer capacities");
  }
  // spanning forest of the underlying undirected graph
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  std::vector<bool> tree(arcs.size(), false);
  std::vector<std::size_t> free_arcs;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const int ru = find(arcs[a].from), rv = find(arcs[a].to);
    if (ru != rv) {
      comp[ru] = rv;
      tree[a] = true;
    } else {
      free_arcs.push_back(a);
    }
  }
  std::int64_t combos = 1;
  for (auto a : free_arcs) {
    combos *= arcs[a].capacity.get_num().get_si() + 1;
    if (combos > max_combinations) throw BudgetExceeded("oracle: too many flow combinations");
  }
  // peel order: children before parents in each tree component
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!tree[a]) continue;
    adj[arcs[a].from].push_back(a);
    adj[arcs[a].to].push_back(a);
  }
  std::vector<int> order;
  std::vector<std::size_t> parent_arc(static_cast<std::size_t>(n), arcs.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> roots;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    roots.push_back(r);
    seen[r] = true;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (auto a : adj[u]) {
        const int v = arcs[a].from == u ? arcs[a].to : arcs[a].from;
        if (seen[v]) continue;
        seen[v] = true;
        parent_arc[v] = a;
        stack.push_back(v);
      }
    }
  }

  std::vector<Integer> flow(arcs.size(), 0);
  std::optional<Rational> best;
  std::vector<Integer> need(static_cast<std::size_t>(n));
  while (true) {
    // need[v]: net amount v still has to send out through its tree arcs
    for (int v = 0; v < n; ++v) need[v] = net.supply(v).get_num();
    for (auto a : free_arcs) {
      need[arcs[a].from] -= flow[a];
      need[arcs[a].to] += flow[a];
    }
    bool ok = true;
    for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
      const int v = *it;
      const std::size_t a = parent_arc[v];
      if (a == arcs.size()) {
        if (need[v] != 0) ok = false;
        continue;
      }
      const bool outward = arcs[a].from == v;
      const Integer f = outward ? need[v] : Integer(-need[v]);
      if (f < 0 || f > arcs[a].capacity.get_num()) {
        ok = false;
        continue;
      }
      flow[a] = f;
      const int p = outward ? arcs[a].to : arcs[a].from;
      need[p] += outward ? f : Integer(-f);
      need[v] = 0;
    }
    if (ok) {
      Rational cost = 0;
      for (std::size_t a = 0; a < arcs.size(); ++a) cost += arcs[a].cost * flow[a];
      if (!best || cost < *best) best = cost;
    }
    std::size_t i = 0;
    for (; i < free_arcs.size(); ++i) {
      auto& f = flow[free_arcs[i]];
      if (f < arcs[free_arcs[i]].capacity.get_num()) {
        ++f;
        break;
      }
      f = 0;
    }
    if (i == free_arcs.size()) break;
  }
  return best;
}

}  // namespace satroute
