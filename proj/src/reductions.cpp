#include "satroute/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "satroute/errors.hpp"
#include "satroute/oracle.hpp"
#include "satroute/random.hpp"
#include "satroute/solver.hpp"

namespace satroute {
namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::k3SatTo1SfWs, "3sat-1sfws"},    {Family::k3SatTo2UfMm, "3sat-2ufmm"},
    {Family::k3SatTo2UfNcs, "3sat-2ufncs"},  {Family::kMax3SatTo2UfCs, "max3sat-2ufcs"},
    {Family::kMvcTo1SfCs, "mvc-1sfcs"},      {Family::k2EdpToMul2Mm, "2edp-mul2mm"},
};

void require_irreducible(const CnfFormula& f) {
  f.validate();
  if (f.clauses.empty()) throw InvalidArgument("formula has no clauses");
  if (!f.irreducible()) {
    throw InvalidArgument("formula is not irreducible: every variable needs a positive and a "
                          "negative occurrence in different clauses");
  }
}

std::vector<Literal> distinct_literals(const Clause& clause) {
  std::vector<Literal> out(clause.begin(), clause.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Intra arcs keyed by (from, to, snapshot); parallel arcs are summed.
class ArcBuilder {
 public:
  void add(int from, int to, int snapshot, const Rational& cap) {
    arcs_[{snapshot, from, to}] += cap;
  }
  std::vector<IntraArc> list() const {
    std::vector<IntraArc> out;
    for (const auto& [key, cap] : arcs_) {
      auto [k, u, v] = key;
      out.push_back({SatNode::at(u, k), SatNode::at(v, k), cap});
    }
    return out;
  }

 private:
  std::map<std::tuple<int, int, int>, Rational> arcs_;
};

Model make_model(Rational size, int server, const std::vector<int>& clients,
                 const Rational& utility = 1) {
  Model m{std::move(size), server, {}};
  for (int c : clients) {
    Client cl;
    cl.id = c;
    cl.utility = utility;
    m.clients.push_back(cl);
  }
  return m;
}

Variant download_variant(FlowKind flow, Objective objective, bool multicast) {
  Variant v;
  v.flow = flow;
  v.objective = objective;
  v.multicast = multicast;
  return v;
}

Variant upload_variant(FlowKind flow, bool cs) {
  Variant v;
  v.flow = flow;
  v.client_selection = cs;
  return v;
}

// Satellite numbering shared by the two-model SAT gadgets.
struct SatLayout {
  int m, n;
  int server() const { return 1; }
  int pos(int l) const { return 2 + 3 * (l - 1); }
  int neg(int l) const { return 3 + 3 * (l - 1); }
  int var(int l) const { return 4 + 3 * (l - 1); }
  int clause(int h) const { return 3 * m + 1 + h; }
  int lit(const Literal& x) const { return x.negated ? neg(x.variable) : pos(x.variable); }
  int size() const { return 3 * m + n + 1; }

  std::map<int, std::string> labels() const {
    std::map<int, std::string> out{{server(), "s"}};
    for (int l = 1; l <= m; ++l) {
      out[pos(l)] = "x" + std::to_string(l);
      out[neg(l)] = "~x" + std::to_string(l);
      out[var(l)] = "v" + std::to_string(l);
    }
    for (int h = 1; h <= n; ++h) out[clause(h)] = "e" + std::to_string(h);
    return out;
  }
};

// Satisfiability gadget arcs; `reversed` flips every arc for the upload gadgets.
std::vector<IntraArc> two_model_arcs(const CnfFormula& f, const SatLayout& lay, bool reversed) {
  ArcBuilder arcs;
  auto add = [&](int u, int v, const Rational& cap) {
    if (reversed) std::swap(u, v);
    arcs.add(u, v, 1, cap);
  };
  const Rational n = f.clause_count();
  for (int l = 1; l <= f.variables; ++l) {
    add(lay.server(), lay.pos(l), n);
    add(lay.pos(l), lay.var(l), n);
    add(lay.server(), lay.neg(l), n);
    add(lay.neg(l), lay.var(l), n);
  }
  for (int h = 1; h <= f.clause_count(); ++h) {
    for (const auto& x : distinct_literals(f.clauses[h - 1])) add(lay.lit(x), lay.clause(h), 1);
  }
  return arcs.list();
}

std::vector<Model> two_model_models(const CnfFormula& f, const SatLayout& lay,
                                    const Rational& big_utility) {
  std::vector<int> vars, clauses;
  for (int l = 1; l <= f.variables; ++l) vars.push_back(lay.var(l));
  for (int h = 1; h <= f.clause_count(); ++h) clauses.push_back(lay.clause(h));
  return {make_model(f.clause_count(), lay.server(), vars, big_utility),
          make_model(1, lay.server(), clauses)};
}

std::string rational_text(const Rational& r) { return to_string(r); }

}  // namespace

const char* to_string(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (name == f.name) return f.family;
  }
  throw InvalidArgument("unknown reduction family '" + std::string(name) + "'");
}

bool decide(const ReductionArtifact& artifact, const RoutingSolution& solution) {
  if (!solution.solved()) return false;
  switch (artifact.rule) {
    case DecisionRule::kFeasible: return true;
    case DecisionRule::kObjectiveEquals: return solution.objective == artifact.threshold;
    case DecisionRule::kObjectiveAtLeast: return solution.objective >= artifact.threshold;
  }
  return false;
}

Rational default_hub_capacity(int clauses) { return Rational(1) + Rational(clauses, clauses + 1); }
Rational narrow_hub_capacity(int clauses) { return Rational(1) + Rational(1, clauses); }

const char* to_string(HubSetting setting) {
  return setting == HubSetting::kSpare ? "1+n/(n+1)" : "1+1/n";
}

HubSetting parse_hub_setting(std::string_view name) {
  if (name == "spare") return HubSetting::kSpare;
  if (name == "narrow") return HubSetting::kNarrow;
  throw InvalidArgument("unknown hub setting '" + std::string(name) + "'");
}

Rational hub_capacity(HubSetting setting, int clauses) {
  return setting == HubSetting::kSpare ? default_hub_capacity(clauses)
                                       : narrow_hub_capacity(clauses);
}

ReductionArtifact reduce_3sat_to_1sfws(const CnfFormula& f, std::optional<Rational> hub_capacity) {
  require_irreducible(f);
  const int m = f.variables;
  const int n = f.clause_count();
  const Rational hub_cap = hub_capacity.value_or(default_hub_capacity(n));
  if (sgn(hub_cap) <= 0) throw InvalidArgument("hub capacity must be positive");

  const int s = 1;
  auto hub = [](int l) { return 2 + 3 * (l - 1); };
  auto pos = [](int l) { return 3 + 3 * (l - 1); };
  auto neg = [](int l) { return 4 + 3 * (l - 1); };
  auto clause = [m](int h) { return 3 * m + 1 + h; };
  auto lit = [&](const Literal& x) { return x.negated ? neg(x.variable) : pos(x.variable); };

  ArcBuilder arcs;
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= m; ++l) {
      arcs.add(s, hub(l), k, hub_cap);
      arcs.add(hub(l), pos(l), k, 1);
      arcs.add(hub(l), neg(l), k, 1);
    }
  }
  for (int h = 1; h <= n; ++h) {
    arcs.add(s, clause(h), 1, Rational(n, n + 1));
    for (const auto& x : distinct_literals(f.clauses[h - 1])) {
      arcs.add(lit(x.negation()), clause(h), 1, Rational(1, n + 1));
    }
  }

  std::map<int, std::string> labels{{s, "s"}};
  std::vector<int> clients;
  for (int l = 1; l <= m; ++l) {
    labels[hub(l)] = "h" + std::to_string(l);
    labels[pos(l)] = "x" + std::to_string(l);
    labels[neg(l)] = "~x" + std::to_string(l);
    clients.push_back(pos(l));
    clients.push_back(neg(l));
  }
  for (int h = 1; h <= n; ++h) {
    labels[clause(h)] = "e" + std::to_string(h);
    clients.push_back(clause(h));
  }

  ReductionArtifact art{Family::k3SatTo1SfWs,
                        make_instance(Phase::kDownload, 3 * m + n + 1, 2, arcs.list(),
                                      {make_model(1, s, clients)},
                                      download_variant(FlowKind::kSplittable,
                                                       Objective::kWeightedSum, false),
                                      {}, std::move(labels)),
                        DecisionRule::kObjectiveEquals,
                        Rational(3 * m + n),
                        "satisfiable iff the 1-SF-WS optimum equals 3m+n = " +
                            std::to_string(3 * m + n) + " (every client served by snapshot 2)",
                        {}};
  art.notes = {
      "s->h: hub capacity " + rational_text(hub_cap) + " in both snapshots",
      "h->x, h->~x: capacity 1, one literal of each pair completes in snapshot 1",
      "s->e: capacity " + rational_text(Rational(n, n + 1)) + ", snapshot 1 only",
      "~lit->e: capacity " + rational_text(Rational(1, n + 1)) +
          " from the negation of each literal of the clause, snapshot 1 only",
  };
  return art;
}

ReductionArtifact reduce_3sat_to_2ufmm(const CnfFormula& f) {
  require_irreducible(f);
  const SatLayout lay{f.variables, f.clause_count()};
  ReductionArtifact art{Family::k3SatTo2UfMm,
                        make_instance(Phase::kDownload, lay.size(), 1, two_model_arcs(f, lay, false),
                                      two_model_models(f, lay, 1),
                                      download_variant(FlowKind::kUnsplittable, Objective::kMinMax,
                                                       false),
                                      {}, lay.labels()),
                        DecisionRule::kFeasible,
                        Rational(1),
                        "satisfiable iff both models reach all clients in snapshot 1",
                        {}};
  art.notes = {
      "s->x->v and s->~x->v: capacity n, the big model (size n) saturates one side",
      "lit->e: capacity 1 for each literal of the clause, carries the small model (size 1)",
  };
  return art;
}

ReductionArtifact reduce_3sat_to_2ufncs(const CnfFormula& f) {
  require_irreducible(f);
  const SatLayout lay{f.variables, f.clause_count()};
  ReductionArtifact art{Family::k3SatTo2UfNcs,
                        make_instance(Phase::kUpload, lay.size(), 1, two_model_arcs(f, lay, true),
                                      two_model_models(f, lay, 1),
                                      upload_variant(FlowKind::kUnsplittable, false), {},
                                      lay.labels()),
                        DecisionRule::kFeasible,
                        Rational(0),
                        "satisfiable iff every client uploads within snapshot 1",
                        {}};
  art.notes = {
      "v->x->s and v->~x->s: capacity n, the big model (size n) saturates one side",
      "e->lit: capacity 1 for each literal of the clause, carries the small model (size 1)",
  };
  return art;
}

ReductionArtifact reduce_max3sat_to_2ufcs(const CnfFormula& f, std::optional<int> target) {
  require_irreducible(f);
  const int m = f.variables;
  const int n = f.clause_count();
  const int want = target.value_or(n);
  if (want < 0 || want > n) throw InvalidArgument("target clause count out of range");
  const SatLayout lay{m, n};
  const Rational threshold = Rational(m) * (n + 1) + want;
  ReductionArtifact art{Family::kMax3SatTo2UfCs,
                        make_instance(Phase::kUpload, lay.size(), 1, two_model_arcs(f, lay, true),
                                      two_model_models(f, lay, n + 1),
                                      upload_variant(FlowKind::kUnsplittable, true), {},
                                      lay.labels()),
                        DecisionRule::kObjectiveAtLeast,
                        threshold,
                        "at least " + std::to_string(want) +
                            " clauses satisfiable iff max utility >= m(n+1)+" +
                            std::to_string(want) + " = " + to_string(threshold),
                        {}};
  art.notes = {
      "v clients: utility n+1, all of them are selected at the optimum",
      "e clients: utility 1, each selected clause is satisfied by the free literal side",
  };
  return art;
}

int satisfied_clauses_from_utility(const CnfFormula& f, const Rational& utility) {
  const Rational rest = utility - Rational(f.variables) * (f.clause_count() + 1);
  if (rest.get_den() != 1) throw InvalidArgument("utility is not integral");
  return static_cast<int>(rest.get_num().get_si());
}

ReductionArtifact reduce_mvc_to_1sfcs(const UndirectedGraph& g, int cover_size) {
  g.validate();
  if (cover_size < 1 || cover_size > g.vertices) {
    throw InvalidArgument("cover size " + std::to_string(cover_size) + " out of range 1.." +
                          std::to_string(g.vertices));
  }
  const int V = g.vertices;
  const int E = static_cast<int>(g.edges.size());
  const int s = 1, a = 2;
  auto vnode = [](int v) { return 2 + v; };
  auto enode = [V](int e) { return 2 + V + e; };

  // With no edges the flow argument degenerates; size 1 keeps the model valid
  // and any cover_size vertices fit through a.
  const Rational q = E == 0 ? Rational(1) : Rational(E);
  const Rational a_cap = E == 0 ? Rational(cover_size) : Rational((cover_size - 1) * E);

  ArcBuilder arcs;
  for (int e = 1; e <= E; ++e) {
    auto [u, v] = g.edges[e - 1];
    arcs.add(vnode(u), enode(e), 1, q);
    arcs.add(vnode(v), enode(e), 1, q);
    arcs.add(enode(e), s, 1, 1);
  }
  for (int v = 1; v <= V; ++v) arcs.add(vnode(v), a, 1, q);
  if (sgn(a_cap) > 0) arcs.add(a, s, 1, a_cap);

  std::map<int, std::string> labels{{s, "s"}, {a, "a"}};
  std::vector<int> clients;
  for (int v = 1; v <= V; ++v) {
    labels[vnode(v)] = "N" + std::to_string(v);
    clients.push_back(vnode(v));
  }
  for (int e = 1; e <= E; ++e) labels[enode(e)] = "E" + std::to_string(e);

  ReductionArtifact art{Family::kMvcTo1SfCs,
                        make_instance(Phase::kUpload, 2 + V + E, 1, arcs.list(),
                                      {make_model(q, s, clients)},
                                      upload_variant(FlowKind::kSplittable, true), {},
                                      std::move(labels)),
                        DecisionRule::kObjectiveAtLeast,
                        Rational(cover_size),
                        "a vertex cover of size " + std::to_string(cover_size) +
                            " exists iff at least that many clients can upload",
                        {}};
  art.notes = {
      "N->E: capacity q for each endpoint of an edge",
      "E->s: capacity 1, all of them must be saturated",
      "N->a: capacity q; a->s: capacity " + to_string(a_cap),
  };
  return art;
}

ReductionArtifact reduce_2edp_to_mul2mm(const DirectedGraph& g, std::pair<int, int> first,
                                        std::pair<int, int> second) {
  g.validate();
  const std::array<int, 4> ends{first.first, first.second, second.first, second.second};
  for (int x : ends) {
    if (x < 1 || x > g.nodes) throw InvalidArgument("endpoint " + std::to_string(x) + " not in graph");
  }
  if (std::set<int>(ends.begin(), ends.end()).size() != 4) {
    throw InvalidArgument("the four endpoints must be distinct");
  }
  ArcBuilder arcs;
  for (auto [u, v] : g.arcs) arcs.add(u, v, 1, 1);
  ReductionArtifact art{Family::k2EdpToMul2Mm,
                        make_instance(Phase::kDownload, g.nodes, 1, arcs.list(),
                                      {make_model(1, first.first, {first.second}),
                                       make_model(1, second.first, {second.second})},
                                      download_variant(FlowKind::kUnsplittable, Objective::kMinMax,
                                                       true)),
                        DecisionRule::kFeasible,
                        Rational(1),
                        "two arc-disjoint paths exist iff both models arrive in snapshot 1",
                        {"every arc: capacity 1, so the two trees cannot share an arc"}};
  return art;
}

// ------------------------------------------------------------ enumeration

namespace {

using ClauseKey = std::vector<Literal>;  // sorted distinct literals
using FormulaKey = std::vector<ClauseKey>;

Clause pad(const ClauseKey& lits) {
  Clause c{};
  for (std::size_t i = 0; i < 3; ++i) c[i] = lits[std::min(i, lits.size() - 1)];
  return c;
}

// Smallest key over variable permutations and polarity flips.
FormulaKey canonical_key(const FormulaKey& key, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  FormulaKey best;
  bool first = true;
  do {
    for (int flips = 0; flips < (1 << m); ++flips) {
      FormulaKey mapped;
      for (const auto& clause : key) {
        ClauseKey c;
        for (const auto& x : clause) {
          c.push_back({perm[x.variable - 1], x.negated != static_cast<bool>(flips >> (x.variable - 1) & 1)});
        }
        std::sort(c.begin(), c.end());
        mapped.push_back(std::move(c));
      }
      std::sort(mapped.begin(), mapped.end());
      if (first || mapped < best) {
        best = std::move(mapped);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<ClauseKey> clause_pool(int m) {
  std::vector<Literal> lits;
  for (int v = 1; v <= m; ++v) {
    lits.push_back({v, false});
    lits.push_back({v, true});
  }
  std::vector<ClauseKey> pool;
  const int L = static_cast<int>(lits.size());
  for (int mask = 1; mask < (1 << L); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    ClauseKey c;
    for (int i = 0; i < L; ++i) {
      if (mask >> i & 1) c.push_back(lits[i]);
    }
    pool.push_back(std::move(c));
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

CnfFormula formula_from_key(const FormulaKey& key, int m) {
  CnfFormula f;
  f.variables = m;
  for (const auto& c : key) f.clauses.push_back(pad(c));
  return f;
}

}  // namespace

std::vector<CnfFormula> enumerate_irreducible_formulas(int max_variables, int max_clauses) {
  if (max_variables > 4) throw InvalidArgument("formula enumeration limited to 4 variables");
  std::vector<CnfFormula> out;
  for (int m = 1; m <= max_variables; ++m) {
    const auto pool = clause_pool(m);
    const int P = static_cast<int>(pool.size());
    for (int n = 1; n <= max_clauses; ++n) {
      std::set<FormulaKey> seen;
      std::vector<int> idx(n, 0);
      std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n) {
          FormulaKey key;
          for (int i : idx) key.push_back(pool[i]);
          CnfFormula f = formula_from_key(key, m);
          if (!f.irreducible()) return;
          seen.insert(canonical_key(key, m));
          return;
        }
        for (int i = from; i < P; ++i) {
          idx[pos] = i;
          rec(pos + 1, i);
        }
      };
      rec(0, 0);
      for (const auto& key : seen) out.push_back(formula_from_key(key, m));
    }
  }
  return out;
}

std::optional<CnfFormula> random_irreducible_formula(int m, int n, std::mt19937_64& rng,
                                                     int attempts) {
  if (m < 1 || n < 1) throw InvalidArgument("formula needs at least one variable and clause");
  if (n < 2 || 2 * m > 3 * n) return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    CnfFormula f;
    f.variables = m;
    for (int h = 0; h < n; ++h) {
      Clause c{};
      for (auto& x : c) {
        x.variable = static_cast<int>(uniform_int(rng, 1, m));
        x.negated = bernoulli(rng, 1, 2);
      }
      f.clauses.push_back(c);
    }
    if (f.irreducible()) return f;
  }
  return std::nullopt;
}

namespace {

using EdgeSet = std::vector<std::pair<int, int>>;

EdgeSet canonical_edges(int n, const EdgeSet& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  EdgeSet best;
  bool first = true;
  do {
    EdgeSet mapped;
    for (auto [u, v] : edges) mapped.push_back(std::minmax(perm[u - 1], perm[v - 1]));
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<UndirectedGraph> enumerate_graphs(int max_vertices) {
  if (max_vertices > 6) throw InvalidArgument("graph enumeration limited to 6 vertices");
  std::vector<UndirectedGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    EdgeSet all;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    }
    std::set<std::pair<std::size_t, EdgeSet>> seen;
    for (long mask = 0; mask < (1L << all.size()); ++mask) {
      EdgeSet edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) edges.push_back(all[i]);
      }
      seen.insert({edges.size(), canonical_edges(n, edges)});
    }
    for (const auto& [count, edges] : seen) out.push_back({n, edges});
  }
  return out;
}

bool two_disjoint_paths_brute_force(const DirectedGraph& g, std::pair<int, int> first,
                                    std::pair<int, int> second) {
  g.validate();
  std::vector<std::vector<int>> out(g.nodes + 1);  // arc indices
  for (std::size_t i = 0; i < g.arcs.size(); ++i) out[g.arcs[i].first].push_back(static_cast<int>(i));

  auto simple_paths = [&](int from, int to) {
    std::vector<std::vector<bool>> found;
    std::vector<bool> used(g.arcs.size(), false), visited(g.nodes + 1, false);
    std::function<void(int)> dfs = [&](int u) {
      if (u == to) {
        found.push_back(used);
        return;
      }
      visited[u] = true;
      for (int a : out[u]) {
        const int v = g.arcs[a].second;
        if (visited[v]) continue;
        used[a] = true;
        dfs(v);
        used[a] = false;
      }
      visited[u] = false;
    };
    dfs(from);
    return found;
  };

  const auto p1 = simple_paths(first.first, first.second);
  const auto p2 = simple_paths(second.first, second.second);
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      bool disjoint = true;
      for (std::size_t i = 0; i < a.size() && disjoint; ++i) disjoint = !(a[i] && b[i]);
      if (disjoint) return true;
    }
  }
  return false;
}

// --------------------------------------------------------------- harness

namespace {

std::string graph_text(const UndirectedGraph& g) {
  std::ostringstream os;
  os << "V=" << g.vertices << " E={";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    os << (i ? "," : "") << g.edges[i].first << "-" << g.edges[i].second;
  }
  os << "}";
  return os.str();
}

std::string digraph_text(const DirectedGraph& g) {
  std::ostringstream os;
  os << "N=" << g.nodes << " A={";
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    os << (i ? "," : "") << g.arcs[i].first << ">" << g.arcs[i].second;
  }
  os << "} pairs=(1,2),(3,4)";
  return os.str();
}

std::string solution_text(const RoutingSolution& sol) {
  std::ostringstream os;
  os << to_string(sol.status) << " objective=" << to_string(sol.objective);
  if (!sol.arrivals.empty()) {
    os << " arrivals=";
    for (std::size_t i = 0; i < sol.arrivals.size(); ++i) {
      const auto& a = sol.arrivals[i];
      os << (i ? "," : "") << "m" << a.model << ":" << a.client << "@" << a.snapshot;
    }
  }
  if (!sol.selected.empty()) {
    os << " selected=";
    for (std::size_t i = 0; i < sol.selected.size(); ++i) {
      os << (i ? "," : "") << "m" << sol.selected[i].model << ":" << sol.selected[i].client;
    }
  }
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Harness {
 public:
  explicit Harness(EquivalenceReport& report) : report_(report) {}

  // `expected` from the source oracle; `actual` maps the solver outcome.
  void run(std::string source, const std::function<std::string()>& expected,
           const std::function<std::pair<std::string, RoutingSolution>()>& actual) {
    EquivalenceCase c;
    c.source = std::move(source);
    const auto t0 = std::chrono::steady_clock::now();
    c.expected = expected();
    try {
      auto [answer, sol] = actual();
      c.actual = std::move(answer);
      c.agree = c.actual == c.expected;
      if (!c.agree) c.witness = solution_text(sol);
    } catch (const BudgetExceeded& e) {
      c.actual = "budget";
      c.unresolved = true;
      c.witness = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++report_.cases;
    if (c.unresolved) {
      ++report_.unresolved;
    } else if (c.agree) {
      ++report_.agreements;
    } else {
      ++report_.disagreements;
    }
    report_.details.push_back(std::move(c));
  }

 private:
  EquivalenceReport& report_;
};

std::vector<CnfFormula> formula_sources(const EquivalenceParams& p, int trials, std::mt19937_64& rng) {
  if (p.exhaustive) return enumerate_irreducible_formulas(p.max_variables, p.max_clauses);
  std::vector<CnfFormula> out;
  while (static_cast<int>(out.size()) < trials) {
    const int m = static_cast<int>(uniform_int(rng, 1, p.max_variables));
    const int n = static_cast<int>(uniform_int(rng, 1, p.max_clauses));
    if (auto f = random_irreducible_formula(m, n, rng)) out.push_back(std::move(*f));
  }
  return out;
}

UndirectedGraph random_graph(int n, std::mt19937_64& rng) {
  UndirectedGraph g{n, {}};
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (bernoulli(rng, 1, 2)) g.edges.push_back({u, v});
    }
  }
  return g;
}

std::vector<DirectedGraph> digraph_sources(const EquivalenceParams& p, int trials,
                                           std::mt19937_64& rng) {
  std::vector<DirectedGraph> out;
  if (p.exhaustive) {
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= 4; ++u) {
      for (int v = 1; v <= 4; ++v) {
        if (u != v) all.push_back({u, v});
      }
    }
    for (int mask = 0; mask < (1 << all.size()); ++mask) {
      DirectedGraph g{4, {}};
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) g.arcs.push_back(all[i]);
      }
      out.push_back(std::move(g));
    }
    return out;
  }
  const int max_nodes = std::max(4, p.max_vertices);
  for (int t = 0; t < trials; ++t) {
    const int n = static_cast<int>(uniform_int(rng, 4, max_nodes));
    DirectedGraph g{n, {}};
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        if (u != v && bernoulli(rng, 1, 3)) g.arcs.push_back({u, v});
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string params_text(const EquivalenceParams& p, int trials) {
  std::ostringstream os;
  os << (p.exhaustive ? "exhaustive" : "random") << " max_variables=" << p.max_variables
     << " max_clauses=" << p.max_clauses << " max_vertices=" << p.max_vertices;
  if (!p.exhaustive) os << " trials=" << trials;
  os << " hub=" << to_string(p.hub);
  return os.str();
}

}  // namespace

EquivalenceReport verify_reduction_equivalence(Family family, const EquivalenceParams& params,
                                               int trials, std::uint64_t seed) {
  if (trials < 0) throw InvalidArgument("trials must be non-negative");
  EquivalenceReport report;
  report.family = to_string(family);
  report.seed = seed;
  report.parameters = params_text(params, trials);
  std::mt19937_64 rng(seed);
  Harness harness(report);
  SolveOptions options;
  options.limits = SearchLimits::from_env();

  auto solve_decide = [&](const ReductionArtifact& art) {
    RoutingSolution sol = solve(art.instance, options);
    return std::pair{std::string(yes_no(decide(art, sol))), sol};
  };

  switch (family) {
    case Family::k3SatTo1SfWs:
    case Family::k3SatTo2UfMm:
    case Family::k3SatTo2UfNcs:
      for (const auto& f : formula_sources(params, trials, rng)) {
        harness.run(
            "m=" + std::to_string(f.variables) + " " + to_string(f),
            [&] { return std::string(yes_no(sat_brute_force(f).satisfiable)); },
            [&] {
              if (family == Family::k3SatTo1SfWs) {
                return solve_decide(reduce_3sat_to_1sfws(f, hub_capacity(params.hub, f.clause_count())));
              }
              if (family == Family::k3SatTo2UfMm) return solve_decide(reduce_3sat_to_2ufmm(f));
              return solve_decide(reduce_3sat_to_2ufncs(f));
            });
      }
      break;
    case Family::kMax3SatTo2UfCs:
      for (const auto& f : formula_sources(params, trials, rng)) {
        const Rational base = Rational(f.variables) * (f.clause_count() + 1);
        harness.run(
            "m=" + std::to_string(f.variables) + " " + to_string(f),
            [&] { return to_string(base + sat_brute_force(f).max_satisfied); },
            [&] {
              RoutingSolution sol = solve(reduce_max3sat_to_2ufcs(f).instance, options);
              return std::pair{to_string(sol.objective), sol};
            });
      }
      break;
    case Family::kMvcTo1SfCs: {
      std::vector<UndirectedGraph> graphs;
      if (params.exhaustive) {
        graphs = enumerate_graphs(params.max_vertices);
      } else {
        for (int t = 0; t < trials; ++t) {
          graphs.push_back(random_graph(static_cast<int>(uniform_int(rng, 1, params.max_vertices)), rng));
        }
      }
      for (const auto& g : graphs) {
        const int mvc = mvc_brute_force(g).size;
        for (int k = 1; k <= g.vertices; ++k) {
          harness.run(
              graph_text(g) + " k=" + std::to_string(k), [&] { return std::string(yes_no(mvc <= k)); },
              [&] { return solve_decide(reduce_mvc_to_1sfcs(g, k)); });
        }
      }
      break;
    }
    case Family::k2EdpToMul2Mm:
      for (const auto& g : digraph_sources(params, trials, rng)) {
        harness.run(
            digraph_text(g),
            [&] { return std::string(yes_no(two_disjoint_paths_brute_force(g, {1, 2}, {3, 4}))); },
            [&] { return solve_decide(reduce_2edp_to_mul2mm(g, {1, 2}, {3, 4})); });
      }
      break;
  }
  return report;
}

}  // namespace satroute
