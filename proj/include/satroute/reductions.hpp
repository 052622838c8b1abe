#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satroute/instance.hpp"
#include "satroute/problems.hpp"

namespace satroute {

enum class Family {
  k3SatTo1SfWs,     // "3sat-1sfws"
  k3SatTo2UfMm,     // "3sat-2ufmm"
  k3SatTo2UfNcs,    // "3sat-2ufncs"
  kMax3SatTo2UfCs,  // "max3sat-2ufcs"
  kMvcTo1SfCs,      // "mvc-1sfcs"
  k2EdpToMul2Mm,    // "2edp-mul2mm"
};

const char* to_string(Family family);
Family parse_family(std::string_view name);

/// How a solver outcome on the gadget answers the source problem.
enum class DecisionRule {
  kFeasible,          // yes iff the routing is feasible
  kObjectiveEquals,   // yes iff feasible and objective == threshold
  kObjectiveAtLeast,  // yes iff objective >= threshold
};

struct ReductionArtifact {
  Family family;
  RoutingInstance instance;
  DecisionRule rule = DecisionRule::kFeasible;
  Rational threshold;
  std::string decision;            // the mapping in words
  std::vector<std::string> notes;  // what each arc group encodes
};

/// Source-problem answer implied by a solution of the gadget instance.
bool decide(const ReductionArtifact& artifact, const RoutingSolution& solution);

/// Hub arc capacity 1 + n/(n+1), the value the feasibility argument needs.
Rational default_hub_capacity(int clauses);
/// Hub arc capacity 1 + 1/n.
Rational narrow_hub_capacity(int clauses);

ReductionArtifact reduce_3sat_to_1sfws(const CnfFormula& formula,
                                       std::optional<Rational> hub_capacity = std::nullopt);
ReductionArtifact reduce_3sat_to_2ufmm(const CnfFormula& formula);
ReductionArtifact reduce_3sat_to_2ufncs(const CnfFormula& formula);
/// Yes iff at least `target` clauses are simultaneously satisfiable
/// (default: all of them).
ReductionArtifact reduce_max3sat_to_2ufcs(const CnfFormula& formula,
                                          std::optional<int> target = std::nullopt);
ReductionArtifact reduce_mvc_to_1sfcs(const UndirectedGraph& graph, int cover_size);
ReductionArtifact reduce_2edp_to_mul2mm(const DirectedGraph& graph, std::pair<int, int> first,
                                        std::pair<int, int> second);

/// Clauses satisfiable at the optimum of a MAX-3SAT gadget solution.
int satisfied_clauses_from_utility(const CnfFormula& formula, const Rational& utility);

/// Irreducible formulas with 1..max_variables variables and 1..max_clauses
/// clauses, one per class under variable renaming, polarity flips and clause
/// order. Clauses hold 1 to 3 distinct literals (padded by repetition).
std::vector<CnfFormula> enumerate_irreducible_formulas(int max_variables, int max_clauses);

/// Random irreducible formula with exactly m variables and n clauses
/// (rejection sampling); nullopt if none was found in `attempts` draws.
std::optional<CnfFormula> random_irreducible_formula(int m, int n, std::mt19937_64& rng,
                                                     int attempts = 10'000);

/// Simple graphs on 1..max_vertices vertices, one per isomorphism class.
std::vector<UndirectedGraph> enumerate_graphs(int max_vertices);

/// Whether two arc-disjoint paths o1->d1 and o2->d2 exist (exhaustive).
bool two_disjoint_paths_brute_force(const DirectedGraph& graph, std::pair<int, int> first,
                                    std::pair<int, int> second);

/// Hub arc capacity rule for the 1-SF-WS gadget.
enum class HubSetting {
  kSpare,    // 1 + n/(n+1)
  kNarrow,  // 1 + 1/n
};
const char* to_string(HubSetting setting);
/// "spare" or "narrow".
HubSetting parse_hub_setting(std::string_view name);
Rational hub_capacity(HubSetting setting, int clauses);

struct EquivalenceParams {
  int max_variables = 3;
  int max_clauses = 3;
  int max_vertices = 4;
  bool exhaustive = false;                // enumerate instead of sampling
  HubSetting hub = HubSetting::kSpare;    // 3sat-1sfws only
};

struct EquivalenceCase {
  std::string source;   // source instance in text form
  std::string expected; // oracle answer
  std::string actual;   // answer read off the solver
  bool agree = false;
  bool unresolved = false;  // solver refused (budget)
  double seconds = 0;
  std::string witness;  // solution summary for disagreements
};

struct EquivalenceReport {
  std::string family;
  std::uint64_t seed = 0;
  std::string parameters;
  int cases = 0;
  int agreements = 0;
  int disagreements = 0;
  int unresolved = 0;
  std::vector<EquivalenceCase> details;

  double agreement_rate() const { return cases == 0 ? 1.0 : static_cast<double>(agreements) / cases; }
};

/// Runs gadget + solver against the source-problem oracle. In exhaustive mode
/// `trials` is ignored; otherwise `trials` sources are drawn from `seed`.
EquivalenceReport verify_reduction_equivalence(Family family, const EquivalenceParams& params,
                                               int trials, std::uint64_t seed);

}  // namespace satroute
