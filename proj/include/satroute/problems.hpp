#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace satroute {

/// Signed literal over variables 1..m.
struct Literal {
  int variable = 0;
  bool negated = false;

  Literal negation() const { return {variable, !negated}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula with m variables and n clauses.
struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  /// assignment[v-1] is the value of variable v.
  int count_satisfied(const std::vector<bool>& assignment) const;
  /// Every variable occurs positively in one clause and negatively in a
  /// different one.
  bool irreducible() const;
  /// Throws InvalidArgument for out-of-range literals.
  void validate() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

std::string to_string(const CnfFormula& formula);

/// Simple undirected graph on vertices 1..n.
struct UndirectedGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws InvalidArgument on self-loops, duplicates or bad endpoints.
  void validate() const;
};

/// Directed graph on nodes 1..n, for the disjoint-paths source problem.
struct DirectedGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> arcs;

  void validate() const;
};

}  // namespace satroute
