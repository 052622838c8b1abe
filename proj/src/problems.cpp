#include "satroute/problems.hpp"

#include <set>

#include "satroute/errors.hpp"

namespace satroute {

int CnfFormula::count_satisfied(const std::vector<bool>& assignment) const {
  int count = 0;
  for (const auto& clause : clauses) {
    for (const auto& lit : clause) {
      if (assignment[lit.variable - 1] != lit.negated) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool CnfFormula::irreducible() const {
  for (int v = 1; v <= variables; ++v) {
    bool found = false;
    for (std::size_t i = 0; i < clauses.size() && !found; ++i) {
      for (std::size_t j = 0; j < clauses.size() && !found; ++j) {
        if (i == j) continue;
        bool pos = false, neg = false;
        for (const auto& l : clauses[i]) pos |= l.variable == v && !l.negated;
        for (const auto& l : clauses[j]) neg |= l.variable == v && l.negated;
        found = pos && neg;
      }
    }
    if (!found) return false;
  }
  return true;
}

void CnfFormula::validate() const {
  if (variables < 0) throw InvalidArgument("negative variable count");
  for (const auto& clause : clauses) {
    for (const auto& l : clause) {
      if (l.variable < 1 || l.variable > variables) {
        throw InvalidArgument("literal on unknown variable " + std::to_string(l.variable));
      }
    }
  }
}

std::string to_string(const CnfFormula& f) {
  std::string out;
  for (const auto& clause : f.clauses) {
    if (!out.empty()) out += " & ";
    out += "(";
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (i) out += " | ";
      out += (clause[i].negated ? "~x" : "x") + std::to_string(clause[i].variable);
    }
    out += ")";
  }
  return out.empty() ? "true" : out;
}

void UndirectedGraph::validate() const {
  if (vertices < 0) throw InvalidArgument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > vertices || v > vertices) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InvalidArgument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

void DirectedGraph::validate() const {
  if (nodes < 0) throw InvalidArgument("negative node count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : arcs) {
    if (u < 1 || v < 1 || u > nodes || v > nodes) throw InvalidArgument("arc endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at node " + std::to_string(u));
    if (!seen.insert({u, v}).second) throw InvalidArgument("duplicate arc");
  }
}

}  // namespace satroute
