#pragma once

#include <utility>
#include <vector>

#include "satroute/rational.hpp"

namespace satroute {

enum class ConstraintSense { kLessEqual, kEqual, kGreaterEqual };

/// minimize c.x subject to linear rows and x >= 0, over exact rationals.
class LinearProgram {
 public:
  int add_variable(Rational cost = 0);
  void add_constraint(std::vector<std::pair<int, Rational>> terms, ConstraintSense sense,
                      Rational rhs);

  int variable_count() const { return static_cast<int>(costs_.size()); }
  int constraint_count() const { return static_cast<int>(rows_.size()); }

  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    ConstraintSense sense;
    Rational rhs;
  };
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Rational> costs_;
  std::vector<Row> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> values;
};

/// Two-phase tableau simplex with Bland's rule. Exact; never cycles.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace satroute
