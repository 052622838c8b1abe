#include "satroute/lp.hpp"

#include <cstddef>
#include <limits>

#include "satroute/errors.hpp"

namespace satroute {

int LinearProgram::add_variable(Rational cost) {
  costs_.push_back(std::move(cost));
  return variable_count() - 1;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, Rational>> terms,
                                   ConstraintSense sense, Rational rhs) {
  for (const auto& [var, coef] : terms) {
    if (var < 0 || var >= variable_count()) throw InvalidArgument("LP term on unknown variable");
  }
  rows_.push_back(Row{std::move(terms), sense, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<Rational>(cols + 1)), basis_(rows, 0), obj_(cols + 1) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<Rational>& objective() { return obj_; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = cells_[r];
    const Rational inv = 1 / prow[c];
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (std::size_t j : nonzero_) {
        mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch_.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i != r) eliminate(cells_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  /// Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool optimize(std::size_t allowed) {
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      Rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (sgn(cells_[i][enter]) <= 0) continue;
        Rational ratio = cells_[i][cols_] / cells_[i][enter];
        if (leave == npos || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> nonzero_;
  Rational scratch_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = static_cast<std::size_t>(lp.variable_count());
  const std::size_t m = static_cast<std::size_t>(lp.constraint_count());

  // Normalise rows to rhs >= 0 and count auxiliary columns.
  struct NormRow {
    const LinearProgram::Row* row;
    bool negate;
    ConstraintSense sense;
  };
  std::vector<NormRow> norm;
  norm.reserve(m);
  std::size_t slack_cols = 0;
  std::size_t artificial_cols = 0;
  for (const auto& row : lp.rows()) {
    const bool negate = sgn(row.rhs) < 0;
    ConstraintSense sense = row.sense;
    if (negate && sense != ConstraintSense::kEqual) {
      sense = sense == ConstraintSense::kLessEqual ? ConstraintSense::kGreaterEqual
                                                   : ConstraintSense::kLessEqual;
    }
    norm.push_back({&row, negate, sense});
    if (sense != ConstraintSense::kEqual) ++slack_cols;
    if (sense != ConstraintSense::kLessEqual) ++artificial_cols;
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_cols;
  const std::size_t cols = first_artificial + artificial_cols;
  Tableau t(m, cols);

  std::size_t next_slack = first_slack;
  std::size_t next_art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nr = norm[i];
    for (const auto& [var, coef] : nr.row->terms) {
      t.at(i, static_cast<std::size_t>(var)) += nr.negate ? Rational(-coef) : coef;
    }
    t.rhs(i) = nr.negate ? Rational(-nr.row->rhs) : nr.row->rhs;
    switch (nr.sense) {
      case ConstraintSense::kLessEqual:
        t.at(i, next_slack) = 1;
        t.basis()[i] = next_slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_art) = 1;
        t.basis()[i] = next_art++;
        break;
      case ConstraintSense::kEqual:
        t.at(i, next_art) = 1;
        t.basis()[i] = next_art++;
        break;
    }
  }

  LpSolution out;

  // Phase one: minimise the sum of artificials.
  if (artificial_cols > 0) {
    auto& obj = t.objective();
    for (std::size_t j = first_artificial; j < cols; ++j) obj[j] = 1;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.basis()[i] < first_artificial) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(t.at(i, j)) != 0) obj[j] -= t.at(i, j);
      }
    }
    t.optimize(cols);
    if (sgn(t.objective()[cols]) != 0) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < first_artificial) continue;
      std::size_t col = cols;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == cols) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
      }
    }
  }

  // Phase two over the structural and slack columns.
  auto& obj = t.objective();
  for (auto& v : obj) v = 0;
  for (std::size_t j = 0; j < n; ++j) obj[j] = lp.costs()[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t b = t.basis()[i];
    if (b >= n || sgn(lp.costs()[b]) == 0) continue;
    const Rational cb = lp.costs()[b];
    for (std::size_t j = 0; j <= cols; ++j) {
      if (sgn(t.at(i, j)) != 0) obj[j] -= cb * t.at(i, j);
    }
  }
  if (!t.optimize(first_artificial)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  out.status = LpStatus::kOptimal;
  out.values.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < n) out.values[t.basis()[i]] = t.rhs(i);
  }
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.costs()[j] * out.values[j];
  return out;
}

}  // namespace satroute
