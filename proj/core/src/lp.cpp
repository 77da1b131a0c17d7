#include "cutoffmatch/lp.hpp"

#include <stdexcept>

namespace cutoffmatch {

int LinearProgram::add_variable(std::string name, std::optional<Rational> lower,
                                std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return num_variables() - 1;
}

int LinearProgram::add_constraint(std::string name, std::vector<Term> terms, Sense sense,
                                  Rational rhs) {
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) throw std::out_of_range("unknown LP variable");
  }
  constraints_.push_back({std::move(name), std::move(terms), sense, std::move(rhs)});
  return num_constraints() - 1;
}

void LinearProgram::set_objective(Direction direction, std::vector<Term> terms, Rational constant) {
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) throw std::out_of_range("unknown LP variable");
  }
  direction_ = direction;
  objective_ = std::move(terms);
  objective_constant_ = std::move(constant);
}

void LinearProgram::set_bounds(int var, std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  auto& v = variables_.at(var);
  v.lower = std::move(lower);
  v.upper = std::move(upper);
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Original variable = offset + sum(sign_k * column_k).
struct ColumnMap {
  Rational offset;
  std::vector<std::pair<int, int>> columns;  // (column, sign)
};

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cell_(rows, std::vector<Rational>(cols + 1)),
        cost_(cols + 1), basis_(rows, -1) {}

  Rational& at(int i, int j) { return cell_[i][j]; }
  const Rational& at(int i, int j) const { return cell_[i][j]; }
  Rational& rhs(int i) { return cell_[i][cols_]; }
  Rational& cost(int j) { return cost_[j]; }
  Rational& cost_rhs() { return cost_[cols_]; }
  int& basis(int i) { return basis_[i]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Reduced costs for column cost vector c (size cols).
  void price(const std::vector<Rational>& c) {
    for (int j = 0; j <= cols_; ++j) cost_[j] = j < cols_ ? c[j] : Rational(0);
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (cell_[i][j] != 0) cost_[j] -= cb * cell_[i][j];
      }
    }
  }

  void pivot(int row, int col) {
    auto& pr = cell_[row];
    const Rational piv = pr[col];
    nonzero_.clear();
    for (int j = 0; j <= cols_; ++j) {
      if (pr[j] != 0) {
        pr[j] /= piv;
        nonzero_.push_back(j);
      }
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == row || cell_[i][col] == 0) continue;
      eliminate(cell_[i], pr, cell_[i][col]);
    }
    if (cost_[col] != 0) eliminate(cost_, pr, cost_[col]);
    basis_[row] = col;
  }

  // Bland's rule simplex on the current cost row. `allowed` bounds the
  // entering column index. Returns false if unbounded.
  bool optimize(int allowed, std::size_t& pivots) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best;
      for (int i = 0; i < rows_; ++i) {
        if (cell_[i][enter] <= 0) continue;
        Rational ratio = cell_[i][cols_] / cell_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

 private:
  void eliminate(std::vector<Rational>& target, const std::vector<Rational>& pr, Rational factor) {
    for (int j : nonzero_) target[j] -= factor * pr[j];
  }

  int rows_;
  int cols_;
  std::vector<std::vector<Rational>> cell_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
};

struct StandardRow {
  std::vector<Rational> coef;  // structural columns
  Sense sense;
  Rational rhs;
  int sign = 1;           // multiplier applied to the source row
  int source = -1;        // constraint index, -1 for bound rows
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options) {
  LpSolution solution;
  const int nvars = lp.num_variables();

  // Variable substitution.
  std::vector<ColumnMap> maps(nvars);
  int n = 0;
  std::vector<std::pair<int, Rational>> bound_rows;  // (column, upper - lower)
  for (int j = 0; j < nvars; ++j) {
    const auto& v = lp.variable(j);
    if (v.lower && v.upper && *v.lower > *v.upper) return solution;  // infeasible
    if (v.lower && v.upper && *v.lower == *v.upper) {
      maps[j].offset = *v.lower;
    } else if (v.lower) {
      maps[j].offset = *v.lower;
      maps[j].columns.emplace_back(n, 1);
      if (v.upper) bound_rows.emplace_back(n, *v.upper - *v.lower);
      ++n;
    } else if (v.upper) {
      maps[j].offset = *v.upper;
      maps[j].columns.emplace_back(n++, -1);
    } else {
      maps[j].offset = 0;
      maps[j].columns.emplace_back(n++, 1);
      maps[j].columns.emplace_back(n++, -1);
    }
  }

  std::vector<StandardRow> rows;
  for (int k = 0; k < lp.num_constraints(); ++k) {
    const auto& c = lp.constraints()[k];
    StandardRow row{std::vector<Rational>(n), c.sense, c.rhs, 1, k};
    for (const auto& t : c.terms) {
      row.rhs -= t.coef * maps[t.var].offset;
      for (const auto& [col, sign] : maps[t.var].columns) row.coef[col] += t.coef * sign;
    }
    rows.push_back(std::move(row));
  }
  for (const auto& [col, width] : bound_rows) {
    StandardRow row{std::vector<Rational>(n), Sense::kLessEqual, width, 1, -1};
    row.coef[col] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0) {
      row.sign = -1;
      row.rhs = -row.rhs;
      for (auto& a : row.coef) a = -a;
      if (row.sense == Sense::kLessEqual) {
        row.sense = Sense::kGreaterEqual;
      } else if (row.sense == Sense::kGreaterEqual) {
        row.sense = Sense::kLessEqual;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slacks = 0;
  int artificials = 0;
  for (const auto& row : rows) {
    if (row.sense != Sense::kEqual) ++slacks;
    if (row.sense != Sense::kLessEqual) ++artificials;
  }
  const int first_artificial = n + slacks;
  const int total = first_artificial + artificials;

  Tableau tab(m, total);
  std::vector<int> identity_col(m);
  {
    int next_slack = n;
    int next_art = first_artificial;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) tab.at(i, j) = rows[i].coef[j];
      tab.rhs(i) = rows[i].rhs;
      switch (rows[i].sense) {
        case Sense::kLessEqual:
          tab.at(i, next_slack) = 1;
          identity_col[i] = next_slack++;
          break;
        case Sense::kGreaterEqual:
          tab.at(i, next_slack++) = -1;
          tab.at(i, next_art) = 1;
          identity_col[i] = next_art++;
          break;
        case Sense::kEqual:
          tab.at(i, next_art) = 1;
          identity_col[i] = next_art++;
          break;
      }
      tab.basis(i) = identity_col[i];
    }
  }

  // Phase 1: minimize the sum of artificials.
  if (artificials > 0) {
    std::vector<Rational> phase1(total);
    for (int j = first_artificial; j < total; ++j) phase1[j] = 1;
    tab.price(phase1);
    tab.optimize(total, solution.pivots);
    if (tab.cost_rhs() != 0) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    for (int i = 0; i < m; ++i) {
      if (tab.basis(i) < first_artificial) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          ++solution.pivots;
          break;
        }
      }
      // A row whose artificial stays basic is redundant and never pivots again.
    }
  }

  // Phase 2.
  const bool maximize = lp.direction() == Direction::kMaximize;
  std::vector<Rational> cost(total);
  // constant of the minimized objective
  Rational constant = maximize ? Rational(-lp.objective_constant()) : lp.objective_constant();
  for (const auto& t : lp.objective()) {
    const Rational c = maximize ? Rational(-t.coef) : t.coef;
    constant += c * maps[t.var].offset;
    for (const auto& [col, sign] : maps[t.var].columns) cost[col] += c * sign;
  }
  tab.price(cost);
  if (!tab.optimize(first_artificial, solution.pivots)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  std::vector<Rational> column_value(total);
  for (int i = 0; i < m; ++i) column_value[tab.basis(i)] = tab.rhs(i);

  solution.status = LpStatus::kOptimal;
  solution.values.resize(nvars);
  for (int j = 0; j < nvars; ++j) {
    Rational value = maps[j].offset;
    for (const auto& [col, sign] : maps[j].columns) value += sign * column_value[col];
    solution.values[j] = std::move(value);
  }
  solution.objective = evaluate_objective(lp, solution.values);

  // Standard-form duals y_i = -reduced cost of the row's identity column.
  std::vector<Rational> y(m);
  for (int i = 0; i < m; ++i) y[i] = -tab.cost(identity_col[i]);
  solution.duals.assign(lp.num_constraints(), Rational(0));
  for (int i = 0; i < m; ++i) {
    if (rows[i].source < 0) continue;
    Rational dual = rows[i].sign * y[i];
    solution.duals[rows[i].source] = maximize ? Rational(-dual) : dual;
  }

  if (options.verify_duality) {
    Rational dual_objective = constant;
    for (int i = 0; i < m; ++i) dual_objective += rows[i].rhs * y[i];
    const Rational primal = maximize ? Rational(-solution.objective) : solution.objective;
    if (dual_objective != primal) throw std::logic_error("LP duality gap is nonzero");
    for (int j = 0; j < n; ++j) {
      Rational reduced = cost[j];
      for (int i = 0; i < m; ++i) reduced -= y[i] * rows[i].coef[j];
      if (reduced < 0) throw std::logic_error("LP dual solution infeasible");
    }
    for (int i = 0; i < m; ++i) {
      if (rows[i].sense == Sense::kLessEqual && y[i] > 0) throw std::logic_error("LP dual sign");
      if (rows[i].sense == Sense::kGreaterEqual && y[i] < 0) throw std::logic_error("LP dual sign");
    }
  }
  return solution;
}

bool satisfies_exactly(const LinearProgram& lp, std::span<const Rational> values) {
  if (static_cast<int>(values.size()) != lp.num_variables()) return false;
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    if (v.lower && values[j] < *v.lower) return false;
    if (v.upper && values[j] > *v.upper) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values[t.var];
    switch (c.sense) {
      case Sense::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Sense::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational evaluate_objective(const LinearProgram& lp, std::span<const Rational> values) {
  Rational total = lp.objective_constant();
  for (const auto& t : lp.objective()) total += t.coef * values[t.var];
  return total;
}

}  // namespace cutoffmatch
