#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutoffmatch/rational.hpp"

namespace cutoffmatch {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class Direction { kMinimize, kMaximize };
enum class VarKind { kContinuous, kInteger, kBinary };

struct Term {
  int var = 0;
  Rational coef;
};

struct LpVariable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = -inf
  std::optional<Rational> upper;  // nullopt = +inf
};

struct LpConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

// Linear program with rational data: bounded variables, linear rows and a
// linear objective plus constant.
class LinearProgram {
 public:
  int add_variable(std::string name, std::optional<Rational> lower = Rational(0),
                   std::optional<Rational> upper = std::nullopt);
  int add_constraint(std::string name, std::vector<Term> terms, Sense sense, Rational rhs);
  void set_objective(Direction direction, std::vector<Term> terms, Rational constant = 0);
  void set_bounds(int var, std::optional<Rational> lower, std::optional<Rational> upper);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const LpVariable& variable(int j) const { return variables_.at(j); }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }
  const Rational& objective_constant() const { return objective_constant_; }
  Direction direction() const { return direction_; }

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::vector<Term> objective_;
  Rational objective_constant_ = 0;
  Direction direction_ = Direction::kMinimize;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;  // per variable, when optimal
  Rational objective;            // including the constant
  // Per constraint, in the sign convention of the stated direction: the rate
  // of change of the optimum per unit increase of the row's right-hand side.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

struct LpOptions {
  // Rebuild the dual solution from the final basis and check dual
  // feasibility and zero duality gap; throws std::logic_error on failure.
  bool verify_duality = false;
};

// Two-phase primal simplex on a dense rational tableau with Bland's rule.
// Fixed variables are substituted out before the tableau is built.
LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options = {});

// Exact check of bounds and every row.
bool satisfies_exactly(const LinearProgram& lp, std::span<const Rational> values);
Rational evaluate_objective(const LinearProgram& lp, std::span<const Rational> values);

// CPLEX LP file text. `kinds`, when given, marks General/Binary sections.
// Coefficients without an exact decimal form are written to 17 significant
// digits, with the exact fraction in a preceding comment.
std::string to_lp_format(const LinearProgram& lp, std::span<const VarKind> kinds = {});

}  // namespace cutoffmatch
