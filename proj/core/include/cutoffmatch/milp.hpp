#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/lp.hpp"
#include "cutoffmatch/matching.hpp"

namespace cutoffmatch {

// Maximum-size cutoff stable matching as a MILP: binary y per mutually
// acceptable pair, funding x per supervision pair, integer cutoff d per
// project, objective max W * sum(y) - sum(d).
struct MilpModel {
  LinearProgram lp;
  std::vector<VarKind> kinds;
  std::map<std::pair<int, int>, int> y;  // (applicant, project) -> column
  std::map<std::pair<int, int>, int> x;  // (supervisor, project) -> column
  std::vector<int> d;                    // per project
  long big_w = 0;
};

MilpModel build_model(const Instance& inst);

enum class MilpStatus { kOptimal, kInfeasible, kNodeLimit };
std::string_view to_string(MilpStatus status);

struct MilpOptions {
  std::size_t node_limit = 0;  // 0 = unlimited
  // Every integer solution has an integral objective, so a node whose bound
  // rounds down to the incumbent can be pruned.
  bool integral_objective = false;
};

struct MilpResult {
  MilpStatus status = MilpStatus::kInfeasible;
  std::vector<Rational> values;  // best integer solution found
  Rational objective;
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
};

// Depth-first branch and bound with exact LP relaxations. Branches on the
// most fractional binary first, then on the lowest-index fractional integer;
// the up branch is explored first. `incumbent`, if given, must be a feasible
// integer point.
MilpResult solve_milp(const LinearProgram& lp, const std::vector<VarKind>& kinds,
                      const MilpOptions& options = {},
                      const std::vector<Rational>* incumbent = nullptr);

struct MaxCutoffResult {
  MilpStatus status = MilpStatus::kInfeasible;
  Matching matching;
  CutoffVector cutoffs;
  Rational objective;
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
};

// Solves the model, seeded with the cutoff-decreasing engine's matching as
// incumbent. On optimality the result is re-checked for cutoff stability and
// std::logic_error is thrown if that fails. With a node limit the best
// matching found so far is returned with status kNodeLimit.
MaxCutoffResult solve_max_cutoff_stable(const Instance& inst, const MilpOptions& options = {});

// Objective value of a matching with the given cutoffs.
Rational milp_objective(const Instance& inst, const Matching& m, const CutoffVector& d);

// CPLEX LP text of the model, names y_<a>_<p>, x_<s>_<p>, d_<p>.
std::string export_lp(const MilpModel& model);
void export_lp_file(const MilpModel& model, std::ostream& out);
// Throws std::runtime_error if the file cannot be written.
void export_lp_file(const MilpModel& model, const std::string& path);

}  // namespace cutoffmatch
