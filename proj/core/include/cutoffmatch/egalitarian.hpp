#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/rational.hpp"

namespace cutoffmatch {

// t_{s,p} for every supervision pair (s, p), p in P_s.
using TargetProfile = std::map<std::pair<int, int>, Rational>;

enum class TargetMode { kStrict, kLenient };

// 1/|S_p| for every supervisor of p.
TargetProfile default_targets(const Instance& inst, const Matching& m);
// |M(p)|/|S_p|, which sums to |M(p)| per project. Only valid in lenient mode
// unless every |M(p)| is 1.
TargetProfile proportional_targets(const Instance& inst, const Matching& m);

struct TargetCheck {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool ok() const { return errors.empty(); }
};

// Strict: 0 < t <= 1 and the targets of each project sum to 1.
// Lenient: t > 0, except that t = 0 is tolerated on projects nobody is
// matched to; sums other than 1 become warnings.
// Missing or unknown pairs are errors in both modes.
TargetCheck check_targets(const Instance& inst, const Matching& m, const TargetProfile& targets,
                          TargetMode mode);

struct AllocationEntry {
  int supervisor = 0;
  int project = 0;
  Rational x;
  Rational target;
  Rational ratio;
  int round_fixed = 0;  // 1-based round in which the ratio was frozen, 0 if forced to zero upfront
};

struct EgalitarianResult {
  std::vector<AllocationEntry> pairs;  // ascending (supervisor, project)
  FundingAllocation allocation;        // positive entries only
  std::vector<Rational> ratios;        // sorted non-increasing
  std::vector<Rational> round_lambda;  // lambda* per round
  std::vector<std::size_t> tight_sizes;  // |T_tight| after each round
  std::size_t lp_solves = 0;
};

// Leximin allocation of supervisor budgets to the projects of a feasible
// matching: repeatedly minimise the largest unfrozen ratio x/t, then freeze
// every pair whose ratio cannot drop below it (auxiliary LP optimum exactly 0).
// Throws std::invalid_argument for infeasible matchings or invalid targets.
EgalitarianResult egalitarian_allocation(const Instance& inst, const Matching& m,
                                         const TargetProfile& targets,
                                         TargetMode mode = TargetMode::kStrict);

// Independent check through sequential top-k-sum LPs: the allocation must be
// feasible for `m` and, for every k, its k largest ratios must sum to the
// least value attainable given the earlier prefix sums.
bool verify_leximin(const Instance& inst, const Matching& m, const TargetProfile& targets,
                    const FundingAllocation& allocation);

// Ratios x/t of an allocation sorted non-increasing; pairs with t = 0 count as 0.
std::vector<Rational> ratio_vector(const Instance& inst, const TargetProfile& targets,
                                   const FundingAllocation& allocation);

}  // namespace cutoffmatch
