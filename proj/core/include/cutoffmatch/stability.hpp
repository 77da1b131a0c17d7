#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"

namespace cutoffmatch {

struct BlockingPair {
  int applicant = kUnmatched;
  int project = kUnmatched;
  bool operator==(const BlockingPair&) const = default;
};

// All (a, p) with p preferred by a to M(a) such that p either has a free seat
// and finds a acceptable, or ranks a above one of its current applicants.
// Ordered by applicant index, then by a's preference order.
std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& m);

// a prefers `project` to M(a) and `project` ranks a above `displaced`, who
// holds a seat there.
struct EnvyWitness {
  int applicant = kUnmatched;
  int project = kUnmatched;
  int displaced = kUnmatched;
};

struct FairnessReport {
  bool fair = true;
  std::vector<EnvyWitness> witnesses;
};

FairnessReport check_fairness(const Instance& inst, const Matching& m);
bool is_fair(const Instance& inst, const Matching& m);

// Every applicant takes her best project among those where her score reaches
// the cutoff. The result is unchecked: it may exceed capacities or budgets.
Matching induce(const Instance& inst, const CutoffVector& cutoffs);

// Cutoff of each project = score of its lowest-ranked member, |A|+1 when
// empty. Throws std::invalid_argument for unfair matchings, which no cutoff
// vector induces.
CutoffVector cutoffs_for(const Instance& inst, const Matching& m);

bool cutoffs_in_range(const Instance& inst, const CutoffVector& cutoffs);

// Whether induce(d^{-p}) is a valid matching passing `f` for no p with
// d(p) > 0.
bool cutoffs_are_minimal(const Instance& inst, const CutoffVector& cutoffs,
                         const FeasibilityFunction& f);

// Every acceptable applicant outside M(p) could be added to p while the
// matching stays valid and feasible.
bool is_unconstrained(const Instance& inst, const Matching& m, int project,
                      const FeasibilityFunction& f);
bool is_unconstrained(const Instance& inst, const Matching& m, int project);

enum class StabilityLevel { kInfeasible, kUnfair, kFair, kWeak, kCutoff, kStrong };

std::string_view to_string(StabilityLevel level);

struct StabilityWitness {
  int applicant = kUnmatched;
  int project = kUnmatched;
  std::string reason;
};

struct StabilityVerdict {
  StabilityLevel level = StabilityLevel::kInfeasible;
  bool feasible = false;
  bool fair = false;
  bool weakly_stable = false;
  bool cutoff_stable = false;
  bool strongly_stable = false;
  // What stands between `level` and the next level up.
  std::vector<StabilityWitness> witnesses;
  std::size_t feasibility_calls = 0;
};

// Evaluates fairness and the weak, cutoff and strong non-wastefulness
// conditions independently; `level` is the highest level whose prerequisites
// all hold. Every candidate swap is re-checked through `f`.
StabilityVerdict check_stability(const Instance& inst, const Matching& m,
                                 const FeasibilityFunction& f);
StabilityVerdict check_stability(const Instance& inst, const Matching& m);

// Every applicant weakly prefers m1 to m2 and at least one strictly.
bool pareto_dominates(const Instance& inst, const Matching& m1, const Matching& m2);

}  // namespace cutoffmatch
