#include "cutoffmatch/feasibility.hpp"

#include "cutoffmatch/funding_flow.hpp"

namespace cutoffmatch {

bool BudgetFeasibility::feasible(std::span<const int> counts) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  return check_counts_feasibility(*inst_, counts).feasible;
}

bool is_feasible_matching(const Instance& inst, const Matching& m, const FeasibilityFunction& f) {
  if (!is_valid_matching(inst, m)) return false;
  const auto counts = m.counts(inst.num_projects());
  return f(counts);
}

}  // namespace cutoffmatch
