#pragma once

#include <atomic>
#include <functional>
#include <span>

#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"

namespace cutoffmatch {

// Hereditary, anonymous feasibility predicate: it sees only the per-project
// matched counts, must accept the all-zero vector, and must stay true when
// counts decrease pointwise.
class FeasibilityFunction {
 public:
  virtual ~FeasibilityFunction() = default;
  virtual bool feasible(std::span<const int> counts) const = 0;

  bool operator()(std::span<const int> counts) const { return feasible(counts); }
};

// Supervisor-budget feasibility, decided by max flow.
class BudgetFeasibility final : public FeasibilityFunction {
 public:
  explicit BudgetFeasibility(const Instance& inst) : inst_(&inst) {}
  bool feasible(std::span<const int> counts) const override;

  // Number of feasible() evaluations so far.
  std::size_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  const Instance* inst_;
  mutable std::atomic<std::size_t> calls_{0};
};

// Adapts an arbitrary callable, e.g. a per-project or pooled quota rule.
class PredicateFeasibility final : public FeasibilityFunction {
 public:
  explicit PredicateFeasibility(std::function<bool(std::span<const int>)> fn)
      : fn_(std::move(fn)) {}
  bool feasible(std::span<const int> counts) const override { return fn_(counts); }

 private:
  std::function<bool(std::span<const int>)> fn_;
};

// Valid matching (acceptability and capacities) whose counts pass `f`.
bool is_feasible_matching(const Instance& inst, const Matching& m, const FeasibilityFunction& f);

}  // namespace cutoffmatch
