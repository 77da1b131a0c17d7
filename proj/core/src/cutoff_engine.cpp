#include "cutoffmatch/cutoff_engine.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

#include "cutoffmatch/stability.hpp"

namespace cutoffmatch {
namespace {

std::vector<int> resolve_order(const Instance& inst, std::span<const int> order) {
  std::vector<int> out;
  if (order.empty()) {
    for (int p = 0; p < inst.num_projects(); ++p) out.push_back(p);
    return out;
  }
  std::vector<bool> seen(inst.num_projects(), false);
  for (int p : order) {
    if (p < 0 || p >= inst.num_projects() || seen[p]) {
      throw std::invalid_argument("project order is not a permutation");
    }
    seen[p] = true;
    out.push_back(p);
  }
  if (static_cast<int>(out.size()) != inst.num_projects()) {
    throw std::invalid_argument("project order is not a permutation");
  }
  return out;
}

}  // namespace

EngineResult solve_cutoff_stable(const Instance& inst, const FeasibilityFunction& f,
                                 std::span<const int> order, EngineOptions options) {
  const auto sequence = resolve_order(inst, order);
  EngineResult result{Matching(inst.num_applicants()),
                      CutoffVector{std::vector<int>(inst.num_projects(), inst.num_applicants() + 1)},
                      {}};
  auto& m = result.matching;
  auto& d = result.cutoffs;
  auto& trace = result.trace;
  std::vector<int> counts(inst.num_projects(), 0);

  for (;;) {
    bool lowered = false;
    for (int p : sequence) {
      if (d[p] == 0) continue;
      const int new_cutoff = d[p] - 1;
      const int a = inst.applicant_with_score(p, new_cutoff);
      const bool moves = a != kUnmatched && inst.applicant_prefers(a, p, m.project_of(a));

      if (moves) {
        // M^{-p} = (M + (a,p)) - (a,M(a)); capacity first, then f.
        if (counts[p] + 1 > inst.capacity(p)) continue;
        const int previous = m.project_of(a);
        std::vector<int> probe = counts;
        ++probe[p];
        if (previous != kUnmatched) --probe[previous];
        ++trace.feasibility_calls;
        if (!f(probe)) continue;
        counts = std::move(probe);
        m.assign(a, p);
      }

      d[p] = new_cutoff;
      trace.steps.push_back({p, new_cutoff, a, moves, m.size(), trace.feasibility_calls});
      if (options.cross_check && induce(inst, d) != m) {
        throw std::logic_error("incremental matching diverged from induced matching");
      }
      lowered = true;
      break;
    }
    if (!lowered) break;
  }
  return result;
}

EngineResult solve_cutoff_stable(const Instance& inst, std::span<const int> order,
                                 EngineOptions options) {
  return solve_cutoff_stable(inst, BudgetFeasibility(inst), order, options);
}

std::size_t count_feasibility_calls(const EngineTrace& trace) { return trace.feasibility_calls; }

std::size_t feasibility_call_bound(const Instance& inst) {
  const auto p = static_cast<std::size_t>(inst.num_projects());
  return (static_cast<std::size_t>(inst.num_applicants()) + 1) * p * p;
}

std::string trace_to_jsonl(const Instance& inst, const EngineTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps) {
    nlohmann::ordered_json line;
    line["project"] = inst.project(step.project).id;
    line["cutoff"] = step.new_cutoff;
    line["admitted"] =
        step.admitted == kUnmatched ? nlohmann::ordered_json() : nlohmann::ordered_json(inst.applicant_id(step.admitted));
    line["moved"] = step.moved;
    line["matching_size"] = step.matching_size;
    line["feasibility_calls"] = step.feasibility_calls;
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace cutoffmatch
