#include "cutoffmatch/stability.hpp"

#include <stdexcept>

#include "cutoffmatch/feasibility.hpp"

namespace cutoffmatch {
namespace {

// Counts every evaluation routed through it.
class CountingFeasibility final : public FeasibilityFunction {
 public:
  explicit CountingFeasibility(const FeasibilityFunction& inner) : inner_(inner) {}
  bool feasible(std::span<const int> counts) const override {
    ++calls_;
    return inner_(counts);
  }
  std::size_t calls() const { return calls_; }

 private:
  const FeasibilityFunction& inner_;
  mutable std::size_t calls_ = 0;
};

// Validity + feasibility of the counts obtained by adding one applicant to
// `add` and (optionally) removing one from `remove`.
bool shifted_feasible(const Instance& inst, std::vector<int> counts, int add, int remove,
                      const FeasibilityFunction& f) {
  if (remove != kUnmatched) --counts[remove];
  ++counts[add];
  if (counts[add] > inst.capacity(add)) return false;
  return f(counts);
}

// No member of M(p) ranks below a at p.
bool all_members_preferred(const Instance& inst, const Matching& m, int a, int p) {
  for (int other : m.members(p)) {
    if (inst.project_prefers(p, a, other)) return false;
  }
  return true;
}

}  // namespace

std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& m) {
  std::vector<BlockingPair> out;
  const auto counts = m.counts(inst.num_projects());
  for (int a = 0; a < inst.num_applicants(); ++a) {
    const int current = m.project_of(a);
    for (int p : inst.applicant_prefs(a)) {
      if (p == current) break;
      if (!inst.acceptable_to_project(p, a)) continue;
      bool blocks = counts[p] < inst.capacity(p);
      if (!blocks) blocks = !all_members_preferred(inst, m, a, p);
      if (blocks) out.push_back({a, p});
    }
  }
  return out;
}

FairnessReport check_fairness(const Instance& inst, const Matching& m) {
  FairnessReport report;
  for (int a = 0; a < inst.num_applicants(); ++a) {
    const int current = m.project_of(a);
    for (int p : inst.applicant_prefs(a)) {
      if (p == current) break;
      for (int other : m.members(p)) {
        if (inst.project_prefers(p, a, other)) {
          report.fair = false;
          report.witnesses.push_back({a, p, other});
        }
      }
    }
  }
  return report;
}

bool is_fair(const Instance& inst, const Matching& m) { return check_fairness(inst, m).fair; }

Matching induce(const Instance& inst, const CutoffVector& cutoffs) {
  Matching m(inst.num_applicants());
  for (int a = 0; a < inst.num_applicants(); ++a) {
    for (int p : inst.applicant_prefs(a)) {
      const auto z = inst.score(a, p);
      if (z && *z >= cutoffs[p]) {
        m.assign(a, p);
        break;
      }
    }
  }
  return m;
}

CutoffVector cutoffs_for(const Instance& inst, const Matching& m) {
  if (!is_fair(inst, m)) throw std::invalid_argument("unfair matching has no inducing cutoffs");
  CutoffVector d{std::vector<int>(inst.num_projects(), inst.num_applicants() + 1)};
  for (const auto& [a, p] : m.pairs()) {
    const auto z = inst.score(a, p);
    if (!z) throw std::invalid_argument("matched applicant not acceptable to project");
    d[p] = std::min(d[p], *z);
  }
  return d;
}

bool cutoffs_in_range(const Instance& inst, const CutoffVector& cutoffs) {
  if (static_cast<int>(cutoffs.values.size()) != inst.num_projects()) return false;
  for (int v : cutoffs.values) {
    if (v < 0 || v > inst.num_applicants() + 1) return false;
  }
  return true;
}

bool cutoffs_are_minimal(const Instance& inst, const CutoffVector& cutoffs,
                         const FeasibilityFunction& f) {
  for (int p = 0; p < inst.num_projects(); ++p) {
    if (cutoffs[p] == 0) continue;
    CutoffVector lowered = cutoffs;
    --lowered[p];
    if (is_feasible_matching(inst, induce(inst, lowered), f)) return false;
  }
  return true;
}

bool is_unconstrained(const Instance& inst, const Matching& m, int project,
                      const FeasibilityFunction& f) {
  return shifted_feasible(inst, m.counts(inst.num_projects()), project, kUnmatched, f);
}

bool is_unconstrained(const Instance& inst, const Matching& m, int project) {
  return is_unconstrained(inst, m, project, BudgetFeasibility(inst));
}

std::string_view to_string(StabilityLevel level) {
  switch (level) {
    case StabilityLevel::kInfeasible: return "infeasible";
    case StabilityLevel::kUnfair: return "unfair";
    case StabilityLevel::kFair: return "fair";
    case StabilityLevel::kWeak: return "weak";
    case StabilityLevel::kCutoff: return "cutoff";
    case StabilityLevel::kStrong: return "strong";
  }
  return "unknown";
}

StabilityVerdict check_stability(const Instance& inst, const Matching& m,
                                 const FeasibilityFunction& feasibility) {
  StabilityVerdict verdict;
  CountingFeasibility f(feasibility);

  const auto issues = validity_issues(inst, m);
  if (!issues.empty()) {
    for (const auto& issue : issues) {
      verdict.witnesses.push_back({issue.applicant, issue.project, issue.rule});
    }
    return verdict;
  }
  const auto counts = m.counts(inst.num_projects());
  if (!f(counts)) {
    verdict.witnesses.push_back({kUnmatched, kUnmatched, "budget"});
    verdict.feasibility_calls = f.calls();
    return verdict;
  }
  verdict.feasible = true;

  const auto fairness = check_fairness(inst, m);
  verdict.fair = fairness.fair;

  std::vector<StabilityWitness> weak_violations;
  std::vector<StabilityWitness> cutoff_violations;
  std::vector<StabilityWitness> strong_violations;

  for (const auto& [a, p] : blocking_pairs(inst, m)) {
    const int current = m.project_of(a);
    const bool outranks_nobody = all_members_preferred(inst, m, a, p);

    if (!outranks_nobody) {
      weak_violations.push_back({a, p, "outranks_member"});
      strong_violations.push_back({a, p, "outranks_member"});
    } else {
      if (shifted_feasible(inst, counts, p, kUnmatched, f)) {
        weak_violations.push_back({a, p, "addition_feasible"});
      }
    }

    const bool swap_feasible = shifted_feasible(inst, counts, p, current, f);
    if (outranks_nobody && swap_feasible) strong_violations.push_back({a, p, "swap_feasible"});

    // Cutoff non-wastefulness.
    if (counts[p] >= inst.capacity(p) || !swap_feasible) continue;
    bool excused = false;
    for (int other : inst.project_prefs(p)) {
      if (other == a) break;
      const int held = m.project_of(other);
      if (held == p || !inst.applicant_prefers(other, p, held)) continue;
      if (!shifted_feasible(inst, counts, p, held, f)) {
        excused = true;
        break;
      }
    }
    if (!excused) cutoff_violations.push_back({a, p, "swap_feasible"});
  }

  verdict.weakly_stable = weak_violations.empty();
  verdict.cutoff_stable = verdict.fair && cutoff_violations.empty();
  verdict.strongly_stable = strong_violations.empty();
  verdict.feasibility_calls = f.calls();

  if (!verdict.fair) {
    verdict.level = StabilityLevel::kUnfair;
    for (const auto& w : fairness.witnesses) {
      verdict.witnesses.push_back(
          {w.applicant, w.project, "justified_envy:" + inst.applicant_id(w.displaced)});
    }
  } else if (!verdict.weakly_stable) {
    verdict.level = StabilityLevel::kFair;
    verdict.witnesses = std::move(weak_violations);
  } else if (!verdict.cutoff_stable) {
    verdict.level = StabilityLevel::kWeak;
    verdict.witnesses = std::move(cutoff_violations);
  } else if (!verdict.strongly_stable) {
    verdict.level = StabilityLevel::kCutoff;
    verdict.witnesses = std::move(strong_violations);
  } else {
    verdict.level = StabilityLevel::kStrong;
  }
  return verdict;
}

StabilityVerdict check_stability(const Instance& inst, const Matching& m) {
  return check_stability(inst, m, BudgetFeasibility(inst));
}

bool pareto_dominates(const Instance& inst, const Matching& m1, const Matching& m2) {
  bool strict = false;
  for (int a = 0; a < inst.num_applicants(); ++a) {
    const int p1 = m1.project_of(a);
    const int p2 = m2.project_of(a);
    if (p1 == p2) continue;
    if (inst.applicant_prefers(a, p1, p2)) {
      strict = true;
    } else {
      return false;
    }
  }
  return strict;
}

}  // namespace cutoffmatch
