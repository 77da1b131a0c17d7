#include "cutoffmatch/oracle.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace cutoffmatch {

int applicant_guard() {
  if (const char* env = std::getenv("CUTOFFMATCH_GUARD")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 10;
}

GuardExceeded::GuardExceeded(int size, int limit)
    : std::runtime_error("instance has " + std::to_string(size) +
                         " applicants; brute force is limited to " + std::to_string(limit) +
                         " (set CUTOFFMATCH_GUARD to raise)"),
      size_(size),
      limit_(limit) {}

namespace {

class Enumerator {
 public:
  Enumerator(const Instance& inst, const FeasibilityFunction& f,
             const std::function<void(const Matching&)>& visit, bool fair_only)
      : inst_(inst), f_(f), visit_(visit), fair_only_(fair_only),
        m_(inst.num_applicants()), counts_(inst.num_projects(), 0) {}

  void run() { extend(0); }

 private:
  bool counts_feasible() {
    auto it = memo_.find(counts_);
    if (it != memo_.end()) return it->second;
    const bool ok = f_(counts_);
    memo_.emplace(counts_, ok);
    return ok;
  }

  // Envy between `a` (just placed at `p`) and every earlier applicant.
  bool envy_free_with_earlier(int a, int p) const {
    for (int b = 0; b < a; ++b) {
      const int q = m_.project_of(b);
      if (p != kUnmatched && inst_.applicant_prefers(b, p, q) && inst_.project_prefers(p, b, a)) {
        return false;
      }
      if (q != kUnmatched && inst_.applicant_prefers(a, q, p) && inst_.project_prefers(q, a, b)) {
        return false;
      }
    }
    return true;
  }

  void extend(int a) {
    if (a == inst_.num_applicants()) {
      visit_(m_);
      return;
    }
    for (int p : inst_.applicant_prefs(a)) {
      if (!inst_.acceptable_to_project(p, a) || counts_[p] >= inst_.capacity(p)) continue;
      if (fair_only_ && !envy_free_with_earlier(a, p)) continue;
      ++counts_[p];
      if (counts_feasible()) {
        m_.assign(a, p);
        extend(a + 1);
        m_.unassign(a);
      }
      --counts_[p];
    }
    if (!fair_only_ || envy_free_with_earlier(a, kUnmatched)) extend(a + 1);
  }

  const Instance& inst_;
  const FeasibilityFunction& f_;
  const std::function<void(const Matching&)>& visit_;
  bool fair_only_;
  Matching m_;
  std::vector<int> counts_;
  std::map<std::vector<int>, bool> memo_;
};

void enforce_guard(const Instance& inst, const OracleOptions& options) {
  const int limit = options.max_applicants >= 0 ? options.max_applicants : applicant_guard();
  if (inst.num_applicants() > limit) throw GuardExceeded(inst.num_applicants(), limit);
}

}  // namespace

void for_each_matching(const Instance& inst, const FeasibilityFunction& f,
                       const std::function<void(const Matching&)>& visit,
                       const OracleOptions& options) {
  enforce_guard(inst, options);
  Enumerator(inst, f, visit, options.fair_only).run();
}

std::vector<Matching> enumerate_matchings(const Instance& inst, const FeasibilityFunction& f,
                                          const OracleOptions& options) {
  std::vector<Matching> out;
  for_each_matching(inst, f, [&](const Matching& m) { out.push_back(m); }, options);
  return out;
}

std::vector<Matching> enumerate_matchings(const Instance& inst, const OracleOptions& options) {
  return enumerate_matchings(inst, BudgetFeasibility(inst), options);
}

std::vector<Classified> classify_all(const Instance& inst, const OracleOptions& options) {
  BudgetFeasibility f(inst);
  std::vector<Classified> out;
  for_each_matching(
      inst, f, [&](const Matching& m) { out.push_back({m, check_stability(inst, m, f)}); }, options);
  return out;
}

std::vector<Matching> stable_set(const Instance& inst, StabilityLevel at_least,
                                 OracleOptions options) {
  options.fair_only = true;
  BudgetFeasibility f(inst);
  std::vector<Matching> out;
  for_each_matching(
      inst, f,
      [&](const Matching& m) {
        const auto v = check_stability(inst, m, f);
        const bool keep = at_least == StabilityLevel::kStrong   ? v.strongly_stable && v.fair
                          : at_least == StabilityLevel::kCutoff ? v.cutoff_stable
                          : at_least == StabilityLevel::kWeak   ? v.weakly_stable && v.fair
                                                                : v.level >= at_least;
        if (keep) out.push_back(m);
      },
      options);
  return out;
}

MaxCutoffWitnesses max_cutoff_stable_bruteforce(const Instance& inst, OracleOptions options) {
  MaxCutoffWitnesses best;
  for (auto& m : stable_set(inst, StabilityLevel::kCutoff, options)) {
    if (m.size() > best.size) {
      best.size = m.size();
      best.witnesses.clear();
    }
    if (m.size() == best.size) best.witnesses.push_back(std::move(m));
  }
  return best;
}

std::optional<Matching> find_strongly_stable(const Instance& inst, OracleOptions options) {
  options.fair_only = true;
  BudgetFeasibility f(inst);
  std::optional<Matching> found;
  // Enumeration cannot be interrupted from the callback, so stop checking
  // once a witness is known.
  for_each_matching(
      inst, f,
      [&](const Matching& m) {
        if (!found && check_stability(inst, m, f).level == StabilityLevel::kStrong) found = m;
      },
      options);
  return found;
}

}  // namespace cutoffmatch
