#include "cutoffmatch/egalitarian.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cutoffmatch/lp.hpp"

namespace cutoffmatch {
namespace {

std::vector<std::pair<int, int>> supervision_pairs(const Instance& inst) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    for (int p : inst.supervisor(s).projects) pairs.emplace_back(s, p);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::string pair_name(const Instance& inst, std::pair<int, int> sp) {
  return inst.supervisor(sp.first).id + "/" + inst.project(sp.second).id;
}

// Funding LP skeleton: x per supervision pair, exact project funding, budgets.
struct FundingModel {
  LinearProgram lp;
  std::vector<int> x;  // parallel to pairs
};

FundingModel funding_model(const Instance& inst, const std::vector<int>& counts,
                           const std::vector<std::pair<int, int>>& pairs) {
  FundingModel model;
  for (const auto& sp : pairs) {
    model.x.push_back(model.lp.add_variable("x_" + pair_name(inst, sp)));
  }
  std::vector<std::vector<Term>> per_project(inst.num_projects());
  std::vector<std::vector<Term>> per_supervisor(inst.num_supervisors());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    per_project[pairs[i].second].push_back({model.x[i], 1});
    per_supervisor[pairs[i].first].push_back({model.x[i], 1});
  }
  for (int p = 0; p < inst.num_projects(); ++p) {
    model.lp.add_constraint("fund_" + inst.project(p).id, per_project[p], Sense::kEqual, counts[p]);
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    model.lp.add_constraint("budget_" + inst.supervisor(s).id, per_supervisor[s], Sense::kLessEqual,
                            inst.supervisor(s).budget);
  }
  return model;
}

}  // namespace

TargetProfile default_targets(const Instance& inst, const Matching& m) {
  const auto counts = m.counts(inst.num_projects());
  TargetProfile targets;
  for (int p = 0; p < inst.num_projects(); ++p) {
    const auto sups = inst.supervisors_of(p);
    if (sups.empty()) {
      if (counts[p] > 0) {
        throw std::invalid_argument("project " + inst.project(p).id + " has applicants but no supervisor");
      }
      continue;
    }
    for (int s : sups) targets[{s, p}] = Rational(1, static_cast<long>(sups.size()));
  }
  return targets;
}

TargetProfile proportional_targets(const Instance& inst, const Matching& m) {
  const auto counts = m.counts(inst.num_projects());
  TargetProfile targets;
  for (int p = 0; p < inst.num_projects(); ++p) {
    const auto sups = inst.supervisors_of(p);
    for (int s : sups) targets[{s, p}] = Rational(counts[p], static_cast<long>(sups.size()));
  }
  return targets;
}

TargetCheck check_targets(const Instance& inst, const Matching& m, const TargetProfile& targets,
                          TargetMode mode) {
  TargetCheck check;
  const auto counts = m.counts(inst.num_projects());
  const auto pairs = supervision_pairs(inst);
  for (const auto& [sp, t] : targets) {
    if (!std::binary_search(pairs.begin(), pairs.end(), sp)) {
      check.errors.push_back({"(" + std::to_string(sp.first) + "," + std::to_string(sp.second) + ")",
                              "unknown_pair", "target given for a non-supervision pair"});
    }
  }
  std::vector<Rational> sums(inst.num_projects());
  for (const auto& sp : pairs) {
    const auto name = pair_name(inst, sp);
    auto it = targets.find(sp);
    if (it == targets.end()) {
      check.errors.push_back({name, "missing_target", "no target for this pair"});
      continue;
    }
    const Rational& t = it->second;
    sums[sp.second] += t;
    if (t < 0 || (t == 0 && (mode == TargetMode::kStrict || counts[sp.second] > 0))) {
      check.errors.push_back({name, "nonpositive_target", "target must be positive"});
    } else if (mode == TargetMode::kStrict && t > 1) {
      check.errors.push_back({name, "target_above_one", "target exceeds 1"});
    }
  }
  for (int p = 0; p < inst.num_projects(); ++p) {
    if (inst.supervisors_of(p).empty() || sums[p] == 1) continue;
    Violation v{inst.project(p).id, "unnormalized_targets",
                "targets sum to " + to_string(sums[p]) + ", not 1"};
    if (mode == TargetMode::kStrict) {
      check.errors.push_back(std::move(v));
    } else {
      check.warnings.push_back(std::move(v));
    }
  }
  return check;
}

EgalitarianResult egalitarian_allocation(const Instance& inst, const Matching& m,
                                         const TargetProfile& targets, TargetMode mode) {
  if (!check_feasibility(inst, m).feasible) throw std::invalid_argument("matching is not feasible");
  const auto check = check_targets(inst, m, targets, mode);
  if (!check.ok()) {
    throw std::invalid_argument("invalid targets: " + check.errors.front().entity + ": " +
                                check.errors.front().message);
  }

  const auto counts = m.counts(inst.num_projects());
  const auto pairs = supervision_pairs(inst);
  const std::size_t n = pairs.size();
  std::vector<Rational> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = targets.at(pairs[i]);

  EgalitarianResult result;
  std::vector<bool> tight(n, false);
  std::vector<Rational> lambda(n);
  std::vector<int> round_of(n, 0);
  std::size_t num_tight = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] == 0) {  // unmatched project in lenient mode: x is forced to 0
      tight[i] = true;
      ++num_tight;
    }
  }

  // Freezes tight pairs and caps the others at lambda (a variable or a value).
  auto build = [&](std::optional<Rational> cap, std::size_t special) {
    auto model = funding_model(inst, counts, pairs);
    int lam = -1;
    if (!cap) lam = model.lp.add_variable("lambda", std::nullopt);
    int eps = -1;
    if (special < n) eps = model.lp.add_variable("epsilon", std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
      if (tight[i]) {
        const Rational fixed = lambda[i] * t[i];
        model.lp.set_bounds(model.x[i], fixed, fixed);
        continue;
      }
      std::vector<Term> terms{{model.x[i], 1}};
      Rational rhs = 0;
      if (cap) {
        rhs = t[i] * *cap;
      } else {
        terms.push_back({lam, -t[i]});
      }
      if (i == special) terms.push_back({eps, t[i]});
      model.lp.add_constraint("ratio_" + pair_name(inst, pairs[i]), std::move(terms), Sense::kLessEqual,
                              rhs);
    }
    if (special < n) {
      model.lp.set_objective(Direction::kMaximize, {{eps, 1}});
    } else {
      model.lp.set_objective(Direction::kMinimize, {{lam, 1}});
    }
    return std::pair{std::move(model), special < n ? eps : lam};
  };

  int round = 0;
  while (num_tight < n) {
    ++round;
    auto [minimax, lam] = build(std::nullopt, n);
    const auto sol = solve_lp(minimax.lp);
    ++result.lp_solves;
    if (sol.status != LpStatus::kOptimal) throw std::logic_error("minimax LP not optimal");
    const Rational lambda_star = sol.values[lam];
    result.round_lambda.push_back(lambda_star);

    std::vector<std::size_t> newly;
    for (std::size_t i = 0; i < n; ++i) {
      if (tight[i]) continue;
      auto [aux, eps] = build(lambda_star, i);
      const auto aux_sol = solve_lp(aux.lp);
      ++result.lp_solves;
      if (aux_sol.status != LpStatus::kOptimal) throw std::logic_error("auxiliary LP not optimal");
      if (aux_sol.values[eps] == 0) newly.push_back(i);
    }
    if (newly.empty()) throw std::logic_error("no pair became tight");
    for (std::size_t i : newly) {
      tight[i] = true;
      lambda[i] = lambda_star;
      round_of[i] = round;
    }
    num_tight += newly.size();
    result.tight_sizes.push_back(num_tight);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = lambda[i] * t[i];
    result.pairs.push_back({pairs[i].first, pairs[i].second, x, t[i], lambda[i], round_of[i]});
    if (x > 0) result.allocation[pairs[i]] = x;
    result.ratios.push_back(lambda[i]);
  }
  std::sort(result.ratios.begin(), result.ratios.end(), std::greater<>());
  if (!is_feasible_allocation(inst, counts, result.allocation)) {
    throw std::logic_error("egalitarian allocation is not feasible");
  }
  return result;
}

std::vector<Rational> ratio_vector(const Instance& inst, const TargetProfile& targets,
                                   const FundingAllocation& allocation) {
  std::vector<Rational> ratios;
  for (const auto& sp : supervision_pairs(inst)) {
    auto t = targets.find(sp);
    auto x = allocation.find(sp);
    if (t == targets.end() || t->second == 0 || x == allocation.end()) {
      ratios.emplace_back(0);
    } else {
      ratios.push_back(x->second / t->second);
    }
  }
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  return ratios;
}

bool verify_leximin(const Instance& inst, const Matching& m, const TargetProfile& targets,
                    const FundingAllocation& allocation) {
  const auto counts = m.counts(inst.num_projects());
  if (!is_feasible_allocation(inst, counts, allocation)) return false;
  const auto pairs = supervision_pairs(inst);
  for (const auto& sp : pairs) {
    auto it = targets.find(sp);
    if (it == targets.end() || it->second < 0) return false;
    if (it->second == 0 && allocation.count(sp) > 0) return false;
  }

  const auto ratios = ratio_vector(inst, targets, allocation);
  std::vector<Rational> prefix(ratios.size() + 1);
  for (std::size_t k = 0; k < ratios.size(); ++k) prefix[k + 1] = prefix[k] + ratios[k];

  // r_i = x_i / t_i over the pairs with a positive target.
  std::vector<std::size_t> rated;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (targets.at(pairs[i]) > 0) rated.push_back(i);
  }
  // Pairs with t = 0 contribute zeros at the tail; only the rated ones can
  // lead the sorted vector.
  for (std::size_t k = 1; k <= rated.size(); ++k) {
    auto model = funding_model(inst, counts, pairs);
    auto& lp = model.lp;
    std::vector<Term> objective;
    for (std::size_t j = 1; j <= k; ++j) {
      const int u = lp.add_variable("u" + std::to_string(j), std::nullopt);
      std::vector<Term> sum{{u, Rational(static_cast<long>(j))}};
      for (std::size_t i : rated) {
        const int v = lp.add_variable("v" + std::to_string(j) + "_" + std::to_string(i));
        const Rational inv = 1 / targets.at(pairs[i]);
        lp.add_constraint("", {{model.x[i], inv}, {u, -1}, {v, -1}}, Sense::kLessEqual, 0);
        sum.push_back({v, 1});
      }
      if (j < k) {
        lp.add_constraint("top" + std::to_string(j), std::move(sum), Sense::kLessEqual, prefix[j]);
      } else {
        objective = std::move(sum);
      }
    }
    lp.set_objective(Direction::kMinimize, std::move(objective));
    const auto sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) return false;
    if (sol.objective != prefix[k]) return false;
  }
  return true;
}

}  // namespace cutoffmatch
