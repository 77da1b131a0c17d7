#include "cutoffmatch/milp.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cutoffmatch/cutoff_engine.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/stability.hpp"

namespace cutoffmatch {

MilpModel build_model(const Instance& inst) {
  MilpModel model;
  auto& lp = model.lp;
  const int nA = inst.num_applicants();
  const int nP = inst.num_projects();
  const long big = nA + 1;
  model.big_w = static_cast<long>(nP) * big + 1;

  auto add = [&](std::string name, Rational lo, std::optional<Rational> hi, VarKind kind) {
    model.kinds.push_back(kind);
    return lp.add_variable(std::move(name), std::move(lo), std::move(hi));
  };

  for (int a = 0; a < nA; ++a) {
    for (int p : inst.applicant_prefs(a)) {
      if (!inst.acceptable_to_project(p, a)) continue;
      model.y[{a, p}] = add("y_" + inst.applicant_id(a) + "_" + inst.project(p).id, 0, Rational(1),
                            VarKind::kBinary);
    }
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    for (int p : inst.supervisor(s).projects) {
      model.x[{s, p}] = add("x_" + inst.supervisor(s).id + "_" + inst.project(p).id, 0, std::nullopt,
                            VarKind::kContinuous);
    }
  }
  for (int p = 0; p < nP; ++p) {
    model.d.push_back(add("d_" + inst.project(p).id, 0, Rational(big), VarKind::kInteger));
  }

  // Each applicant holds at most one project.
  for (int a = 0; a < nA; ++a) {
    std::vector<Term> terms;
    for (int p : inst.applicant_prefs(a)) {
      auto it = model.y.find({a, p});
      if (it != model.y.end()) terms.push_back({it->second, 1});
    }
    if (!terms.empty()) lp.add_constraint("assign_" + inst.applicant_id(a), terms, Sense::kLessEqual, 1);
  }
  // Matched applicants are funded exactly; capacities.
  for (int p = 0; p < nP; ++p) {
    std::vector<Term> members;
    for (const auto& [key, col] : model.y) {
      if (key.second == p) members.push_back({col, 1});
    }
    std::vector<Term> funding = members;
    for (int s : inst.supervisors_of(p)) funding.push_back({model.x.at({s, p}), -1});
    if (!funding.empty()) lp.add_constraint("fund_" + inst.project(p).id, funding, Sense::kEqual, 0);
    if (!members.empty()) {
      lp.add_constraint("cap_" + inst.project(p).id, members, Sense::kLessEqual, inst.capacity(p));
    }
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    std::vector<Term> terms;
    for (int p : inst.supervisor(s).projects) terms.push_back({model.x.at({s, p}), 1});
    if (!terms.empty()) {
      lp.add_constraint("budget_" + inst.supervisor(s).id, terms, Sense::kLessEqual,
                        inst.supervisor(s).budget);
    }
  }
  // Cutoffs induce exactly the matching.
  for (const auto& [key, col] : model.y) {
    const auto [a, p] = key;
    const int z = *inst.score(a, p);
    const std::string tag = inst.applicant_id(a) + "_" + inst.project(p).id;
    // d(p) <= (1 - y)(|A|+1) + z
    lp.add_constraint("reach_" + tag, {{model.d[p], 1}, {col, big}}, Sense::kLessEqual, big + z);
    // z + 1 <= d(p) + (sum of y over p' at least as good as p) (|A|+1)
    std::vector<Term> terms{{model.d[p], 1}};
    for (int q : inst.applicant_prefs(a)) {
      auto it = model.y.find({a, q});
      if (it != model.y.end()) terms.push_back({it->second, big});
      if (q == p) break;
    }
    lp.add_constraint("reject_" + tag, std::move(terms), Sense::kGreaterEqual, z + 1);
  }

  std::vector<Term> objective;
  for (const auto& [key, col] : model.y) objective.push_back({col, model.big_w});
  for (int p = 0; p < nP; ++p) objective.push_back({model.d[p], -1});
  lp.set_objective(Direction::kMaximize, std::move(objective));
  return model;
}

std::string_view to_string(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal: return "optimal";
    case MilpStatus::kInfeasible: return "infeasible";
    case MilpStatus::kNodeLimit: return "node_limit";
  }
  return "unknown";
}

namespace {

struct Node {
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
};

bool is_integral_kind(VarKind k) { return k != VarKind::kContinuous; }

}  // namespace

MilpResult solve_milp(const LinearProgram& lp, const std::vector<VarKind>& kinds,
                      const MilpOptions& options, const std::vector<Rational>* incumbent) {
  if (static_cast<int>(kinds.size()) != lp.num_variables()) {
    throw std::invalid_argument("one kind per variable required");
  }
  const bool maximize = lp.direction() == Direction::kMaximize;
  MilpResult result;
  std::optional<Rational> best;
  if (incumbent != nullptr) {
    if (!satisfies_exactly(lp, *incumbent)) throw std::invalid_argument("incumbent is infeasible");
    result.values = *incumbent;
    best = evaluate_objective(lp, *incumbent);
  }

  // True if a relaxation bound cannot beat the incumbent.
  auto dominated = [&](const Rational& bound) {
    if (!best) return false;
    if (options.integral_objective) {
      return maximize ? floor(bound) <= *best : ceil(bound) >= *best;
    }
    return maximize ? bound <= *best : bound >= *best;
  };

  Node root;
  for (const auto& v : lp.variables()) {
    root.lower.push_back(v.lower);
    root.upper.push_back(v.upper);
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (kinds[j] == VarKind::kBinary) {
      if (!root.lower[j] || *root.lower[j] < 0) root.lower[j] = Rational(0);
      if (!root.upper[j] || *root.upper[j] > 1) root.upper[j] = Rational(1);
    }
  }
  std::vector<Node> stack{std::move(root)};
  bool truncated = false;

  while (!stack.empty()) {
    if (options.node_limit > 0 && result.nodes >= options.node_limit) {
      truncated = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++result.nodes;

    LinearProgram relaxed = lp;
    for (int j = 0; j < lp.num_variables(); ++j) relaxed.set_bounds(j, node.lower[j], node.upper[j]);
    const auto sol = solve_lp(relaxed);
    ++result.lp_solves;
    if (sol.status == LpStatus::kInfeasible) continue;
    if (sol.status == LpStatus::kUnbounded) throw std::runtime_error("unbounded LP relaxation");
    if (dominated(sol.objective)) continue;

    int branch = -1;
    Rational best_gap;
    for (int j = 0; j < lp.num_variables(); ++j) {
      if (kinds[j] != VarKind::kBinary || is_integer(sol.values[j])) continue;
      const Rational gap = abs(Rational(sol.values[j] - Rational(1, 2)));
      if (branch < 0 || gap < best_gap) {
        branch = j;
        best_gap = gap;
      }
    }
    if (branch < 0) {
      for (int j = 0; j < lp.num_variables(); ++j) {
        if (is_integral_kind(kinds[j]) && !is_integer(sol.values[j])) {
          branch = j;
          break;
        }
      }
    }
    if (branch < 0) {
      if (!best || (maximize ? sol.objective > *best : sol.objective < *best)) {
        best = sol.objective;
        result.values = sol.values;
      }
      continue;
    }

    Node down = node;
    down.upper[branch] = floor(sol.values[branch]);
    Node up = std::move(node);
    up.lower[branch] = ceil(sol.values[branch]);
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));
  }

  if (best) {
    result.status = truncated ? MilpStatus::kNodeLimit : MilpStatus::kOptimal;
    result.objective = *best;
  } else {
    result.status = truncated ? MilpStatus::kNodeLimit : MilpStatus::kInfeasible;
  }
  return result;
}

Rational milp_objective(const Instance& inst, const Matching& m, const CutoffVector& d) {
  const long w = static_cast<long>(inst.num_projects()) * (inst.num_applicants() + 1) + 1;
  Rational total = Rational(w) * static_cast<long>(m.size());
  for (int v : d.values) total -= v;
  return total;
}

namespace {

std::vector<Rational> encode(const Instance& inst, const MilpModel& model, const Matching& m,
                             const CutoffVector& d) {
  std::vector<Rational> values(model.lp.num_variables());
  for (const auto& [a, p] : m.pairs()) values[model.y.at({a, p})] = 1;
  const auto funding = check_feasibility(inst, m);
  if (!funding.feasible) throw std::logic_error("engine matching is infeasible");
  for (const auto& [sp, amount] : *funding.allocation) values[model.x.at(sp)] = amount;
  for (int p = 0; p < inst.num_projects(); ++p) values[model.d[p]] = d[p];
  return values;
}

}  // namespace

MaxCutoffResult solve_max_cutoff_stable(const Instance& inst, const MilpOptions& options) {
  const auto model = build_model(inst);
  const auto seed = solve_cutoff_stable(inst);
  const auto start = encode(inst, model, seed.matching, seed.cutoffs);

  MilpOptions opts = options;
  opts.integral_objective = true;
  const auto milp = solve_milp(model.lp, model.kinds, opts, &start);

  MaxCutoffResult result;
  result.status = milp.status;
  result.nodes = milp.nodes;
  result.lp_solves = milp.lp_solves;
  result.objective = milp.objective;
  result.matching = Matching(inst.num_applicants());
  for (const auto& [key, col] : model.y) {
    if (milp.values[col] == 1) result.matching.assign(key.first, key.second);
  }
  result.cutoffs.values.resize(inst.num_projects());
  for (int p = 0; p < inst.num_projects(); ++p) {
    result.cutoffs[p] = static_cast<int>(milp.values[model.d[p]].get_num().get_si());
  }

  if (induce(inst, result.cutoffs) != result.matching) {
    throw std::logic_error("MILP cutoffs do not induce the MILP matching");
  }
  if (result.status == MilpStatus::kOptimal) {
    const auto verdict = check_stability(inst, result.matching);
    if (!verdict.cutoff_stable || !cutoffs_are_minimal(inst, result.cutoffs, BudgetFeasibility(inst))) {
      throw std::logic_error("MILP optimum is not cutoff stable");
    }
  }
  return result;
}

std::string export_lp(const MilpModel& model) { return to_lp_format(model.lp, model.kinds); }

void export_lp_file(const MilpModel& model, std::ostream& out) {
  out << export_lp(model);
  if (!out) throw std::runtime_error("failed to write LP file");
}

void export_lp_file(const MilpModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_lp_file(model, out);
}

}  // namespace cutoffmatch
