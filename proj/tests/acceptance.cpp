// One PASS/FAIL line per acceptance criterion; exit code 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cutoffmatch/cutoff_engine.hpp"
#include "cutoffmatch/egalitarian.hpp"
#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/gadgets.hpp"
#include "cutoffmatch/milp.hpp"
#include "cutoffmatch/oracle.hpp"
#include "cutoffmatch/random_instance.hpp"
#include "cutoffmatch/smti.hpp"
#include "cutoffmatch/stability.hpp"
#include "support.hpp"

using namespace cutoffmatch;
using cutoffmatch::testing::by_ids;
using cutoffmatch::testing::described;
using cutoffmatch::testing::for_each_smti;

namespace {

using Set = std::set<std::string>;

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<int> ids(const Instance& inst, std::initializer_list<const char*> order) {
  std::vector<int> out;
  for (const char* p : order) out.push_back(*inst.find_project(p));
  return out;
}

void example1(Check& c) {
  const auto inst = gadget("example1");
  std::vector<Matching> feasible;
  for_each_matching(
      inst, BudgetFeasibility(inst), [&](const Matching& m) { feasible.push_back(m); });
  c.expect(described(inst, feasible) == Set{"{}", "{(a1,p2)}", "{(a2,p2)}"},
           "feasible set differs");
  c.expect(!check_feasibility(inst, by_ids(inst, {{"a2", "p1"}})).feasible,
           "{(a2,p1)} should be infeasible");
  c.expect(check_feasibility(inst, by_ids(inst, {{"a1", "p2"}})).feasible, "{(a1,p2)} infeasible");
}

void example2(Check& c) {
  const auto inst = gadget("example2_unsolvable");
  const Set two{"{(a1,p1)}", "{(a2,p2)}"};
  c.expect(!find_strongly_stable(inst).has_value(), "strongly stable matching found");
  c.expect(stable_set(inst, StabilityLevel::kStrong).empty(), "strong set nonempty");
  c.expect(described(inst, stable_set(inst, StabilityLevel::kCutoff)) == two, "cutoff set differs");
  c.expect(described(inst, stable_set(inst, StabilityLevel::kWeak)) == two, "weak set differs");
}

void example3(Check& c) {
  const auto inst = gadget("example3_cycle");
  const Set both{"{(a1,p1), (a2,p2), (a4,p4)}", "{(a2,p2), (a3,p3), (a4,p4)}"};
  for (auto level : {StabilityLevel::kStrong, StabilityLevel::kCutoff, StabilityLevel::kWeak}) {
    c.expect(described(inst, stable_set(inst, level)) == both,
             std::string(to_string(level)) + " set differs");
  }
  const auto m1 = by_ids(inst, {{"a1", "p1"}, {"a2", "p2"}, {"a4", "p4"}});
  const auto m2 = by_ids(inst, {{"a2", "p2"}, {"a3", "p3"}, {"a4", "p4"}});
  c.expect(m1.is_matched(0) && !m2.is_matched(0) && m2.is_matched(2) && !m1.is_matched(2),
           "matched applicant sets do not differ");
}

void example4(Check& c) {
  const auto inst = gadget("example4_distinct");
  const auto level = [&](const Matching& m) { return check_stability(inst, m).level; };
  const auto m1 = by_ids(inst, {{"a1", "p1"}, {"a2", "p2"}});
  const auto m2 = by_ids(inst, {{"a1", "p2"}, {"a2", "p1"}});
  const auto m3 = by_ids(inst, {{"a1", "p2"}, {"a3", "p3"}});
  const auto m4 = by_ids(inst, {{"a1", "p3"}, {"a2", "p1"}});
  c.expect(level(m1) == StabilityLevel::kStrong, "M1 not strong");
  c.expect(level(m2) == StabilityLevel::kStrong, "M2 not strong");
  c.expect(level(m3) == StabilityLevel::kCutoff, "M3 not cutoff-only");
  c.expect(level(m4) == StabilityLevel::kWeak, "M4 not weak-only");
  const Set named{describe(inst, m1), describe(inst, m2), describe(inst, m3), describe(inst, m4)};
  for_each_matching(inst, PredicateFeasibility([](std::span<const int>) { return true; }),
                    [&](const Matching& m) {
                      if (m.pairs().size() != 2 || named.contains(describe(inst, m))) return;
                      const auto l = level(m);
                      c.expect(l == StabilityLevel::kUnfair || l == StabilityLevel::kInfeasible,
                               describe(inst, m) + " is " + std::string(to_string(l)));
                    });
}

void engine_traces(Check& c) {
  const auto t1 = gadget("thm7_item1");
  c.expect(solve_cutoff_stable(t1, ids(t1, {"p1", "p2"}), {true}).matching == by_ids(t1, {{"a1", "p1"}}),
           "item 1 truthful output");
  const auto lie = gadget("thm7_item1_misreport");
  c.expect(solve_cutoff_stable(lie, ids(lie, {"p1", "p2"}), {true}).matching ==
               by_ids(lie, {{"a2", "p2"}}),
           "item 1 misreport output");

  const auto t3 = gadget("thm7_item3");
  c.expect(solve_cutoff_stable(t3, ids(t3, {"p1", "p2", "p3"}), {true}).matching ==
               by_ids(t3, {{"a1", "p2"}, {"a2", "p1"}}),
           "item 3 order p1,p2,p3");
  c.expect(solve_cutoff_stable(t3, ids(t3, {"p1", "p3", "p2"}), {true}).matching ==
               by_ids(t3, {{"a1", "p1"}, {"a3", "p3"}}),
           "item 3 order p1,p3,p2");

  const auto t4 = gadget("thm7_item4");
  const auto target = by_ids(t4, {{"a1", "p1"}, {"a2", "p2"}});
  for (const auto& order : {ids(t4, {"p1", "p2"}), ids(t4, {"p2", "p1"})}) {
    c.expect(solve_cutoff_stable(t4, order, {true}).matching != target, "item 4 target reached");
  }
  c.expect(check_stability(t4, target).cutoff_stable, "item 4 target not cutoff stable");
}

void engine_sweep(Check& c) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomInstanceParams params;
    params.applicants = 1 + static_cast<int>(seed % 8);
    params.projects = 1 + static_cast<int>((seed / 8) % 8);
    params.supervisors = 1 + static_cast<int>(seed % 4);
    const auto inst = random_instance(params, 6000 + seed);
    std::vector<int> order(inst.num_projects());
    for (int p = 0; p < inst.num_projects(); ++p) order[p] = p;
    PortableRng rng(seed);
    rng.shuffle(order);
    BudgetFeasibility f(inst);
    const auto r = solve_cutoff_stable(inst, f, order);
    const auto tag = " (seed " + std::to_string(seed) + ")";
    const auto verdict = check_stability(inst, r.matching);
    c.expect(verdict.feasible && verdict.fair && verdict.cutoff_stable, "output not cutoff stable" + tag);
    c.expect(induce(inst, r.cutoffs) == r.matching, "cutoffs do not induce output" + tag);
    c.expect(cutoffs_are_minimal(inst, r.cutoffs, f), "cutoffs not minimal" + tag);
    const std::size_t n = inst.num_applicants(), p = inst.num_projects();
    c.expect(r.trace.feasibility_calls <= (n + 1) * p * p, "call bound exceeded" + tag);
  }
}

void milp_vs_oracle(Check& c) {
  const auto compare = [&](const Instance& inst, const std::string& tag) {
    const auto milp = solve_max_cutoff_stable(inst);
    const auto brute = max_cutoff_stable_bruteforce(inst);
    c.expect(milp.status == MilpStatus::kOptimal, tag + " not optimal");
    c.expect(milp.matching.pairs().size() == brute.size,
             tag + ": milp " + std::to_string(milp.matching.pairs().size()) + " vs oracle " +
                 std::to_string(brute.size));
    c.expect(check_stability(inst, milp.matching).cutoff_stable, tag + " milp output not cutoff stable");
  };
  for (auto name : gadget_names()) compare(gadget(name), std::string(name));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomInstanceParams params;
    params.applicants = 2 + static_cast<int>(seed % 6);
    params.projects = 1 + static_cast<int>(seed % 4);
    params.supervisors = 1 + static_cast<int>(seed % 3);
    compare(random_instance(params, 7000 + seed), "seed " + std::to_string(seed));
  }
}

OracleOptions reduced_options() {
  OracleOptions options;
  options.max_applicants = 40;
  options.fair_only = true;
  return options;
}

// Runs `visit` on every restricted SMTI instance with two men, then 50 random
// instances with three.
void smti_sweep(const std::function<void(const SmtiInstance&, const std::string&)>& visit) {
  int k = 0;
  for_each_smti(2, [&](const SmtiInstance& s) { visit(s, "n=2 #" + std::to_string(k++)); });
  for (std::uint64_t seed = 1; seed <= 50; ++seed) visit(random_smti(3, seed), "n=3 seed " + std::to_string(seed));
}

void smti_strong(Check& c) {
  smti_sweep([&](const SmtiInstance& s, const std::string& tag) {
    const bool complete = smti_weakly_stable_bruteforce(s).has_complete;
    const bool strong = find_strongly_stable(reduce_smti_strong(s), reduced_options()).has_value();
    c.expect(complete == strong, tag);
  });
}

void smti_maxsize(Check& c) {
  smti_sweep([&](const SmtiInstance& s, const std::string& tag) {
    const auto truth = smti_weakly_stable_bruteforce(s).max_size;
    const auto red = reduce_smti_maxsize(s);
    const auto got = max_cutoff_stable_bruteforce(red.instance, reduced_options()).size;
    c.expect(truth + red.size_offset == got, tag);
  });
}

void egalitarian_fixture(Check& c) {
  const auto inst = gadget("egalitarian_fixture");
  const auto m = by_ids(inst, {{"a1", "p1"}});
  const auto targets = default_targets(inst, m);
  const auto r = egalitarian_allocation(inst, m, targets);
  c.expect(r.pairs.size() == 2 && r.pairs[0].x == Rational(1, 4) && r.pairs[1].x == Rational(3, 4),
           "allocation is not (1/4, 3/4)");
  c.expect(r.ratios == std::vector<Rational>{Rational(3, 2), Rational(1, 2)}, "ratios are not (3/2, 1/2)");
  c.expect(verify_leximin(inst, m, targets, r.allocation), "verify_leximin failed");
  // grid oracle: x1 = k/1000 within s1's budget, x2 = 1 - x1
  const auto q1 = inst.supervisor(0).budget;
  for (int k = 0; Rational(k, 1000) <= q1; ++k) {
    FundingAllocation alt{{{0, 0}, Rational(k, 1000)}, {{1, 0}, 1 - Rational(k, 1000)}};
    const auto v = ratio_vector(inst, targets, alt);
    if (std::lexicographical_compare(v.begin(), v.end(), r.ratios.begin(), r.ratios.end())) {
      c.expect(false, "grid point " + std::to_string(k) + "/1000 is lexicographically smaller");
    }
  }
}

void egalitarian_rounds(Check& c) {
  const auto run = [&](const Instance& inst, const Matching& m, const std::string& tag) {
    const auto targets = default_targets(inst, m);
    const auto r = egalitarian_allocation(inst, m, targets);
    const std::size_t t = targets.size();
    c.expect(r.lp_solves <= t * t + t, tag + ": " + std::to_string(r.lp_solves) + " LP solves");
    std::size_t previous = 0;
    for (auto size : r.tight_sizes) {
      c.expect(size >= previous + 1, tag + ": tight set did not grow");
      previous = size;
    }
  };
  const auto fx = gadget("egalitarian_fixture");
  run(fx, by_ids(fx, {{"a1", "p1"}}), "fixture");
  const auto e1 = gadget("example1");
  run(e1, by_ids(e1, {{"a1", "p2"}}), "example1");
  run(e1, by_ids(e1, {{"a2", "p2"}}), "example1 a2");
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 100 && seed <= 1000; ++seed) {
    RandomInstanceParams params{7, 4, 4};
    const auto inst = random_instance(params, 8000 + seed);
    PortableRng rng(seed);
    const auto m = random_valid_matching(inst, rng);
    if (!check_feasibility(inst, m).feasible) continue;
    ++runs;
    run(inst, m, "seed " + std::to_string(seed));
  }
  c.expect(runs == 100, "too few feasible random cases");
}

Matching random_sub(const Matching& m, PortableRng& rng) {
  Matching sub = m;
  for (const auto& [a, p] : m.pairs()) {
    if (rng.chance(Rational(1, 2))) sub.unassign(a);
  }
  return sub;
}

void heredity(Check& c) {
  PortableRng rng(12);
  int hereditary = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    RandomInstanceParams params;
    params.applicants = 3 + static_cast<int>(seed % 6);
    params.projects = 2 + static_cast<int>(seed % 4);
    params.supervisors = 1 + static_cast<int>(seed % 4);
    const auto inst = random_instance(params, 9000 + seed);
    const auto m = random_valid_matching(inst, rng);
    const auto sub = random_sub(m, rng);
    const auto tag = " (seed " + std::to_string(seed) + ")";
    const bool fm = check_feasibility(inst, m).feasible;
    if (fm) {
      ++hereditary;
      c.expect(check_feasibility(inst, sub).feasible, "sub-matching infeasible" + tag);
    }
    // anonymity: the answer depends only on the count vector
    BudgetFeasibility f(inst);
    c.expect(f(m.counts(inst.num_projects())) == fm, "count check disagrees" + tag);
    for (const auto& [a, p] : m.pairs()) {
      for (int b = 0; b < inst.num_applicants(); ++b) {
        if (m.is_matched(b) || !inst.mutually_acceptable(b, p)) continue;
        Matching swapped = m;
        swapped.unassign(a);
        swapped.assign(b, p);
        c.expect(check_feasibility(inst, swapped).feasible == fm, "swap changed feasibility" + tag);
        break;
      }
    }
  }
  c.expect(hereditary > 100, "too few feasible triples: " + std::to_string(hereditary));
}

void integrality(Check& c) {
  PortableRng rng(13);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    RandomInstanceParams params;
    params.applicants = 3 + static_cast<int>(seed % 6);
    params.projects = 2 + static_cast<int>(seed % 4);
    params.supervisors = 1 + static_cast<int>(seed % 4);
    params.integer_budgets = true;
    params.min_budget = 0;
    params.max_budget = 3;
    const auto inst = random_instance(params, 10000 + seed);
    const auto m = random_valid_matching(inst, rng);
    const auto check = check_feasibility(inst, m);
    if (!check.feasible) continue;
    ++checked;
    for (const auto& [key, x] : *check.allocation) {
      c.expect(is_integer(x), "fractional x = " + to_string(x) + " (seed " + std::to_string(seed) + ")");
    }
  }
  c.expect(checked > 50, "too few feasible checks: " + std::to_string(checked));
}

struct Criterion {
  int id;
  const char* title;
  void (*body)(Check&);
  double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example 1 feasibility: exactly three feasible matchings", example1, 1},
      {2, "example 2: no strongly stable matching, two cutoff/weak stable", example2, 0},
      {3, "example 3: strong = cutoff = weak = {M1, M2}, different applicant sets", example3, 0},
      {4, "example 4: stability levels of M1..M4 and all other size-2 matchings", example4, 0},
      {5, "cutoff engine reproduces manipulation, order dependence, unreachability", engine_traces, 0},
      {6, "engine sweep: 200 random instances stable, minimal, within call bound", engine_sweep, 60},
      {7, "MILP maximum equals brute force on gadgets and 100 random instances", milp_vs_oracle, 120},
      {8, "SMTI reduction: complete weakly stable iff strongly stable", smti_strong, 0},
      {9, "SMTI max-size reduction preserves maximum size", smti_maxsize, 0},
      {10, "egalitarian fixture: (1/4, 3/4), ratios (3/2, 1/2), grid oracle", egalitarian_fixture, 0},
      {11, "egalitarian rounds: tight set grows, LP solves <= |T|^2 + |T|", egalitarian_rounds, 0},
      {12, "feasibility heredity and anonymity on 500 random triples", heredity, 0},
      {13, "integer budgets give integer allocations", integrality, 0},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << secs << " s, limit " << cr.limit_seconds << " s";
      c.failures.push_back(msg.str());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("%s [%d] %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", c.failures[i].c_str());
    }
    if (c.failures.size() > 5) std::printf("    ... %zu more\n", c.failures.size() - 5);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
