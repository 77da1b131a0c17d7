#include <gtest/gtest.h>

#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/gadgets.hpp"
#include "cutoffmatch/lp.hpp"
#include "cutoffmatch/oracle.hpp"
#include "cutoffmatch/random_instance.hpp"
#include "support.hpp"

using namespace cutoffmatch;
using cutoffmatch::testing::by_ids;
using cutoffmatch::testing::described;

namespace {

// Independent feasibility oracle: the allocation conditions as an LP.
bool lp_feasible(const Instance& inst, std::span<const int> counts) {
  LinearProgram lp;
  std::map<std::pair<int, int>, int> col;
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    for (int p : inst.supervisor(s).projects) col[{s, p}] = lp.add_variable("x");
  }
  for (int p = 0; p < inst.num_projects(); ++p) {
    std::vector<Term> row;
    for (int s : inst.supervisors_of(p)) row.push_back({col.at({s, p}), 1});
    lp.add_constraint("fund", row, Sense::kEqual, counts[p]);
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    std::vector<Term> row;
    for (int p : inst.supervisor(s).projects) row.push_back({col.at({s, p}), 1});
    lp.add_constraint("budget", row, Sense::kLessEqual, inst.supervisor(s).budget);
  }
  lp.set_objective(Direction::kMinimize, {});
  return solve_lp(lp).status == LpStatus::kOptimal;
}

}  // namespace

TEST(Flow, Example1GraphArcs) {
  const auto inst = gadget("example1");
  const auto g = build_flow_graph(inst, by_ids(inst, {{"a1", "p2"}}));
  EXPECT_EQ(g.num_nodes(), 6);
  std::map<std::pair<int, int>, Rational> caps;
  for (const auto& arc : g.arcs) caps[{arc.from, arc.to}] = arc.capacity;
  EXPECT_EQ(caps.at({g.source(), g.supervisor_node(0)}), Rational(7, 10));
  EXPECT_EQ(caps.at({g.source(), g.supervisor_node(1)}), Rational(1, 2));
  EXPECT_EQ(caps.at({g.supervisor_node(0), g.project_node(0)}), Rational(6, 5));
  EXPECT_EQ(caps.at({g.supervisor_node(1), g.project_node(1)}), Rational(6, 5));
  EXPECT_FALSE(caps.count({g.supervisor_node(1), g.project_node(0)}));
  EXPECT_EQ(caps.at({g.project_node(0), g.sink()}), 0);
  EXPECT_EQ(caps.at({g.project_node(1), g.sink()}), 1);
  ASSERT_EQ(g.supervision_of_arc.size(), g.arcs.size());
  EXPECT_EQ(std::count_if(g.supervision_of_arc.begin(), g.supervision_of_arc.end(),
                          [](const auto& sp) { return sp.first >= 0; }),
            3);
}

TEST(Flow, Example1Values) {
  const auto inst = gadget("example1");
  const auto good = build_flow_graph(inst, by_ids(inst, {{"a1", "p2"}}));
  const auto f1 = max_flow(good);
  EXPECT_EQ(f1.value, 1);
  EXPECT_EQ(residual_cut_capacity(good, f1), 1);

  const auto bad = build_flow_graph(inst, by_ids(inst, {{"a2", "p1"}}));
  const auto f2 = max_flow(bad);
  EXPECT_EQ(f2.value, Rational(7, 10));
  EXPECT_EQ(residual_cut_capacity(bad, f2), Rational(7, 10));

  const auto empty = build_flow_graph(inst, Matching(2));
  EXPECT_EQ(max_flow(empty).value, 0);
  for (const auto& arc : empty.arcs) {
    if (arc.to == empty.sink()) EXPECT_EQ(arc.capacity, 0);
  }
}

TEST(Flow, Example1OnlyThreeFeasible) {
  const auto inst = gadget("example1");
  const auto all = described(inst, enumerate_matchings(inst));
  EXPECT_EQ(all, (std::set<std::string>{"{}", "{(a1,p2)}", "{(a2,p2)}"}));

  const auto check = check_feasibility(inst, by_ids(inst, {{"a1", "p2"}}));
  ASSERT_TRUE(check.feasible);
  Rational total = 0;
  for (const auto& [sp, x] : *check.allocation) {
    EXPECT_EQ(sp.second, 1);
    EXPECT_GT(x, 0);
    total += x;
  }
  EXPECT_EQ(total, 1);
  EXPECT_TRUE(is_feasible_allocation(inst, std::vector<int>{0, 1}, *check.allocation));
  // the split quoted for this example is one valid certificate
  const FundingAllocation half{{{0, 1}, Rational(1, 2)}, {{1, 1}, Rational(1, 2)}};
  EXPECT_TRUE(is_feasible_allocation(inst, std::vector<int>{0, 1}, half));
  const FundingAllocation over{{{1, 1}, Rational(1)}};
  EXPECT_FALSE(is_feasible_allocation(inst, std::vector<int>{0, 1}, over));

  EXPECT_FALSE(check_feasibility(inst, by_ids(inst, {{"a2", "p1"}})).feasible);
  EXPECT_FALSE(check_feasibility(inst, by_ids(inst, {{"a1", "p2"}, {"a2", "p2"}})).feasible);
  const auto none = check_feasibility(inst, Matching(2));
  ASSERT_TRUE(none.feasible);
  EXPECT_TRUE(none.allocation->empty());
}

TEST(Flow, InvalidMatchingsShortCircuit) {
  const auto inst = gadget("example1");
  Matching m(2);
  m.assign(0, 1);
  m.assign(1, 1);  // over capacity of p2
  EXPECT_FALSE(check_feasibility(inst, m).feasible);
  EXPECT_THROW(build_flow_graph(inst, m), std::invalid_argument);
}

TEST(Flow, DotRendering) {
  const auto inst = gadget("example1");
  const auto g = build_flow_graph(inst, by_ids(inst, {{"a1", "p2"}}));
  const auto f = max_flow(g);
  const auto dot = to_dot(inst, g, &f);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("s1"), std::string::npos);
  EXPECT_NE(dot.find("p2"), std::string::npos);
  EXPECT_NE(dot.find("7/10"), std::string::npos);
}

TEST(Flow, RegionArcs) {
  RegionalInstance reg{{"r1"},
                       {{"h1", 1, {"r1"}}, {"h2", 1, {"r1"}}},
                       {{"r1", {"h1"}}},
                       {{"g1", {"h1", "h2"}, 2}}};
  const auto inst = embed_reg(reg);
  const auto g = build_flow_graph(inst, Matching(1));
  int from_source = 0;
  for (const auto& arc : g.arcs) {
    if (arc.from == g.source()) {
      ++from_source;
      EXPECT_EQ(arc.capacity, 2);
    }
  }
  EXPECT_EQ(from_source, 1);
}

TEST(Flow, ConservationAndMaximality) {
  PortableRng rng(77);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = random_instance({6, 4, 3}, seed);
    const auto m = random_valid_matching(inst, rng);
    const auto g = build_flow_graph(inst, m);
    const auto f = max_flow(g);
    std::vector<Rational> balance(g.num_nodes());
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      EXPECT_GE(f.arc_flow[i], 0);
      EXPECT_LE(f.arc_flow[i], g.arcs[i].capacity);
      balance[g.arcs[i].from] -= f.arc_flow[i];
      balance[g.arcs[i].to] += f.arc_flow[i];
    }
    for (int v = 1; v + 1 < g.num_nodes(); ++v) EXPECT_EQ(balance[v], 0);
    EXPECT_EQ(balance[g.sink()], f.value);
    EXPECT_EQ(residual_cut_capacity(g, f), f.value);
  }
}

TEST(Flow, AgreesWithLpOracle) {
  PortableRng rng(5);
  int feasible = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto inst = random_instance({6, 4, 3}, seed);
    const auto m = random_valid_matching(inst, rng);
    const auto counts = m.counts(inst.num_projects());
    const auto check = check_feasibility(inst, m);
    EXPECT_EQ(check.feasible, lp_feasible(inst, counts)) << seed;
    if (check.feasible) {
      ++feasible;
      EXPECT_TRUE(is_feasible_allocation(inst, counts, *check.allocation));
    }
  }
  EXPECT_GT(feasible, 10);
}

TEST(Flow, HereditaryAndAnonymous) {
  PortableRng rng(11);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto inst = random_instance({6, 4, 3}, seed);
    BudgetFeasibility f(inst);
    const auto m = random_valid_matching(inst, rng);
    auto counts = m.counts(inst.num_projects());
    if (!f(counts)) continue;
    for (int p = 0; p < inst.num_projects(); ++p) {
      if (counts[p] == 0) continue;
      --counts[p];
      EXPECT_TRUE(f(counts));
      ++counts[p];
    }
    // swap an applicant at p for another applicant acceptable to p
    for (int a = 0; a < inst.num_applicants(); ++a) {
      const int p = m.project_of(a);
      if (p == kUnmatched) continue;
      for (int b = 0; b < inst.num_applicants(); ++b) {
        if (m.is_matched(b) || !inst.mutually_acceptable(b, p)) continue;
        Matching swapped = m;
        swapped.unassign(a);
        swapped.assign(b, p);
        EXPECT_TRUE(check_feasibility(inst, swapped).feasible);
      }
    }
  }
}

TEST(Flow, IntegerBudgetsGiveIntegerAllocations) {
  RandomInstanceParams params{6, 4, 3, Rational(3, 4), Rational(0), Rational(3), true};
  PortableRng rng(3);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto inst = random_instance(params, seed);
    const auto m = random_valid_matching(inst, rng);
    const auto check = check_feasibility(inst, m);
    if (!check.feasible) continue;
    ++checked;
    for (const auto& [sp, x] : *check.allocation) EXPECT_TRUE(is_integer(x));
  }
  EXPECT_GT(checked, 20);
}

TEST(Feasibility, PredicateAdapter) {
  PredicateFeasibility quota([](std::span<const int> c) { return c[0] + c[1] <= 1; });
  const auto inst = gadget("example2_unsolvable");
  EXPECT_TRUE(is_feasible_matching(inst, by_ids(inst, {{"a1", "p1"}}), quota));
  EXPECT_FALSE(is_feasible_matching(inst, by_ids(inst, {{"a1", "p1"}, {"a2", "p2"}}), quota));
  BudgetFeasibility f(inst);
  EXPECT_TRUE(f(std::vector<int>{0, 0}));
  EXPECT_FALSE(f(std::vector<int>{1, 1}));
  EXPECT_EQ(f.calls(), 2u);
}
