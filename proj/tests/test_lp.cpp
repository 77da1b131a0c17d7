#include <gtest/gtest.h>

#include "cutoffmatch/lp.hpp"
#include "cutoffmatch/random_instance.hpp"

using namespace cutoffmatch;

namespace {

// min lambda s.t. x1 + x2 = 1, x1 <= 1/4, 2 x1 <= lambda, 2 x2 <= lambda
LinearProgram two_supervisor_minimax() {
  LinearProgram lp;
  const int x1 = lp.add_variable("x1", Rational(0), Rational(1, 4));
  const int x2 = lp.add_variable("x2");
  const int lambda = lp.add_variable("lambda", std::nullopt, std::nullopt);
  lp.add_constraint("fund", {{x1, 1}, {x2, 1}}, Sense::kEqual, 1);
  lp.add_constraint("r1", {{x1, 2}, {lambda, -1}}, Sense::kLessEqual, 0);
  lp.add_constraint("r2", {{x2, 2}, {lambda, -1}}, Sense::kLessEqual, 0);
  lp.set_objective(Direction::kMinimize, {{lambda, 1}});
  return lp;
}

}  // namespace

TEST(Lp, Minimax) {
  const auto lp = two_supervisor_minimax();
  const auto sol = solve_lp(lp, {true});
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, Rational(3, 2));
  EXPECT_EQ(sol.values[0], Rational(1, 4));
  EXPECT_EQ(sol.values[1], Rational(3, 4));
  EXPECT_TRUE(satisfies_exactly(lp, sol.values));

  // grid over x1 in steps of 1/100
  Rational best = 100;
  for (int k = 0; k <= 25; ++k) {
    const Rational x1(k, 100);
    best = std::min<Rational>(best, std::max<Rational>(2 * x1, 2 * (1 - x1)));
  }
  EXPECT_EQ(best, sol.objective);
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram bad;
  const int x = bad.add_variable("x");
  bad.add_constraint("lo", {{x, 1}}, Sense::kGreaterEqual, 1);
  bad.add_constraint("hi", {{x, 1}}, Sense::kLessEqual, 0);
  bad.set_objective(Direction::kMinimize, {{x, 1}});
  EXPECT_EQ(solve_lp(bad).status, LpStatus::kInfeasible);

  LinearProgram open;
  const int y = open.add_variable("y");
  open.set_objective(Direction::kMaximize, {{y, 1}});
  EXPECT_EQ(solve_lp(open).status, LpStatus::kUnbounded);

  LinearProgram crossed;
  crossed.add_variable("z", Rational(2), Rational(1));
  EXPECT_EQ(solve_lp(crossed).status, LpStatus::kInfeasible);
}

TEST(Lp, EmptyProgram) {
  LinearProgram lp;
  lp.set_objective(Direction::kMaximize, {}, Rational(5, 2));
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, Rational(5, 2));
}

TEST(Lp, UnknownVariableRejected) {
  LinearProgram lp;
  lp.add_variable("x");
  EXPECT_THROW(lp.add_constraint("c", {{3, 1}}, Sense::kEqual, 0), std::out_of_range);
  EXPECT_THROW(lp.set_objective(Direction::kMinimize, {{-1, 1}}), std::out_of_range);
}

TEST(Lp, FreeNegativeAndFixed) {
  LinearProgram lp;
  const int u = lp.add_variable("u", std::nullopt, std::nullopt);
  const int v = lp.add_variable("v", Rational(-3), Rational(-1));
  const int w = lp.add_variable("w", Rational(7, 3), Rational(7, 3));
  lp.add_constraint("link", {{u, 1}, {v, -1}, {w, 1}}, Sense::kGreaterEqual, Rational(-5));
  lp.set_objective(Direction::kMinimize, {{u, 1}, {v, 2}, {w, 1}}, 1);
  const auto sol = solve_lp(lp, {true});
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  // v = -3; u >= -5 + v - w = -31/3
  EXPECT_EQ(sol.values[1], -3);
  EXPECT_EQ(sol.values[2], Rational(7, 3));
  EXPECT_EQ(sol.values[0], Rational(-31, 3));
  EXPECT_EQ(sol.objective, Rational(-31, 3) - 6 + Rational(7, 3) + 1);
  EXPECT_EQ(evaluate_objective(lp, sol.values), sol.objective);
}

TEST(Lp, DualsAreShadowPrices) {
  // max 3x + 2y, x + y <= a, x + 3y <= 9, x <= 3
  const auto build = [](Rational a) {
    LinearProgram lp;
    const int x = lp.add_variable("x");
    const int y = lp.add_variable("y");
    lp.add_constraint("a", {{x, 1}, {y, 1}}, Sense::kLessEqual, a);
    lp.add_constraint("b", {{x, 1}, {y, 3}}, Sense::kLessEqual, 9);
    lp.add_constraint("c", {{x, 1}}, Sense::kLessEqual, 3);
    lp.set_objective(Direction::kMaximize, {{x, 3}, {y, 2}});
    return lp;
  };
  const auto sol = solve_lp(build(4), {true});
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, 11);
  ASSERT_EQ(sol.duals.size(), 3u);
  EXPECT_EQ(sol.duals[0], 2);
  EXPECT_EQ(sol.duals[1], 0);
  EXPECT_EQ(sol.duals[2], 1);
  EXPECT_EQ(solve_lp(build(Rational(9, 2))).objective, 11 + sol.duals[0] * Rational(1, 2));
}

TEST(Lp, DegenerateCycleProneTerminates) {
  // Beale's example cycles under the textbook rule
  LinearProgram lp;
  const int x1 = lp.add_variable("x1");
  const int x2 = lp.add_variable("x2");
  const int x3 = lp.add_variable("x3");
  const int x4 = lp.add_variable("x4");
  lp.add_constraint("r1", {{x1, Rational(1, 4)}, {x2, -8}, {x3, -1}, {x4, 9}}, Sense::kLessEqual, 0);
  lp.add_constraint("r2", {{x1, Rational(1, 2)}, {x2, -12}, {x3, Rational(-1, 2)}, {x4, 3}},
                    Sense::kLessEqual, 0);
  lp.add_constraint("r3", {{x3, 1}}, Sense::kLessEqual, 1);
  lp.set_objective(Direction::kMinimize,
                   {{x1, Rational(-3, 4)}, {x2, 20}, {x3, Rational(-1, 2)}, {x4, 6}});
  const auto sol = solve_lp(lp, {true});
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, Rational(-5, 4));
  EXPECT_LT(sol.pivots, 50u);
}

TEST(Lp, RedundantEqualities) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  const int y = lp.add_variable("y");
  lp.add_constraint("e1", {{x, 1}, {y, 1}}, Sense::kEqual, 2);
  lp.add_constraint("e2", {{x, 2}, {y, 2}}, Sense::kEqual, 4);
  lp.add_constraint("neg", {{x, -1}}, Sense::kGreaterEqual, -1);
  lp.set_objective(Direction::kMaximize, {{y, 1}});
  const auto sol = solve_lp(lp, {true});
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, 2);
  EXPECT_TRUE(satisfies_exactly(lp, sol.values));
}

TEST(Lp, RandomProgramsSatisfyDuality) {
  PortableRng rng(21);
  int optimal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LinearProgram lp;
    const int n = static_cast<int>(rng.between(1, 5));
    const int m = static_cast<int>(rng.between(1, 5));
    for (int j = 0; j < n; ++j) {
      const long lo = rng.between(-3, 1);
      lp.add_variable("v" + std::to_string(j), Rational(lo),
                      rng.chance(Rational(1, 2)) ? std::optional<Rational>(Rational(lo + rng.between(0, 6)))
                                                 : std::nullopt);
    }
    for (int i = 0; i < m; ++i) {
      std::vector<Term> row;
      for (int j = 0; j < n; ++j) row.push_back({j, Rational(rng.between(-4, 4), rng.between(1, 3))});
      const auto sense = static_cast<Sense>(rng.below(3));
      lp.add_constraint("c" + std::to_string(i), row, sense, Rational(rng.between(-6, 6)));
    }
    std::vector<Term> obj;
    for (int j = 0; j < n; ++j) obj.push_back({j, Rational(rng.between(-5, 5))});
    lp.set_objective(rng.chance(Rational(1, 2)) ? Direction::kMaximize : Direction::kMinimize, obj);
    const auto sol = solve_lp(lp, {true});  // throws on a duality failure
    if (sol.status == LpStatus::kOptimal) {
      ++optimal;
      EXPECT_TRUE(satisfies_exactly(lp, sol.values));
      EXPECT_EQ(evaluate_objective(lp, sol.values), sol.objective);
    }
  }
  EXPECT_GT(optimal, 30);
}

TEST(LpFormat, ExactAndInexactCoefficients) {
  LinearProgram lp;
  const int x = lp.add_variable("x", Rational(0), Rational(1, 4));
  const int y = lp.add_variable("y bad", std::nullopt, std::nullopt);
  const int z = lp.add_variable("z", Rational(0), Rational(1));
  lp.add_constraint("third", {{x, Rational(1, 3)}, {y, -1}}, Sense::kGreaterEqual, Rational(-7, 10));
  lp.set_objective(Direction::kMaximize, {{x, 2}, {z, 1}});
  const std::vector<VarKind> kinds{VarKind::kContinuous, VarKind::kContinuous, VarKind::kBinary};
  const auto text = to_lp_format(lp, kinds);
  EXPECT_NE(text.find("Maximize\n obj: 2 x + z\n"), std::string::npos) << text;
  EXPECT_NE(text.find("\\ exact x coefficient 1/3"), std::string::npos);
  EXPECT_NE(text.find("0.33333333333333331 x"), std::string::npos);
  EXPECT_NE(text.find(">= -0.7"), std::string::npos);
  EXPECT_NE(text.find("y_bad free"), std::string::npos);
  EXPECT_NE(text.find("0 <= x <= 0.25"), std::string::npos);
  EXPECT_NE(text.find("Binary\n z\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "End\n");
  EXPECT_EQ(to_lp_format(lp, kinds), text);
}
