#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "rangeassign/oracle.hpp"
#include "rangeassign/random_instances.hpp"
#include "rangeassign/strategies.hpp"
#include "support/brute_force.hpp"

namespace rangeassign {
namespace {

// Builds a state with every arrival up to `last` admitted and the given ranges.
OnlineState state_with(const Instance& inst, std::vector<double> ranges, double alpha = 2.0) {
  OnlineState state(inst, alpha);
  for (std::size_t j = 0; j <= ranges.size(); ++j) state.admit(j);
  for (std::size_t i = 0; i < ranges.size(); ++i) state.ranges[i] = ranges[i];
  return state;
}

TEST(StrategiesTest, SinglePointCostsNothing) {
  const auto run = simulate(Instance::plane({{0.0, 0.0}}), StrategyConfig::nn());
  ASSERT_EQ(run.trace.snapshots.size(), 1u);
  EXPECT_EQ(run.trace.snapshots[0], (RangeAssignment{0.0}));
  EXPECT_DOUBLE_EQ(run.total_cost(), 0.0);
}

TEST(StrategiesTest, TwoPointsForceOneMove) {
  const auto run = simulate(Instance::line({0.0, 1.7}), StrategyConfig::nn());
  EXPECT_EQ(run.trace.final_ranges(), (RangeAssignment{1.7, 0.0}));
  EXPECT_DOUBLE_EQ(run.total_cost(), 1.7 * 1.7);
}

TEST(StrategiesTest, NearestNeighborOnLineLowerBoundInstance) {
  const auto run = simulate(Instance::line({0.0, 0.01, 1.0, -1.0}), StrategyConfig::nn());
  const auto& r = run.trace.final_ranges();
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_NEAR(r[1], 0.99, 1e-15);
  EXPECT_EQ(r[2], 0.0);
  EXPECT_EQ(r[3], 0.0);
  EXPECT_NEAR(run.total_cost(), 1.9801, 1e-12);
}

TEST(StrategiesTest, NearestNeighborStep) {
  // New point 5 has predecessors at distance 5 (index 0) and 2 (index 1).
  const auto inst = Instance::line({0.0, 3.0, 5.0});
  auto state = state_with(inst, {0.0, 0.0});
  const auto report = nn_step(state, 2);
  EXPECT_EQ(report.action, StepAction::Raised);
  EXPECT_EQ(report.center, 1u);
  EXPECT_DOUBLE_EQ(report.new_range, 2.0);
  EXPECT_DOUBLE_EQ(report.cost_delta, 4.0);
}

TEST(StrategiesTest, NearestNeighborTieTakesLowestIndex) {
  const auto inst = Instance::line({0.0, 2.0, 1.0});
  auto state = state_with(inst, {0.0, 0.0});
  EXPECT_EQ(nn_step(state, 2).center, 0u);
}

TEST(StrategiesTest, CoveredArrivalIsNoOp) {
  const auto inst = Instance::line({0.0, 3.0, 1.0});
  auto state = state_with(inst, {3.0, 0.0});
  for (auto step : {+[](OnlineState& s) { return nn_step(s, 2); },
                    +[](OnlineState& s) { return ci_step(s, 2); },
                    +[](OnlineState& s) { return knn_step(s, 2, 2.0); }}) {
    auto copy = state;
    const auto report = step(copy);
    EXPECT_EQ(report.action, StepAction::Covered);
    EXPECT_EQ(report.cost_delta, 0.0);
    EXPECT_EQ(copy.ranges, state.ranges);
  }
}

TEST(StrategiesTest, CheapestIncreaseStep) {
  // New point 3: distance 3 to index 0, distance 2 to index 1.
  const auto inst = Instance::line({0.0, 5.0, 3.0});
  auto fresh = state_with(inst, {0.0, 0.0});
  EXPECT_EQ(ci_step(fresh, 2).center, 1u);  // 4 < 9

  auto grown = state_with(inst, {2.5, 0.0});
  const std::size_t expected = testing::brute_ci_choice(inst, {2.5, 0.0}, 2, 2.0);
  ASSERT_EQ(expected, 0u);  // 9 - 6.25 = 2.75 < 4
  const auto report = ci_step(grown, 2);
  EXPECT_EQ(report.center, expected);
  EXPECT_DOUBLE_EQ(report.new_range, 3.0);
  EXPECT_DOUBLE_EQ(report.cost_delta, 2.75);
}

TEST(StrategiesTest, CheapestIncreaseMatchesBruteForceChoice) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(RandomFamily::unit_square(10), seed);
    const double alpha = seed % 2 ? 2.0 : 3.0;
    OnlineState state(inst, alpha);
    state.admit(0);
    for (std::size_t j = 1; j < inst.size(); ++j) {
      state.admit(j);
      const auto before = state.ranges;
      const bool covered = state.covering_predecessor(j).has_value();
      const auto report = ci_step(state, j);
      if (!covered) {
        EXPECT_EQ(report.center, testing::brute_ci_choice(inst, before, j, alpha));
        EXPECT_GT(report.cost_delta, 0.0);
      }
    }
  }
}

TEST(StrategiesTest, ScaledNearestNeighborStep) {
  const double d = 1.25;
  auto state = state_with(Instance::line({0.0, d}), {0.0});
  const auto report = knn_step(state, 1, 2.0);
  EXPECT_DOUBLE_EQ(report.new_range, 2.0 * d);
  EXPECT_DOUBLE_EQ(report.cost_delta, std::pow(2.0 * d, 2.0));
}

TEST(StrategiesTest, ScaledWithFactorOneIsNearestNeighbor) {
  for (const auto space : {Space::Line, Space::Plane, Space::Metric}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = random_instance(RandomFamily{space, 14, 0.1, 1.0, 0.5}, seed);
      const auto a = simulate(inst, StrategyConfig::nn());
      const auto b = simulate(inst, StrategyConfig::knn(1.0));
      EXPECT_EQ(a.trace.snapshots, b.trace.snapshots);
      EXPECT_EQ(a.trace.increments, b.trace.increments);
    }
  }
}

TEST(StrategiesTest, DualTwoPoints) {
  const double d = 0.7;
  const auto run = simulate(Instance::line({0.0, d}), StrategyConfig::dual(4.0, 3.0));
  ASSERT_TRUE(run.dual.has_value());
  EXPECT_DOUBLE_EQ(run.dual->y[1], std::pow(d, 3.0));
  EXPECT_DOUBLE_EQ(run.trace.final_ranges()[0], 4.0 * d);
}

// Hand trace: p_1 tightens S_{0,1} (y_1 = 1, r_0 = 4). p_2 is covered by
// p_0, but no set holding it is tight yet: S_{0,2} has slack 3 and S_{1,1}
// has slack 1, so y_2 = 1 tightens S_{1,1} and r_1 = 4.
TEST(StrategiesTest, DualThreeCollinearPoints) {
  const auto run = simulate(Instance::line({0.0, 1.0, 2.0}), StrategyConfig::dual(4.0, 2.0));
  ASSERT_TRUE(run.dual.has_value());
  EXPECT_DOUBLE_EQ(run.dual->y[1], 1.0);
  EXPECT_DOUBLE_EQ(run.dual->y[2], 1.0);
  EXPECT_EQ(run.trace.snapshots[1], (RangeAssignment{4.0, 0.0}));
  EXPECT_EQ(run.trace.snapshots[2], (RangeAssignment{4.0, 4.0, 0.0}));
  ASSERT_TRUE(run.steps[2].tight_set.has_value());
  EXPECT_EQ(*run.steps[2].tight_set, (CoverSet{1, 1.0}));
}

// p_3 = 1.5 lies in S_{1,1}, already tight after the run above.
TEST(StrategiesTest, DualArrivalInTightSetKeepsZero) {
  const auto run =
      simulate(Instance::line({0.0, 1.0, 2.0, 1.5}), StrategyConfig::dual(4.0, 2.0));
  EXPECT_EQ(run.dual->y[3], 0.0);
  EXPECT_EQ(*run.steps[3].tight_set, (CoverSet{1, 1.0}));
  EXPECT_EQ(run.steps[3].action, StepAction::Covered);
  EXPECT_EQ(run.trace.snapshots[3], (RangeAssignment{4.0, 4.0, 0.0, 0.0}));
}

TEST(StrategiesTest, DualKeepsFeasibilityAndWeakDuality) {
  for (const auto space : {Space::Line, Space::Plane, Space::Metric}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto inst = random_instance(RandomFamily{space, 2 + seed % 9, 0.1, 1.0, 0.5}, seed);
      for (double alpha : {2.0, 3.0}) {
        const auto run = simulate(inst, StrategyConfig::dual(4.0, alpha));
        for (std::size_t j = 1; j <= inst.size(); ++j) {
          DualSolution partial{std::vector<double>(run.dual->y.begin(), run.dual->y.begin() + j)};
          EXPECT_TRUE(is_dual_feasible(inst, alpha, partial, j));
        }
        EXPECT_LE(testing::max_dual_violation(inst, run.dual->y, alpha), 1e-9);
        EXPECT_LE(run.dual->total(), solve_optimal(inst, alpha).cost * (1.0 + 1e-9));
      }
    }
  }
}

TEST(StrategiesTest, NonnegativeLineInstancesAreSolvedOptimally) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(RandomFamily::line_nonnegative(2 + seed % 9), seed);
    const double opt = testing::brute_force_optimum(inst, 2.0).cost;
    EXPECT_NEAR(simulate(inst, StrategyConfig::nn()).total_cost(), opt, 1e-9 * opt);
    EXPECT_NEAR(simulate(inst, StrategyConfig::ci()).total_cost(), opt, 1e-9 * opt);
  }
}

TEST(StrategiesTest, ConfigValidation) {
  EXPECT_THROW(StrategyConfig::knn(0.5).validate(), std::invalid_argument);
  EXPECT_THROW(StrategyConfig::dual(1.0).validate(), std::invalid_argument);
  EXPECT_THROW(StrategyConfig::nn(1.0).validate(), std::invalid_argument);
  EXPECT_THROW(simulate(Instance::line({0.0, 1.0}), StrategyConfig::nn(0.9)), std::invalid_argument);
}

TEST(StrategiesTest, StepCsv) {
  const auto run = simulate(Instance::line({0.0, 1.0, 2.0}), StrategyConfig::dual(4.0, 2.0));
  std::ostringstream csv;
  write_steps_csv(csv, run.steps);
  EXPECT_EQ(csv.str(),
            "j,action,center,old_range,new_range,cost_delta,y_j\n"
            "0,covered,0,0,0,0,0\n"
            "1,raised,0,0,4,16,1\n"
            "2,raised,1,0,4,16,1\n");
  const auto nn = simulate(Instance::line({0.0, 1.0}), StrategyConfig::nn());
  std::ostringstream plain;
  write_steps_csv(plain, nn.steps);
  EXPECT_NE(plain.str().find("1,raised,0,0,1,1,\n"), std::string::npos);
}

}  // namespace
}  // namespace rangeassign
