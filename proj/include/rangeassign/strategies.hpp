#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rangeassign/core.hpp"
#include "rangeassign/set_system.hpp"

namespace rangeassign {

enum class StrategyKind { NearestNeighbor, CheapestIncrease, ScaledNearestNeighbor, DualOnline };

/// Online strategy parameters. Ties are always broken towards the lowest
/// arrival index.
struct StrategyConfig {
  StrategyKind kind = StrategyKind::NearestNeighbor;
  double alpha = 2.0;
  double k = 1.0;      // expansion factor, ScaledNearestNeighbor only
  double gamma = 4.0;  // DualOnline only

  static StrategyConfig nn(double alpha = 2.0);
  static StrategyConfig ci(double alpha = 2.0);
  static StrategyConfig knn(double k, double alpha = 2.0);
  static StrategyConfig dual(double gamma, double alpha = 2.0);

  /// Throws std::invalid_argument on alpha <= 1, k < 1 or gamma <= 1.
  void validate() const;
  std::string label() const;
};

enum class StepAction { Covered, Raised };

struct StepReport {
  std::size_t arrival = 0;
  StepAction action = StepAction::Covered;
  std::size_t center = 0;
  double old_range = 0.0;
  double new_range = 0.0;
  double cost_delta = 0.0;
  std::optional<double> dual_value;     // DualOnline: y_j
  std::optional<CoverSet> tight_set;    // DualOnline: the set that triggered the update
};

/// Mutable state of one run: the current ranges of the arrived points and,
/// for DualOnline, the dual values raised so far.
struct OnlineState {
  const Instance* instance = nullptr;
  double alpha = 2.0;
  RangeAssignment ranges;
  DualSolution dual;

  explicit OnlineState(const Instance& inst, double alpha_value);

  /// Adds arrival j with range 0; j must equal the current size.
  void admit(std::size_t j);
  /// Lowest-index predecessor of j whose ball holds j, if any.
  std::optional<std::size_t> covering_predecessor(std::size_t j) const;
  /// Lowest-index nearest predecessor of j.
  std::size_t nearest_predecessor(std::size_t j) const;
};

StepReport nn_step(OnlineState& state, std::size_t j);
StepReport ci_step(OnlineState& state, std::size_t j);
StepReport knn_step(OnlineState& state, std::size_t j, double k);
StepReport dual_step(OnlineState& state, std::size_t j, double gamma);

struct SimulationResult {
  StrategyConfig config;
  AssignmentTrace trace;
  std::vector<StepReport> steps;    // steps[0] is the source (always covered)
  std::optional<DualSolution> dual;  // DualOnline only

  double total_cost() const { return trace.total_cost(); }
};

SimulationResult simulate(const Instance& instance, const StrategyConfig& config);

/// Header plus one row per arrival:
/// j,action,center,old_range,new_range,cost_delta,y_j
void write_steps_csv(std::ostream& out, const std::vector<StepReport>& steps);

const char* to_string(StepAction action);

}  // namespace rangeassign
