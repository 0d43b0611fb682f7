#include "rangeassign/strategies.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rangeassign {

StrategyConfig StrategyConfig::nn(double alpha) {
  return {StrategyKind::NearestNeighbor, alpha, 1.0, 4.0};
}

StrategyConfig StrategyConfig::ci(double alpha) {
  return {StrategyKind::CheapestIncrease, alpha, 1.0, 4.0};
}

StrategyConfig StrategyConfig::knn(double k, double alpha) {
  return {StrategyKind::ScaledNearestNeighbor, alpha, k, 4.0};
}

StrategyConfig StrategyConfig::dual(double gamma, double alpha) {
  return {StrategyKind::DualOnline, alpha, 1.0, gamma};
}

void StrategyConfig::validate() const {
  require_alpha(alpha);
  if (kind == StrategyKind::ScaledNearestNeighbor && !(k >= 1.0 && std::isfinite(k))) {
    throw std::invalid_argument("knn expansion factor k must be >= 1");
  }
  if (kind == StrategyKind::DualOnline && !(gamma > 1.0 && std::isfinite(gamma))) {
    throw std::invalid_argument("dual strategy gamma must be > 1");
  }
}

std::string StrategyConfig::label() const {
  std::ostringstream out;
  switch (kind) {
    case StrategyKind::NearestNeighbor:
      out << "nn";
      break;
    case StrategyKind::CheapestIncrease:
      out << "ci";
      break;
    case StrategyKind::ScaledNearestNeighbor:
      out << "knn(k=" << k << ")";
      break;
    case StrategyKind::DualOnline:
      out << "dual(gamma=" << gamma << ")";
      break;
  }
  return out.str();
}

const char* to_string(StepAction action) {
  return action == StepAction::Raised ? "raised" : "covered";
}

OnlineState::OnlineState(const Instance& inst, double alpha_value)
    : instance(&inst), alpha(alpha_value) {
  ranges.reserve(inst.size());
  dual.y.reserve(inst.size());
}

void OnlineState::admit(std::size_t j) {
  if (j != ranges.size() || j >= instance->size()) {
    throw std::logic_error("arrivals must be admitted in order");
  }
  ranges.push_back(0.0);
  dual.y.push_back(0.0);
}

std::optional<std::size_t> OnlineState::covering_predecessor(std::size_t j) const {
  for (std::size_t i = 0; i < j; ++i) {
    if (within_range(instance->dist(i, j), ranges[i])) return i;
  }
  return std::nullopt;
}

std::size_t OnlineState::nearest_predecessor(std::size_t j) const {
  if (j == 0) throw std::invalid_argument("the source has no predecessor");
  std::size_t best = 0;
  double best_dist = instance->dist(0, j);
  for (std::size_t i = 1; i < j; ++i) {
    const double d = instance->dist(i, j);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

namespace {

StepReport raise_to(OnlineState& state, std::size_t j, std::size_t center, double target) {
  StepReport report;
  report.arrival = j;
  report.center = center;
  report.old_range = state.ranges[center];
  report.new_range = std::max(report.old_range, target);
  if (report.new_range > report.old_range) {
    report.action = StepAction::Raised;
    report.cost_delta =
        std::pow(report.new_range, state.alpha) - std::pow(report.old_range, state.alpha);
    state.ranges[center] = report.new_range;
  }
  return report;
}

StepReport covered_report(const OnlineState& state, std::size_t j, std::size_t center) {
  StepReport report;
  report.arrival = j;
  report.center = center;
  report.old_range = report.new_range = state.ranges[center];
  return report;
}

void require_arrived(const OnlineState& state, std::size_t j) {
  if (j == 0 || j + 1 != state.ranges.size()) {
    throw std::logic_error("step must be applied to the latest admitted arrival j >= 1");
  }
}

}  // namespace

StepReport nn_step(OnlineState& state, std::size_t j) { return knn_step(state, j, 1.0); }

StepReport knn_step(OnlineState& state, std::size_t j, double k) {
  require_arrived(state, j);
  if (auto holder = state.covering_predecessor(j)) return covered_report(state, j, *holder);
  const std::size_t nn = state.nearest_predecessor(j);
  return raise_to(state, j, nn, k * state.instance->dist(nn, j));
}

StepReport ci_step(OnlineState& state, std::size_t j) {
  require_arrived(state, j);
  if (auto holder = state.covering_predecessor(j)) return covered_report(state, j, *holder);
  std::size_t best = 0;
  double best_increase = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < j; ++i) {
    const double increase =
        std::pow(state.instance->dist(i, j), state.alpha) - std::pow(state.ranges[i], state.alpha);
    if (increase < best_increase) {
      best = i;
      best_increase = increase;
    }
  }
  return raise_to(state, j, best, state.instance->dist(best, j));
}

// The dual variable of the new arrival jumps straight to the smallest slack
// among the sets that contain it, which is where continuous raising would
// stop. Radii only range over distances to arrived points: a set whose
// radius lies strictly between two such distances has the same load as the
// smaller one and a larger bound, so it can neither have the minimum slack
// nor be tight.
StepReport dual_step(OnlineState& state, std::size_t j, double gamma) {
  require_arrived(state, j);
  const Instance& inst = *state.instance;
  state.dual.y[j] = 0.0;

  std::optional<CoverSet> tight;
  double min_slack = std::numeric_limits<double>::infinity();
  std::optional<CoverSet> min_set;
  for (std::size_t i = 0; i < j && !tight; ++i) {
    for (std::size_t k = i + 1; k <= j; ++k) {
      const CoverSet set{i, inst.dist(i, k)};
      if (!set_contains(inst, set, j)) continue;
      const double load = dual_load(inst, state.dual, set, j);
      if (is_tight(load, set.radius, state.alpha)) {
        tight = set;
        break;
      }
      const double slack = std::pow(set.radius, state.alpha) - load;
      if (slack < min_slack) {
        min_slack = slack;
        min_set = set;
      }
    }
  }
  if (!tight) {
    if (!min_set) throw std::logic_error("no cover set contains the arrival");
    state.dual.y[j] = std::max(0.0, min_slack);
    // The lowest-index center among the sets the raise made tight.
    for (std::size_t i = 0; i < j && !tight; ++i) {
      for (std::size_t k = i + 1; k <= j; ++k) {
        const CoverSet set{i, inst.dist(i, k)};
        if (set_contains(inst, set, j) &&
            is_tight(dual_load(inst, state.dual, set, j), set.radius, state.alpha)) {
          tight = set;
          break;
        }
      }
    }
    if (!tight) tight = min_set;
  }

  const double radius =
      max_tight_radius(inst, state.alpha, state.dual, tight->center, j).value_or(tight->radius);
  StepReport report = raise_to(state, j, tight->center, gamma * radius);
  report.dual_value = state.dual.y[j];
  report.tight_set = tight;
  return report;
}

SimulationResult simulate(const Instance& instance, const StrategyConfig& config) {
  config.validate();
  if (instance.size() == 0) throw std::invalid_argument("instance has no points");
  SimulationResult result;
  result.config = config;
  result.trace.alpha = config.alpha;
  OnlineState state(instance, config.alpha);
  for (std::size_t j = 0; j < instance.size(); ++j) {
    state.admit(j);
    StepReport report;
    if (j > 0) {
      switch (config.kind) {
        case StrategyKind::NearestNeighbor:
          report = nn_step(state, j);
          break;
        case StrategyKind::CheapestIncrease:
          report = ci_step(state, j);
          break;
        case StrategyKind::ScaledNearestNeighbor:
          report = knn_step(state, j, config.k);
          break;
        case StrategyKind::DualOnline:
          report = dual_step(state, j, config.gamma);
          break;
      }
    } else if (config.kind == StrategyKind::DualOnline) {
      report.dual_value = 0.0;
    }
    result.steps.push_back(report);
    result.trace.snapshots.push_back(state.ranges);
    result.trace.increments.push_back(report.cost_delta);
  }
  if (config.kind == StrategyKind::DualOnline) result.dual = state.dual;
  return result;
}

void write_steps_csv(std::ostream& out, const std::vector<StepReport>& steps) {
  const auto old_precision = out.precision(17);
  out << "j,action,center,old_range,new_range,cost_delta,y_j\n";
  for (const auto& s : steps) {
    out << s.arrival << ',' << to_string(s.action) << ',' << s.center << ',' << s.old_range
        << ',' << s.new_range << ',' << s.cost_delta << ',';
    if (s.dual_value) out << *s.dual_value;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace rangeassign
