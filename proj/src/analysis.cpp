#include "rangeassign/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rangeassign/instance_io.hpp"
#include "rangeassign/oracle.hpp"

namespace rangeassign {

double max_midpoint_gamma() { return (3.0 - std::sqrt(7.0)) / 4.0; }

double ChargingVariant::containment_scale() const {
  return kind == Kind::TwoNN ? 1.5 : 1.5 + gamma;
}

std::vector<ChargingDisk> charging_disks(const Instance& instance, const SimulationResult& run,
                                         const ChargingVariant& variant) {
  if (instance.space() == Space::Metric) {
    throw std::invalid_argument("charging disks need coordinates");
  }
  if (run.steps.size() != instance.size()) {
    throw std::invalid_argument("run does not belong to this instance");
  }
  const auto& cfg = run.config;
  if (variant.kind == ChargingVariant::Kind::TwoNN) {
    if (cfg.kind != StrategyKind::ScaledNearestNeighbor || cfg.k != 2.0) {
      throw std::invalid_argument("TwoNN charging disks need a knn run with k = 2");
    }
  } else {
    const bool nn = cfg.kind == StrategyKind::NearestNeighbor ||
                    (cfg.kind == StrategyKind::ScaledNearestNeighbor && cfg.k == 1.0);
    if (!nn) throw std::invalid_argument("midpoint charging disks need an nn run");
    if (!(variant.gamma > 0.0 && variant.gamma < max_midpoint_gamma())) {
      throw std::invalid_argument("midpoint gamma must lie in (0, (3 - sqrt 7) / 4)");
    }
  }

  std::vector<ChargingDisk> disks;
  OnlineState probe(instance, cfg.alpha);
  for (std::size_t j = 0; j < instance.size(); ++j) {
    probe.admit(j);
    if (j == 0) continue;
    ChargingDisk disk;
    disk.owner = j;
    disk.variant = variant;
    disk.center = instance.point(j);
    if (run.steps[j].action == StepAction::Raised) {
      const std::size_t nn = probe.nearest_predecessor(j);
      const double d = instance.dist(nn, j);
      disk.empty = false;
      if (variant.kind == ChargingVariant::Kind::TwoNN) {
        disk.radius = d / 2.0;
      } else {
        const Point2& a = instance.point(j);
        const Point2& b = instance.point(nn);
        disk.center = {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        disk.radius = variant.gamma * d;
      }
    }
    disks.push_back(disk);
  }
  return disks;
}

std::optional<DiskPair> check_disjoint(const std::vector<ChargingDisk>& disks, double tolerance) {
  for (std::size_t a = 0; a < disks.size(); ++a) {
    if (!(disks[a].variant == disks.front().variant)) {
      throw std::invalid_argument("check_disjoint: disks of mixed variants");
    }
  }
  for (std::size_t a = 0; a < disks.size(); ++a) {
    if (disks[a].empty) continue;
    for (std::size_t b = a + 1; b < disks.size(); ++b) {
      if (disks[b].empty) continue;
      const double gap = euclidean(disks[a].center, disks[b].center) -
                         (disks[a].radius + disks[b].radius);
      if (gap < -tolerance) return DiskPair{disks[a].owner, disks[b].owner};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> check_containment(const Instance& instance,
                                             const std::vector<ChargingDisk>& disks,
                                             const RangeAssignment& ranges, double scale) {
  if (ranges.size() != instance.size()) {
    throw std::invalid_argument("assignment size does not match instance");
  }
  for (const auto& disk : disks) {
    if (disk.empty) continue;
    const std::size_t k = disk.owner;
    bool held = false;
    for (std::size_t i = 0; i < k && !held; ++i) {
      if (!within_range(instance.dist(i, k), ranges[i])) continue;
      const double outer = scale * ranges[i];
      const double reach = euclidean(instance.point(i), disk.center) + disk.radius;
      held = reach <= outer + 1e-9 * std::max(1.0, outer);
    }
    if (!held) return k;
  }
  return std::nullopt;
}

double f_alpha_sum(const Instance& instance, double alpha,
                   const std::optional<std::vector<std::size_t>>& subset) {
  require_alpha(alpha);
  std::vector<std::size_t> members;
  if (subset) {
    members = *subset;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= instance.size()) {
      throw std::out_of_range("subset index out of range");
    }
  } else {
    members.resize(instance.size());
    for (std::size_t j = 0; j < members.size(); ++j) members[j] = j;
  }
  double total = 0.0;
  for (std::size_t a = 1; a < members.size(); ++a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < a; ++b) {
      nearest = std::min(nearest, instance.dist(members[a], members[b]));
    }
    total += std::pow(nearest, alpha);
  }
  return total;
}

RatioReport competitive_ratio(const Instance& instance, const StrategyConfig& strategy) {
  if (instance.size() > kExactSolverLimit) {
    throw InstanceTooLarge(instance.size(), kExactSolverLimit);
  }
  const SimulationResult run = simulate(instance, strategy);
  const OracleResult optimum = solve_optimal(instance, strategy.alpha);
  RatioReport report;
  report.strategy = strategy.label();
  report.digest = instance_digest(instance);
  report.n = instance.size();
  report.strategy_cost = run.total_cost();
  report.oracle_cost = optimum.cost;
  report.increments = run.trace.increments;
  // A one-point instance costs nothing on either side.
  report.ratio = optimum.cost > 0.0 ? report.strategy_cost / optimum.cost : 1.0;
  return report;
}

}  // namespace rangeassign
