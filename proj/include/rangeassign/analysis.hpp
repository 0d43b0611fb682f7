#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rangeassign/core.hpp"
#include "rangeassign/strategies.hpp"

namespace rangeassign {

/// Upper end (exclusive) of the admissible midpoint-disk scale.
double max_midpoint_gamma();

struct ChargingVariant {
  enum class Kind { TwoNN, MidpointNN };
  Kind kind = Kind::TwoNN;
  double gamma = 0.0;  // MidpointNN only

  static ChargingVariant two_nn() { return {Kind::TwoNN, 0.0}; }
  static ChargingVariant midpoint_nn(double gamma) { return {Kind::MidpointNN, gamma}; }

  /// Scale at which charging disks sit inside optimal disks: 1.5 for TwoNN,
  /// 1.5 + gamma for MidpointNN.
  double containment_scale() const;

  friend bool operator==(const ChargingVariant&, const ChargingVariant&) = default;
};

/// Analysis-only disk attached to arrival `owner`. TwoNN disks are centered
/// at the arrival with radius d/2; MidpointNN disks are centered at the
/// midpoint towards the nearest predecessor with radius gamma * d. Arrivals
/// the strategy did not pay for get an empty disk.
struct ChargingDisk {
  std::size_t owner = 0;
  Point2 center;
  double radius = 0.0;
  bool empty = true;
  ChargingVariant variant;
};

/// One disk per arrival j >= 1. TwoNN needs a knn(k=2) run, MidpointNN an
/// nn run with 0 < gamma < max_midpoint_gamma(). Throws
/// std::invalid_argument for metric instances or mismatched runs.
std::vector<ChargingDisk> charging_disks(const Instance& instance, const SimulationResult& run,
                                         const ChargingVariant& variant);

struct DiskPair {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// First pair of overlapping non-empty disks (center distance below the
/// radius sum by more than `tolerance`), or nullopt.
std::optional<DiskPair> check_disjoint(const std::vector<ChargingDisk>& disks,
                                       double tolerance = 1e-9);

/// Owner of the first non-empty disk that no earlier arrival's scaled final
/// disk contains, or nullopt. The candidate holders i < k must already cover
/// arrival k under `ranges`. Final ranges dominate the ranges in force when
/// arrival k came in, so passing here is implied by the per-step statement.
std::optional<std::size_t> check_containment(const Instance& instance,
                                             const std::vector<ChargingDisk>& disks,
                                             const RangeAssignment& ranges, double scale);

/// Sum over subset members j (except the lowest index, which acts as the
/// initial predecessor) of the alpha-th power of the distance to the nearest
/// earlier member. The subset defaults to every arrival.
double f_alpha_sum(const Instance& instance, double alpha,
                   const std::optional<std::vector<std::size_t>>& subset = std::nullopt);

struct RatioReport {
  std::string strategy;
  std::string digest;
  std::size_t n = 0;
  double strategy_cost = 0.0;
  double oracle_cost = 0.0;
  double ratio = 0.0;
  std::vector<double> increments;
};

/// Simulated cost over the exact optimum. Throws InstanceTooLarge beyond
/// the solver limit.
RatioReport competitive_ratio(const Instance& instance, const StrategyConfig& strategy);

}  // namespace rangeassign
