#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rangeassign/core.hpp"

namespace rangeassign {

/// S_{center, radius}: the arrivals after `center` within `radius` of it.
struct CoverSet {
  std::size_t center = 0;
  double radius = 0.0;

  friend bool operator==(const CoverSet&, const CoverSet&) = default;
};

bool set_contains(const Instance& instance, const CoverSet& set, std::size_t j);

/// Every (center, radius) pair with radius drawn from candidate_ranges.
std::vector<CoverSet> all_cover_sets(const Instance& instance);

/// Dual values of the covering LP, indexed by arrival. y[0] belongs to the
/// source, which is never an element, and stays 0.
struct DualSolution {
  std::vector<double> y;

  double total() const;
};

/// Sum of y_k over members k <= last_arrival of the set.
double dual_load(const Instance& instance, const DualSolution& dual,
                 const CoverSet& set, std::size_t last_arrival);

/// |load - r^alpha| <= 1e-9 * max(1, r^alpha).
bool is_tight(double load, double radius, double alpha);

/// Largest radius at `center` whose set is tight when only arrivals up to
/// `last_arrival` count. Radii range over distances to those arrivals.
std::optional<double> max_tight_radius(const Instance& instance, double alpha,
                                       const DualSolution& dual,
                                       std::size_t center,
                                       std::size_t last_arrival);

/// Every set constraint holds on the first prefix_len arrivals, with slack
/// 1e-9 * max(1, r^alpha).
bool is_dual_feasible(const Instance& instance, double alpha,
                      const DualSolution& dual, std::size_t prefix_len);

}  // namespace rangeassign
