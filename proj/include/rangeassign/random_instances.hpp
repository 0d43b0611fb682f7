#pragma once

#include <cstdint>
#include <vector>

#include "rangeassign/core.hpp"

namespace rangeassign {

/// A seeded family of random instances.
///
/// Line: the source sits at `source` and the other points are uniform in
/// [lo, hi]. Plane: uniform in the square [lo, hi]^2 with the source at
/// (source, source). Metric: shortest-path closure of a complete graph with
/// edge weights uniform in [lo, hi], which yields a general (non-Euclidean)
/// metric. Duplicate points are rejected and redrawn.
struct RandomFamily {
  Space space = Space::Plane;
  std::size_t n = 10;
  double lo = 0.0;
  double hi = 1.0;
  double source = 0.5;

  static RandomFamily line_nonnegative(std::size_t n);  // source 0, points in [0, 1]
  static RandomFamily line_symmetric(std::size_t n);    // source 0, points in [-1, 1]
  static RandomFamily unit_square(std::size_t n);       // source at the center
  static RandomFamily random_metric(std::size_t n);     // weights in [0.1, 1]
};

/// Deterministic in (family, seed).
Instance random_instance(const RandomFamily& family, std::uint64_t seed);

}  // namespace rangeassign
