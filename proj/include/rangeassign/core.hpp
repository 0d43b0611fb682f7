#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rangeassign {

enum class Space { Line, Plane, Metric };

const char* to_string(Space space);
Space parse_space(const std::string& name);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double euclidean(const Point2& a, const Point2& b);

// Tolerance used when validating metric matrices.
inline constexpr double kMetricTolerance = 1e-9;

// Instances above this size are only usable on simulation paths.
inline constexpr std::size_t kBitsetLimit = 64;

/// An ordered arrival sequence. Index 0 is the source.
///
/// Line points are stored with y = 0. Metric instances keep the full
/// distance matrix and no coordinates. Construction validates pairwise
/// distinctness and, for matrices, symmetry, zero diagonal and the
/// triangle inequality.
class Instance {
 public:
  /// Empty line instance.
  Instance() = default;

  static Instance line(std::vector<double> coordinates);
  static Instance plane(std::vector<Point2> points);
  static Instance metric(std::vector<std::vector<double>> matrix);

  Space space() const { return space_; }
  std::size_t size() const { return size_; }

  /// Distance between arrivals i and j; throws std::out_of_range.
  double dist(std::size_t i, std::size_t j) const;

  /// Coordinates of arrival i. Metric instances have none.
  const Point2& point(std::size_t i) const;
  const std::vector<Point2>& points() const { return points_; }
  const std::vector<double>& matrix() const { return matrix_; }

  /// The first `count` arrivals as a standalone instance.
  Instance prefix(std::size_t count) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  void validate() const;

  Space space_ = Space::Line;
  std::size_t size_ = 0;
  std::vector<Point2> points_;
  std::vector<double> matrix_;  // row-major size_ x size_, metric only
};

/// Final (or current) ranges, one per arrival.
using RangeAssignment = std::vector<double>;

/// Per-arrival history. snapshots[j] holds j + 1 ranges; increments[j] is
/// the cost paid at arrival j for the exponent the trace was built with.
struct AssignmentTrace {
  double alpha = 2.0;
  std::vector<RangeAssignment> snapshots;
  std::vector<double> increments;

  const RangeAssignment& final_ranges() const { return snapshots.back(); }
  double total_cost() const;
};

void require_alpha(double alpha);

/// Sum of r^alpha. Throws std::invalid_argument for alpha <= 1.
double cost_alpha(std::span<const double> ranges, double alpha);

/// dist <= r up to the shared coverage slack.
bool within_range(double dist, double range);

/// Every arrival with index < prefix_len is reachable from the source in
/// the directed graph with edges (i, j) whenever j is within range of i.
bool is_broadcast_feasible(const Instance& instance, std::size_t prefix_len,
                           std::span<const double> ranges);

/// Every arrival j >= 1 is within range of some earlier arrival.
bool is_priority_feasible(const Instance& instance,
                          std::span<const double> ranges);

/// Ascending distinct distances from i to every later arrival.
std::vector<double> candidate_ranges(const Instance& instance, std::size_t i);

/// First broken trace invariant, or nullopt. Checks snapshot shapes,
/// monotonicity, cost bookkeeping, broadcast feasibility after every
/// arrival and, when requested, that at most one range changes per arrival.
std::optional<std::string> find_trace_violation(const Instance& instance,
                                                const AssignmentTrace& trace,
                                                bool single_touch);

}  // namespace rangeassign
