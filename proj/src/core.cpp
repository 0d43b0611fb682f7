#include "rangeassign/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rangeassign {

const char* to_string(Space space) {
  switch (space) {
    case Space::Line:
      return "line";
    case Space::Plane:
      return "plane";
    case Space::Metric:
      return "metric";
  }
  return "?";
}

Space parse_space(const std::string& name) {
  if (name == "line") return Space::Line;
  if (name == "plane") return Space::Plane;
  if (name == "metric") return Space::Metric;
  throw std::invalid_argument("unknown space '" + name + "'");
}

double euclidean(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Instance Instance::line(std::vector<double> coordinates) {
  Instance instance;
  instance.space_ = Space::Line;
  instance.size_ = coordinates.size();
  instance.points_.reserve(coordinates.size());
  for (double c : coordinates) instance.points_.push_back({c, 0.0});
  instance.validate();
  return instance;
}

Instance Instance::plane(std::vector<Point2> points) {
  Instance instance;
  instance.space_ = Space::Plane;
  instance.size_ = points.size();
  instance.points_ = std::move(points);
  instance.validate();
  return instance;
}

Instance Instance::metric(std::vector<std::vector<double>> matrix) {
  Instance instance;
  instance.space_ = Space::Metric;
  instance.size_ = matrix.size();
  instance.matrix_.reserve(matrix.size() * matrix.size());
  for (const auto& row : matrix) {
    if (row.size() != matrix.size()) {
      throw std::invalid_argument("metric matrix is not square");
    }
    instance.matrix_.insert(instance.matrix_.end(), row.begin(), row.end());
  }
  instance.validate();
  return instance;
}

void Instance::validate() const {
  for (const auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
  }
  if (space_ == Space::Metric) {
    for (double d : matrix_) {
      if (!std::isfinite(d) || d < 0.0) {
        throw std::invalid_argument("metric distances must be finite and >= 0");
      }
    }
    for (std::size_t i = 0; i < size_; ++i) {
      if (matrix_[i * size_ + i] != 0.0) {
        throw std::invalid_argument("metric matrix diagonal must be zero");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (matrix_[i * size_ + j] != matrix_[j * size_ + i]) {
          throw std::invalid_argument("metric matrix is not symmetric");
        }
      }
    }
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        for (std::size_t k = 0; k < size_; ++k) {
          if (matrix_[i * size_ + j] >
              matrix_[i * size_ + k] + matrix_[k * size_ + j] + kMetricTolerance) {
            std::ostringstream msg;
            msg << "triangle inequality violated at (" << i << ", " << j
                << ") via " << k;
            throw std::invalid_argument(msg.str());
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(dist(i, j) > 0.0)) {
        std::ostringstream msg;
        msg << "arrivals " << j << " and " << i << " coincide";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

double Instance::dist(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) {
    throw std::out_of_range("arrival index out of range");
  }
  if (space_ == Space::Metric) return matrix_[i * size_ + j];
  if (space_ == Space::Line) return std::abs(points_[i].x - points_[j].x);
  return euclidean(points_[i], points_[j]);
}

const Point2& Instance::point(std::size_t i) const {
  if (space_ == Space::Metric) {
    throw std::logic_error("metric instances have no coordinates");
  }
  return points_.at(i);
}

Instance Instance::prefix(std::size_t count) const {
  if (count > size_) throw std::out_of_range("prefix longer than instance");
  Instance out;
  out.space_ = space_;
  out.size_ = count;
  if (space_ == Space::Metric) {
    out.matrix_.reserve(count * count);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        out.matrix_.push_back(matrix_[i * size_ + j]);
      }
    }
  } else {
    out.points_.assign(points_.begin(), points_.begin() + count);
  }
  return out;
}

double AssignmentTrace::total_cost() const {
  if (snapshots.empty()) return 0.0;
  return cost_alpha(snapshots.back(), alpha);
}

void require_alpha(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be a finite value > 1");
  }
}

double cost_alpha(std::span<const double> ranges, double alpha) {
  require_alpha(alpha);
  double total = 0.0;
  for (double r : ranges) {
    if (r < 0.0) throw std::invalid_argument("ranges must be nonnegative");
    total += std::pow(r, alpha);
  }
  return total;
}

bool within_range(double dist, double range) {
  return dist <= range * (1.0 + 1e-12) + 1e-12;
}

bool is_broadcast_feasible(const Instance& instance, std::size_t prefix_len,
                           std::span<const double> ranges) {
  if (prefix_len <= 1) return true;
  if (prefix_len > instance.size() || ranges.size() < prefix_len) {
    throw std::invalid_argument("assignment does not cover the prefix");
  }
  std::vector<char> reached(prefix_len, 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < prefix_len; ++v) {
      if (!reached[v] && within_range(instance.dist(u, v), ranges[u])) {
        reached[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == prefix_len;
}

bool is_priority_feasible(const Instance& instance,
                          std::span<const double> ranges) {
  if (ranges.size() != instance.size()) {
    throw std::invalid_argument("assignment size does not match instance");
  }
  for (std::size_t j = 1; j < instance.size(); ++j) {
    bool covered = false;
    for (std::size_t i = 0; i < j && !covered; ++i) {
      covered = within_range(instance.dist(i, j), ranges[i]);
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<double> candidate_ranges(const Instance& instance, std::size_t i) {
  if (i >= instance.size()) throw std::out_of_range("arrival index out of range");
  std::vector<double> radii;
  for (std::size_t j = i + 1; j < instance.size(); ++j) {
    radii.push_back(instance.dist(i, j));
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::optional<std::string> find_trace_violation(const Instance& instance,
                                                const AssignmentTrace& trace,
                                                bool single_touch) {
  const auto fail = [](std::size_t j, const std::string& what) {
    std::ostringstream msg;
    msg << "arrival " << j << ": " << what;
    return std::optional<std::string>(msg.str());
  };
  if (trace.snapshots.size() != instance.size() ||
      trace.increments.size() != instance.size()) {
    return std::string("trace length does not match instance");
  }
  double previous_cost = 0.0;
  for (std::size_t j = 0; j < trace.snapshots.size(); ++j) {
    const auto& snap = trace.snapshots[j];
    if (snap.size() != j + 1) return fail(j, "snapshot has wrong length");
    if (j > 0 && snap[j] != 0.0) return fail(j, "new arrival does not start at range 0");
    std::size_t touched = 0;
    for (std::size_t i = 0; i < snap.size(); ++i) {
      if (snap[i] < 0.0) return fail(j, "negative range");
      if (j > 0 && i < j) {
        const double before = trace.snapshots[j - 1][i];
        if (snap[i] < before) return fail(j, "range decreased");
        if (snap[i] != before) ++touched;
      }
    }
    if (single_touch && touched > 1) return fail(j, "more than one range changed");
    const double cost = cost_alpha(snap, trace.alpha);
    const double expected = previous_cost + trace.increments[j];
    if (std::abs(cost - expected) > 1e-9 * std::max(1.0, std::abs(cost))) {
      return fail(j, "cost increment bookkeeping mismatch");
    }
    previous_cost = cost;
    if (!is_broadcast_feasible(instance, j + 1, snap)) {
      return fail(j, "not broadcast feasible");
    }
  }
  return std::nullopt;
}

}  // namespace rangeassign
