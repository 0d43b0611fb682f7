#include "rangeassign/set_system.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rangeassign {

namespace {

double tightness_slack(double bound) { return 1e-9 * std::max(1.0, bound); }

}  // namespace

bool set_contains(const Instance& instance, const CoverSet& set, std::size_t j) {
  return j > set.center && within_range(instance.dist(set.center, j), set.radius);
}

std::vector<CoverSet> all_cover_sets(const Instance& instance) {
  std::vector<CoverSet> sets;
  for (std::size_t i = 0; i + 1 < instance.size(); ++i) {
    for (double r : candidate_ranges(instance, i)) sets.push_back({i, r});
  }
  return sets;
}

double DualSolution::total() const { return std::accumulate(y.begin(), y.end(), 0.0); }

double dual_load(const Instance& instance, const DualSolution& dual,
                 const CoverSet& set, std::size_t last_arrival) {
  double load = 0.0;
  const std::size_t end = std::min(last_arrival + 1, dual.y.size());
  for (std::size_t k = set.center + 1; k < end; ++k) {
    if (set_contains(instance, set, k)) load += dual.y[k];
  }
  return load;
}

bool is_tight(double load, double radius, double alpha) {
  const double bound = std::pow(radius, alpha);
  return std::abs(load - bound) <= tightness_slack(bound);
}

std::optional<double> max_tight_radius(const Instance& instance, double alpha,
                                       const DualSolution& dual,
                                       std::size_t center,
                                       std::size_t last_arrival) {
  std::optional<double> best;
  for (std::size_t k = center + 1; k <= last_arrival && k < instance.size(); ++k) {
    const double r = instance.dist(center, k);
    if (best && r <= *best) continue;
    if (is_tight(dual_load(instance, dual, {center, r}, last_arrival), r, alpha)) best = r;
  }
  return best;
}

bool is_dual_feasible(const Instance& instance, double alpha,
                      const DualSolution& dual, std::size_t prefix_len) {
  if (prefix_len > instance.size()) throw std::invalid_argument("prefix longer than instance");
  if (prefix_len == 0) return true;
  for (std::size_t j = 0; j < std::min(prefix_len, dual.y.size()); ++j) {
    if (dual.y[j] < 0.0) return false;
  }
  const std::size_t last = prefix_len - 1;
  for (const auto& set : all_cover_sets(instance)) {
    if (set.center >= last) continue;
    const double bound = std::pow(set.radius, alpha);
    if (dual_load(instance, dual, set, last) > bound + tightness_slack(bound)) return false;
  }
  return true;
}

}  // namespace rangeassign
