#include "rangeassign/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace rangeassign {

InstanceTooLarge::InstanceTooLarge(std::size_t n, std::size_t limit)
    : std::runtime_error("instance too large: n=" + std::to_string(n) +
                         " exceeds the exact solver limit of " + std::to_string(limit)),
      n_(n),
      limit_(limit) {}

namespace {

// Element j >= 1 lives in bit j - 1.
std::uint32_t member_mask(const Instance& instance, const CoverSet& set) {
  std::uint32_t mask = 0;
  for (std::size_t j = set.center + 1; j < instance.size(); ++j) {
    if (set_contains(instance, set, j)) mask |= std::uint32_t{1} << (j - 1);
  }
  return mask;
}

struct WeightedSet {
  CoverSet set;
  std::uint32_t mask = 0;
  double cost = 0.0;
};

RangeAssignment ranges_from_cover(std::size_t n, const std::vector<CoverSet>& cover) {
  RangeAssignment ranges(n, 0.0);
  for (const auto& s : cover) ranges[s.center] = std::max(ranges[s.center], s.radius);
  return ranges;
}

constexpr double kPositiveDual = 1e-12;

}  // namespace

OracleResult solve_optimal(const Instance& instance, double alpha) {
  require_alpha(alpha);
  const std::size_t n = instance.size();
  if (n > kExactSolverLimit) throw InstanceTooLarge(n, kExactSolverLimit);
  OracleResult result;
  result.ranges.assign(n, 0.0);
  if (n <= 1) return result;

  const std::size_t elements = n - 1;
  const std::uint32_t full = (std::uint32_t{1} << elements) - 1;

  // by_element[e]: the sets containing element e + 1.
  std::vector<std::vector<WeightedSet>> by_element(elements);
  for (const auto& set : all_cover_sets(instance)) {
    const WeightedSet ws{set, member_mask(instance, set), std::pow(set.radius, alpha)};
    for (std::size_t e = 0; e < elements; ++e) {
      if (ws.mask & (std::uint32_t{1} << e)) by_element[e].push_back(ws);
    }
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(std::size_t{full} + 1, inf);
  std::vector<std::uint32_t> parent(std::size_t{full} + 1, 0);
  std::vector<const WeightedSet*> via(std::size_t{full} + 1, nullptr);
  best[0] = 0.0;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (best[mask] == inf) continue;
    ++result.states_expanded;
    const auto lowest = static_cast<std::size_t>(std::countr_one(mask));
    for (const auto& ws : by_element[lowest]) {
      const std::uint32_t next = mask | ws.mask;
      const double cost = best[mask] + ws.cost;
      if (cost < best[next]) {
        best[next] = cost;
        parent[next] = mask;
        via[next] = &ws;
      }
    }
  }

  for (std::uint32_t mask = full; mask != 0; mask = parent[mask]) {
    result.cover.push_back(via[mask]->set);
  }
  std::sort(result.cover.begin(), result.cover.end(),
            [](const CoverSet& a, const CoverSet& b) { return a.center < b.center; });
  result.ranges = ranges_from_cover(n, result.cover);
  result.cost = cost_alpha(result.ranges, alpha);
  return result;
}

DualSolution maximal_dual(const Instance& instance, double alpha) {
  require_alpha(alpha);
  DualSolution dual;
  dual.y.assign(instance.size(), 0.0);
  const auto sets = all_cover_sets(instance);
  for (std::size_t j = 1; j < instance.size(); ++j) {
    double slack = std::numeric_limits<double>::infinity();
    for (const auto& set : sets) {
      if (!set_contains(instance, set, j)) continue;
      slack = std::min(slack, std::pow(set.radius, alpha) -
                                  dual_load(instance, dual, set, instance.size() - 1));
    }
    dual.y[j] = std::max(0.0, slack);
  }
  return dual;
}

std::vector<CoverSet> minimal_tight_cover(const Instance& instance, double alpha,
                                          const DualSolution& dual) {
  require_alpha(alpha);
  const std::size_t n = instance.size();
  if (n <= 1) return {};
  const std::size_t last = n - 1;

  std::vector<std::optional<double>> largest(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    largest[i] = max_tight_radius(instance, alpha, dual, i, last);
  }

  // Per element: the lowest center whose largest tight set holds it.
  std::vector<CoverSet> cover;
  for (std::size_t j = 1; j < n; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < j && !found; ++i) {
      if (!largest[i]) continue;
      const CoverSet set{i, *largest[i]};
      if (set_contains(instance, set, j)) {
        found = true;
        if (std::find(cover.begin(), cover.end(), set) == cover.end()) cover.push_back(set);
      }
    }
    if (!found) {
      throw std::invalid_argument("tight sets do not cover arrival " + std::to_string(j) +
                                  "; dual is not maximal");
    }
  }

  // Drop redundant sets, cheapest first.
  std::stable_sort(cover.begin(), cover.end(), [](const CoverSet& a, const CoverSet& b) {
    return a.radius < b.radius;
  });
  const auto covers_all = [&](const std::vector<CoverSet>& family, std::size_t skip) {
    for (std::size_t j = 1; j < n; ++j) {
      bool hit = false;
      for (std::size_t s = 0; s < family.size() && !hit; ++s) {
        hit = s != skip && set_contains(instance, family[s], j);
      }
      if (!hit) return false;
    }
    return true;
  };
  for (std::size_t s = 0; s < cover.size();) {
    if (covers_all(cover, s)) {
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(s));
    } else {
      ++s;
    }
  }
  std::sort(cover.begin(), cover.end(),
            [](const CoverSet& a, const CoverSet& b) { return a.center < b.center; });
  return cover;
}

ApproxResult approx_5alpha(const Instance& instance, double alpha) {
  require_alpha(alpha);
  ApproxResult result;
  auto& cert = result.certificate;
  result.ranges.assign(instance.size(), 0.0);
  cert.dual = maximal_dual(instance, alpha);
  cert.dual_total = cert.dual.total();
  if (instance.size() <= 1) return result;
  cert.cover = minimal_tight_cover(instance, alpha, cert.dual);

  // Decreasing radius, ties by center index.
  std::vector<CoverSet> order = cert.cover;
  std::stable_sort(order.begin(), order.end(), [](const CoverSet& a, const CoverSet& b) {
    return a.radius > b.radius;
  });

  const auto conflicts = [&](const CoverSet& a, const CoverSet& b) {
    for (std::size_t k = 1; k < instance.size(); ++k) {
      if (cert.dual.y[k] > kPositiveDual && set_contains(instance, a, k) &&
          set_contains(instance, b, k)) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::size_t> chosen;  // positions in `order`
  std::vector<char> clustered(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const bool free = std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
      return conflicts(order[pos], order[c]);
    });
    if (!free) continue;
    std::vector<std::size_t> cluster{order[pos].center};
    clustered[pos] = 1;
    for (std::size_t later = pos + 1; later < order.size(); ++later) {
      if (clustered[later] || !conflicts(order[later], order[pos])) continue;
      const bool blocked = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return conflicts(order[later], order[c]);
      });
      if (blocked) continue;
      cluster.push_back(order[later].center);
      clustered[later] = 1;
    }
    chosen.push_back(pos);
    cert.independent.push_back(order[pos].center);
    const std::size_t earliest = *std::min_element(cluster.begin(), cluster.end());
    result.ranges[earliest] = std::max(result.ranges[earliest], 5.0 * order[pos].radius);
    cert.clusters.push_back(std::move(cluster));
  }

  cert.cost = cost_alpha(result.ranges, alpha);
  cert.bound = std::pow(5.0, alpha) * cert.dual_total;
  return result;
}

}  // namespace rangeassign
