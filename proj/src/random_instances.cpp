#include "rangeassign/random_instances.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rangeassign {

RandomFamily RandomFamily::line_nonnegative(std::size_t n) {
  return {Space::Line, n, 0.0, 1.0, 0.0};
}

RandomFamily RandomFamily::line_symmetric(std::size_t n) {
  return {Space::Line, n, -1.0, 1.0, 0.0};
}

RandomFamily RandomFamily::unit_square(std::size_t n) {
  return {Space::Plane, n, 0.0, 1.0, 0.5};
}

RandomFamily RandomFamily::random_metric(std::size_t n) {
  return {Space::Metric, n, 0.1, 1.0, 0.0};
}

Instance random_instance(const RandomFamily& family, std::uint64_t seed) {
  if (family.n == 0) throw std::invalid_argument("random family: n must be >= 1");
  if (!(family.lo < family.hi)) throw std::invalid_argument("random family: lo must be < hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(family.lo, family.hi);

  if (family.space == Space::Metric) {
    if (family.lo < 0.0) throw std::invalid_argument("random family: metric weights must be >= 0");
    const std::size_t n = family.n;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = uniform(rng);
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
    return Instance::metric(std::move(d));
  }

  if (family.space == Space::Line) {
    std::vector<double> coords{family.source};
    while (coords.size() < family.n) {
      const double c = uniform(rng);
      if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
    }
    return Instance::line(std::move(coords));
  }

  std::vector<Point2> points{{family.source, family.source}};
  while (points.size() < family.n) {
    const Point2 p{uniform(rng), uniform(rng)};
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  return Instance::plane(std::move(points));
}

}  // namespace rangeassign
