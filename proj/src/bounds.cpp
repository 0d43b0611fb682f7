#include "rangeassign/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "rangeassign/oracle.hpp"

namespace rangeassign {

namespace {

struct Extremum {
  double x = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
Extremum golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  std::size_t iterations = 0;
  while (b - a > tol && iterations < 500) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iterations;
  }
  const double x = (a + b) / 2.0;
  return {x, f(x), iterations};
}

// Log-spaced grid scan over [lo, hi], then golden refinement on the bracket
// around the best grid point.
Extremum grid_then_golden_max(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
  constexpr std::size_t kGrid = 10000;
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(kGrid);
  const auto at = [&](std::size_t k) { return std::exp(log_lo + step * static_cast<double>(k)); };
  std::size_t best = 1;
  double best_value = f(at(1));
  for (std::size_t k = 2; k <= kGrid; ++k) {
    const double v = f(at(k));
    if (v > best_value) {
      best = k;
      best_value = v;
    }
  }
  const double a = at(best - 1);
  const double b = at(std::min(best + 1, kGrid));
  Extremum refined = golden_max(f, a, b, tol);
  refined.iterations += kGrid;
  if (refined.value < best_value) refined = {at(best), best_value, refined.iterations};
  return refined;
}

}  // namespace

double universal_ratio_big_disk(double delta, double alpha) {
  return std::pow(delta, alpha) / (1.0 + std::pow(delta - 1.0, alpha));
}

double universal_ratio_grow_source(double delta, double alpha) {
  return (std::pow(delta, alpha) + std::pow(delta - 1.0, alpha)) / std::pow(delta, alpha);
}

double universal_ratio_grow_second(double delta, double alpha) {
  return (1.0 + std::pow(delta + 1.0, alpha)) / std::pow(delta, alpha);
}

double universal_min_ratio(double delta, double alpha) {
  return std::min({universal_ratio_big_disk(delta, alpha),
                   universal_ratio_grow_source(delta, alpha),
                   universal_ratio_grow_second(delta, alpha)});
}

UniversalConstants universal_constants(double alpha, double tol) {
  require_alpha(alpha);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto objective = [alpha](double delta) { return universal_min_ratio(delta, alpha); };
  // The lower end stays just above 1 where every ratio is well defined.
  const Extremum best = grid_then_golden_max(objective, 1.0 + 1e-9, 1000.0, tol);
  return {alpha, best.value, best.x, best.iterations};
}

double f_star_upper(double alpha) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("f_star_upper requires alpha > 2");
  }
  const double denominator = std::exp2(alpha - 1.0) - alpha;
  if (!(denominator > 0.0)) throw std::invalid_argument("f_star_upper: nonpositive denominator");
  return alpha * (std::exp2(alpha) - 3.0) / denominator;
}

AlphaStar alpha_star(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto negated = [](double alpha) { return -f_star_upper(alpha); };
  const Extremum best = grid_then_golden_max(negated, 2.0 + 1e-6, 10.0, tol);
  return {best.x, -best.value};
}

Instance gen_1d_universal(double alpha, double x, UniversalBranch branch) {
  if (!(x >= 1.0)) throw std::invalid_argument("gen_1d_universal requires x >= 1");
  const double delta = universal_constants(alpha).delta;
  std::vector<double> points{0.0, x, delta * x};
  if (branch == UniversalBranch::F2) points.push_back(-delta * x);
  return Instance::line(std::move(points));
}

AdversaryOutcome run_adaptive_adversary(const StrategyConfig& strategy, double alpha, double x) {
  StrategyConfig config = strategy;
  config.alpha = alpha;
  config.validate();
  if (!(x >= 1.0)) throw std::invalid_argument("adversary requires x >= 1");

  AdversaryOutcome outcome;
  outcome.delta = universal_constants(alpha).delta;
  const double far = outcome.delta * x;
  const Instance f2 = Instance::line({0.0, x, far, -far});
  const Instance f1 = f2.prefix(3);

  const SimulationResult prefix_run = simulate(f1, config);
  const auto& after_p2 = prefix_run.trace.final_ranges();
  const bool big_disk = std::any_of(after_p2.begin(), after_p2.end(), [far](double r) {
    return r >= far * (1.0 - 1e-12);
  });

  SimulationResult run;
  if (big_disk) {
    outcome.branch = UniversalBranch::F1;
    outcome.subcase = "big-disk";
    outcome.instance = f1;
    run = prefix_run;
  } else {
    outcome.branch = UniversalBranch::F2;
    outcome.instance = f2;
    run = simulate(f2, config);
    const StepReport& last = run.steps.back();
    if (last.action != StepAction::Raised) {
      outcome.subcase = "no-raise";
    } else if (last.center == 0) {
      outcome.subcase = "grow-source";
    } else {
      outcome.subcase = "grow-other";
    }
  }
  outcome.strategy_cost = run.total_cost();
  outcome.reference_cost = solve_optimal(outcome.instance, alpha).cost;
  outcome.ratio = outcome.strategy_cost / outcome.reference_cost;
  return outcome;
}

Instance gen_1d_nn_lb(double delta, double x) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("gen_1d_nn_lb requires 0 < delta <= 1");
  if (!(x > 0.0)) throw std::invalid_argument("gen_1d_nn_lb requires x > 0");
  // delta == 1 puts p_1 on top of p_2; Instance validation rejects it.
  return Instance::line({0.0, delta * x, x, -x});
}

Instance gen_2d_nn_lb(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw std::invalid_argument("gen_2d_nn_lb requires 0 < epsilon < 0.1");
  }
  constexpr double pi = std::numbers::pi;
  const auto polar = [](double radius, double angle) {
    return Point2{radius * std::cos(angle), radius * std::sin(angle)};
  };
  std::vector<Point2> points{{0.0, 0.0}};
  for (int k = 0; k < 6; ++k) points.push_back(polar(epsilon, k * pi / 3.0));
  for (int k = 0; k < 6; ++k) points.push_back(polar(1.0, k * pi / 3.0));
  for (int k = 0; k < 6; ++k) points.push_back(polar(1.0, pi / 6.0 - epsilon + k * pi / 3.0));
  return Instance::plane(std::move(points));
}

Instance gen_recursive_squares(int rounds) {
  if (rounds < 1 || rounds > 6) throw std::invalid_argument("gen_recursive_squares requires 1 <= rounds <= 6");
  const double half_side = 1.0 / std::numbers::sqrt2;
  std::vector<Point2> points{{0.0, 0.0}};
  for (int k = 1; k <= rounds; ++k) {
    const int cells = 1 << k;
    const double side = 2.0 * half_side / cells;
    for (int row = 0; row < cells; ++row) {
      for (int col = 0; col < cells; ++col) {
        points.push_back({-half_side + (col + 0.5) * side, half_side - (row + 0.5) * side});
      }
    }
  }
  return Instance::plane(std::move(points));
}

double nn_plane_lower_bound(double alpha) {
  return 6.0 * (1.0 + std::pow((std::sqrt(6.0) - std::sqrt(2.0)) / 2.0, alpha));
}

}  // namespace rangeassign
