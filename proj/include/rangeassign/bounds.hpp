#pragma once

#include <cstddef>
#include <string>

#include "rangeassign/core.hpp"
#include "rangeassign/strategies.hpp"

namespace rangeassign {

/// Lower bound c_alpha on the competitive ratio of any online algorithm in
/// one dimension, and the gap factor delta_alpha at which it is attained.
struct UniversalConstants {
  double alpha = 2.0;
  double c = 1.0;
  double delta = 1.0;
  std::size_t iterations = 0;
};

/// The three ratios the adversary can force with gap factor delta:
/// ALG keeps a big disk (F1), grows p_0 for the mirror point, or grows p_1.
double universal_ratio_big_disk(double delta, double alpha);
double universal_ratio_grow_source(double delta, double alpha);
double universal_ratio_grow_second(double delta, double alpha);
double universal_min_ratio(double delta, double alpha);

/// Maximizes universal_min_ratio over delta in (1, 1000]: log-spaced grid
/// of 10^4 points, then golden-section search on the best bracket.
UniversalConstants universal_constants(double alpha, double tol = 1e-10);

/// alpha (2^alpha - 3) / (2^(alpha-1) - alpha). Requires alpha > 2.
double f_star_upper(double alpha);

struct AlphaStar {
  double alpha = 0.0;
  double value = 0.0;
};

/// Minimizer of f_star_upper over (2, 10].
AlphaStar alpha_star(double tol = 1e-9);

enum class UniversalBranch { F1, F2 };

/// F1 = {0, x, delta_alpha x}; F2 appends -delta_alpha x.
Instance gen_1d_universal(double alpha, double x, UniversalBranch branch);

struct AdversaryOutcome {
  Instance instance;
  UniversalBranch branch = UniversalBranch::F1;
  std::string subcase;  // "big-disk", "grow-source", "grow-other", "no-raise"
  double strategy_cost = 0.0;
  double reference_cost = 0.0;
  double ratio = 0.0;
  double delta = 0.0;
};

/// Plays the F1 prefix against the strategy, keeps F1 if some range already
/// reaches delta_alpha x, otherwise appends the mirror point. The reference
/// is the exact optimum of the played instance.
AdversaryOutcome run_adaptive_adversary(const StrategyConfig& strategy, double alpha, double x);

/// {0, delta x, x, -x}; requires 0 < delta < 1 so the points are distinct.
Instance gen_1d_nn_lb(double delta, double x);

/// The 19-point hexagonal construction inside the unit disk.
Instance gen_2d_nn_lb(double epsilon);

/// Source at the center of the unit disk, then for rounds k = 1..t the
/// centers of the 4^k subsquares of side sqrt(2) / 2^k of the inscribed
/// square, row-major within a round.
Instance gen_recursive_squares(int rounds);

/// 6 (1 + ((sqrt 6 - sqrt 2) / 2)^alpha), the limit NN ratio on gen_2d_nn_lb.
double nn_plane_lower_bound(double alpha);

}  // namespace rangeassign
