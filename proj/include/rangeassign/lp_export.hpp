#pragma once

#include <iosfwd>

#include "rangeassign/core.hpp"

namespace rangeassign {

enum class LpForm { Primal, Dual };

/// Writes the covering LP (primal) or its packing dual in CPLEX LP text.
/// Primal variables are x_i_k for the k-th candidate radius of center i;
/// dual variables are y_j. Coefficients use 17 significant digits.
void write_lp(std::ostream& out, const Instance& instance, double alpha, LpForm form);

}  // namespace rangeassign
