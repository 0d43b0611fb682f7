#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rangeassign/core.hpp"
#include "rangeassign/set_system.hpp"

namespace rangeassign {

/// Largest instance solve_optimal accepts.
inline constexpr std::size_t kExactSolverLimit = 20;

class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(std::size_t n, std::size_t limit);
  std::size_t size() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

struct OracleResult {
  double cost = 0.0;
  RangeAssignment ranges;
  std::vector<CoverSet> cover;  // at most one set per center
  std::uint64_t states_expanded = 0;
};

/// Minimum cost priority-feasible assignment: every arrival j >= 1 within
/// range of an earlier arrival. This is also the offline incremental
/// optimum, since final ranges can be assigned on arrival.
///
/// Subset DP over bitsets of covered elements {1, ..., n-1}. Each state
/// expands only the sets containing its lowest uncovered element.
OracleResult solve_optimal(const Instance& instance, double alpha);

/// Raise y_1, ..., y_{n-1} in arrival order, each to the largest value the
/// constraints allow given the earlier ones.
DualSolution maximal_dual(const Instance& instance, double alpha);

/// Minimally feasible cover of {1, ..., n-1} by sets tight under `dual`,
/// with at most one set per center. Throws std::invalid_argument when the
/// tight sets do not cover every element (the dual is not maximal).
std::vector<CoverSet> minimal_tight_cover(const Instance& instance, double alpha,
                                          const DualSolution& dual);

struct ApproxCertificate {
  DualSolution dual;
  std::vector<CoverSet> cover;             // the minimal tight cover
  std::vector<std::size_t> independent;    // I, in processing order
  std::vector<std::vector<std::size_t>> clusters;  // C_i for each member of I
  double dual_total = 0.0;
  double cost = 0.0;
  double bound = 0.0;  // 5^alpha * dual_total
};

struct ApproxResult {
  RangeAssignment ranges;
  ApproxCertificate certificate;
};

/// Offline 5^alpha approximation through a maximal dual: select a minimal
/// tight cover, keep a conflict-free subfamily in decreasing radius order,
/// and give the earliest point of each cluster five times the cluster's
/// leading radius.
ApproxResult approx_5alpha(const Instance& instance, double alpha);

}  // namespace rangeassign
