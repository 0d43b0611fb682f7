#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rangeassign/bounds.hpp"
#include "rangeassign/core.hpp"

namespace rangeassign::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvariant = 2, kSizeLimit = 3 };

struct GeneratorParams {
  double alpha = 2.0;
  double epsilon = 1e-3;
  double delta = 0.01;
  double x = 1.0;
  int rounds = 3;
  std::uint64_t seed = 1;
  std::size_t n = 10;
  Space space = Space::Plane;
  UniversalBranch branch = UniversalBranch::F1;
};

/// Generators: nn-lb-1d, nn-lb-2d, universal-1d, recursive-squares, random.
/// Throws std::invalid_argument naming the offending flag.
Instance generate_named(const std::string& generator, const GeneratorParams& params);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rangeassign::cli
