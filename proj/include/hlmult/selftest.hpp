#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hlmult/sym_series.hpp"

namespace hlm {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

enum class Depth { quick, full };

/// Runs the invariant suite. `progress` is called after every check.
std::vector<CheckResult> run_selftest(Depth depth,
                                      const std::function<void(const CheckResult&)>& progress = {});

enum class OmegaFamily { semisimple, nilpotent, power };

/// Ω rebuilt to T^N as Exp of the H-family of the given kind.
SymSeries reconstruct_omega(OmegaFamily family, int g, int k, int truncation);

}  // namespace hlm
