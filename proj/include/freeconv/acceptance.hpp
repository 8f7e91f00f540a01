#pragma once

// Release gate: ten end-to-end checks, each exercising a different seam of
// the library (combinatorics, Weingarten inversion, the two moment engines,
// the commuting diagrams, finite-N convergence, limit theorems, Monte Carlo
// against the exact engine, and cross-thread reproducibility). Every
// tolerance is pinned here rather than configurable; a red criterion is a
// finding, not a knob to turn.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace freeconv::acceptance {

struct Options {
  bool full = false;           // larger Monte Carlo tier (slower)
  std::uint64_t seed = 1;      // master seed for every randomized check
  int threads = 0;             // 0 keeps the ambient OpenMP setting
};

struct CriterionResult {
  std::string key;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs all ten criteria in order. When live is non-null, one
/// [PASS]/[FAIL] line per criterion is written as it completes.
std::vector<CriterionResult> run_all(const Options& opt, std::ostream* live);

}  // namespace freeconv::acceptance
