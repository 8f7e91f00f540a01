#pragma once

// Non-crossing partitions of {1..n}, the block-to-cycle bijection onto the
// geodesic interval below the long cycle (blocks become cycles in increasing
// order), and Kreweras complementation relative to a top element.

#include <utility>
#include <vector>

#include "freeconv/permutation.hpp"

namespace freeconv {

/// Degree ceiling for full enumeration (Catalan(12) = 208012).
inline constexpr int kNoncrossingCap = 12;

struct NoncrossingPartition {
  int n = 0;
  /// Disjoint blocks covering {1..n}; each ascending, sorted by least element.
  std::vector<std::vector<int>> blocks;

  bool operator==(const NoncrossingPartition& o) const = default;
};

/// Canonicalize (sort within and across blocks) and validate: disjoint
/// nonempty blocks covering {1..n} with no crossing. Throws on violation.
NoncrossingPartition make_noncrossing(int n, std::vector<std::vector<int>> blocks);

/// Crossing test on canonical blocks: some i<j<k<l with {i,k} and {j,l} split
/// across two blocks.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks);

/// Refinement order: every block of a is contained in a block of b.
bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b);

NoncrossingPartition discrete_partition(int n);  // 0_n: all singletons
NoncrossingPartition full_partition(int n);      // 1_n: one block

/// Block-to-cycle map: each block {i1 < i2 < ... < ik} becomes the cycle
/// (i1 i2 ... ik). Image is exactly the geodesic interval below (1 2 ... n).
Permutation biane(const NoncrossingPartition& p);

/// Inverse direction: read the cycles of a permutation as blocks. The result
/// is a valid noncrossing partition when s lies below the long cycle.
NoncrossingPartition partition_from_cycles(const Permutation& s);

/// All of NC(n), each paired with its block-to-cycle image. Sorted by the
/// image's one-line notation (deterministic). 1 <= n <= kNoncrossingCap.
std::vector<std::pair<NoncrossingPartition, Permutation>> enumerate_noncrossing(int n);

/// Kreweras complement of pi relative to top (pi must refine top):
/// the cycles of biane(pi)^{-1} * biane(top). Order-reversing bijection of
/// the interval below top.
NoncrossingPartition kreweras(const NoncrossingPartition& pi, const NoncrossingPartition& top);

}  // namespace freeconv
