#pragma once

// Simple chains: strictly increasing sequences s_0 < s_1 < ... < s_l in the
// geodesic order whose consecutive quotients s_{i-1}^{-1} s_i are single
// nontrivial cycles. Chains ending at sigma are the summation skeleton of the
// moment formula; the weighted enumeration is also available as a
// length-indexed dynamic program over the down-set of sigma.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "freeconv/permutation.hpp"

namespace freeconv {

/// Degree ceiling for chain work (8! = 40320 group elements).
inline constexpr int kChainDegreeCap = 8;

struct SimpleChain {
  std::vector<Permutation> steps;  // s_0, ..., s_l
  int length() const { return static_cast<int>(steps.size()) - 1; }
};

/// The down-set {tau : tau <= sigma} with its single-cycle predecessor
/// structure. An edge (pred, m) at element tau records a predecessor
/// pred = c * tau with c an m-cycle, i.e. a chain step pred < tau whose
/// quotient is a single m-cycle.
struct IntervalPoset {
  std::vector<Permutation> elements;  // sorted by one-line notation
  std::vector<std::vector<std::pair<int, int>>> preds;  // per element: (pred index, m)
  int sigma_index = -1;
  int index_of(const Permutation& p) const;
};

IntervalPoset interval_below(const Permutation& sigma);

/// Cached variant (the structure depends only on sigma, not on any weights).
const IntervalPoset& interval_below_cached(const Permutation& sigma);

/// Stream every simple chain ending at sigma, sorted lexicographically on the
/// concatenated one-line notations of the chain elements.
void for_each_simple_chain(const Permutation& sigma,
                           const std::function<void(const SimpleChain&)>& fn);

std::vector<SimpleChain> simple_chains_ending_at(const Permutation& sigma);

/// Chain count by dynamic program; equals the enumeration length.
std::uint64_t count_simple_chains(const Permutation& sigma);

/// G[l] = sum over simple chains of length l ending at sigma of the product
/// of step weights w_m (m the quotient cycle length). cycle_weight[m] holds
/// w_m for 2 <= m <= degree; entries below index 2 are ignored. G[0] = 1.
std::vector<std::complex<double>> chain_length_weights(
    const Permutation& sigma, const std::vector<std::complex<double>>& cycle_weight);

}  // namespace freeconv
