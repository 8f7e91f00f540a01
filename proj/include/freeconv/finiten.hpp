#pragma once

#include "freeconv/group_algebra.hpp"
#include "freeconv/models.hpp"
#include "freeconv/permutation.hpp"
#include "freeconv/triplets.hpp"

namespace freeconv {

// Degree cap for the exact finite-N engine (7! = 5040 basis elements).
inline constexpr int kFinitenCap = 7;

// The generator of expected trace products in C[S_n]: a constant multiple of
// the unit, -alpha on every transposition, and Weingarten-weighted jump
// contributions on every permutation, graded by support size. Throws
// std::domain_error for the haar model (no generator exists).
GroupAlgebraElement ltilde(const UnitaryModel& m, int n);

// E[prod over cycles c of sigma of Tr(U^{#c})] = sum_tau coeff_tau(e^{Ltilde}
// * sigma) N^{#cycles(tau)}, with the exponential applied by scaled adaptive
// Taylor summation. Haar model: every positive-degree trace-power product
// averages to zero (phase invariance of the Haar measure), so this returns 0.
cd exact_trace_moments(const UnitaryModel& m, const Permutation& sigma);

// N -> infinity limit of the generator action:
// T(sigma) = n Lk_1 sigma + sum over cycles c below sigma of Lk_{|c|} c sigma.
class LimitOperatorT {
 public:
  LimitOperatorT(const MultFreeTriplet& t, int n);

  int degree() const { return n_; }
  cd lk1() const { return lk1_; }

  GroupAlgebraElement apply(const GroupAlgebraElement& v) const;
  // The strictly norm-decreasing part (drops the n Lk_1 diagonal); nilpotent.
  GroupAlgebraElement apply_nilpotent(const GroupAlgebraElement& v) const;

 private:
  int n_;
  cd lk1_;
  std::vector<cd> cycle_weight_;  // Lk_m indexed by m
};

LimitOperatorT limit_operator_T(const MultFreeTriplet& t, int n);

// phi(e^T sigma) with phi sending every permutation to 1; equals the product
// of the moments m_{#c}(mu) over the cycles of sigma.
cd limit_trace_moments(const MultFreeTriplet& t, const Permutation& sigma);

}  // namespace freeconv
