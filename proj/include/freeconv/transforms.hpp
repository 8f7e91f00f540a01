#pragma once

#include <vector>

#include "freeconv/common.hpp"
#include "freeconv/series.hpp"

namespace freeconv {

// Working truncation order for the transform dictionary. All acceptance
// checks live at order <= 10; rounding noise stays below 1e-9 there.
inline constexpr int kDefaultSeriesOrder = 16;

struct MomentSequence {
  std::vector<cd> m;  // m[k] is the k-th moment; m[0] = 1

  int order() const { return static_cast<int>(m.size()) - 1; }
  cd moment(int k) const;
  bool first_moment_nonzero() const;
};

MomentSequence make_moment_sequence(std::vector<cd> m);
MomentSequence dirac_moments(int order, cd omega);

struct LogCumulantSequence {
  cd lk1;
  std::vector<cd> lk;  // lk[j] is Lkappa_{j+2}

  int order() const { return static_cast<int>(lk.size()) + 1; }
  cd at(int n) const;  // Lkappa_n, n >= 1
};

// M_mu(z) = sum_k m_k z^k at the sequence's own order.
TruncatedSeries m_series_from_moments(const MomentSequence& m);

// S-transform: z S(z)/(1+z) is the compositional inverse of M(z)-1.
// Exact through order K-1 for an order-K moment sequence; requires m_1 != 0.
TruncatedSeries s_from_moments(const MomentSequence& m);

// Inverse of s_from_moments; an order-L series determines moments through L+1.
// Requires S(0) != 0.
MomentSequence moments_from_s(const TruncatedSeries& s);

// Free cumulants via C(z) = M(W(z)) with W the compositional inverse of zM(z).
// Returned vector is indexed by order: kappa[n] for 1 <= n <= K, kappa[0] = 0.
std::vector<cd> free_cumulants_from_moments(const MomentSequence& m);

// Fixed-point inversion M = C(zM); kappa[0] is ignored.
MomentSequence moments_from_free_cumulants(const std::vector<cd>& kappa);

// Free log-cumulants from LS(z) = -z log(m1 S(z)); Lkappa_1 is the principal
// log of m1. Requires S(0) = 1/m1 within 1e-8.
LogCumulantSequence log_cumulants_from_s(const TruncatedSeries& s, cd m1);

// Rebuild S from log-cumulants: S(z) = exp(-Lk1) exp(-sum_{n>=2} Lk_n z^{n-1}).
TruncatedSeries s_from_log_cumulants(const LogCumulantSequence& ls, int order);

// Free multiplicative convolution via S-transform product; needs m_1 != 0 on both sides.
MomentSequence boxtimes(const MomentSequence& a, const MomentSequence& b);

// Free additive convolution via free-cumulant addition.
MomentSequence boxplus(const MomentSequence& a, const MomentSequence& b);

}  // namespace freeconv
