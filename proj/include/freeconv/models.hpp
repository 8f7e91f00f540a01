#pragma once

#include "freeconv/measures.hpp"
#include "freeconv/triplets.hpp"

namespace freeconv {

// Conjugate-invariant infinitely divisible Hermitian model: drift eta I_N,
// Gaussian covariance a/(N+1) on traceless directions and a on the normalized
// identity, rank-one jumps x uu* at total rate N * jump_law(R).
struct HermitianModel {
  int N = 1;
  double eta = 0.0;
  double a = 0.0;
  AtomicMeasure jump_law = AtomicMeasure::zero(Space::kRealLine);  // base measure; mass scales by N

  HermitianModel() = default;
  HermitianModel(int N, double eta, double a, AtomicMeasure jump_law);
};

// Unitary counterpart: drift angle y0, Gaussian covariance alpha on traceless
// directions and beta on the identity direction, jump factors
// h diag(zeta,1,...,1) h* at total rate N * jump_law(U).
struct UnitaryModel {
  int N = 1;
  double y0 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  AtomicMeasure jump_law = AtomicMeasure::zero(Space::kCircle);
  bool haar = false;

  UnitaryModel() = default;
  UnitaryModel(int N, double y0, double alpha, double beta, AtomicMeasure jump_law,
               bool haar = false);
};

// Model constructors from triplets: alpha = b/(N+1), beta = b.
UnitaryModel gamma_n(const MultFreeTriplet& t, int N);
HermitianModel pi_n(const AddFreeTriplet& t, int N);

// Triplet-level stochastic exponential: wraps the drift, pushes jumps through
// x -> e^{ix} (atoms at 1 dropped), covariance passes through.
UnitaryModel stochastic_exponential(const HermitianModel& h);

}  // namespace freeconv
