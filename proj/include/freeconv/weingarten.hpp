#pragma once

#include <vector>

#include <Eigen/Dense>

#include "freeconv/group_algebra.hpp"

namespace freeconv {

using Matrix = Eigen::MatrixXcd;

// Weingarten data for one (n, N): class values of the central (pseudo-)inverse
// of Phi(Id^{tensor n}) = sum_sigma N^{#cycles(sigma)} sigma.
struct WeingartenTable {
  int n = 0;
  int N = 0;
  bool pseudo = false;     // true when N < n (inverse taken blockwise in the center)
  int zeroed = 0;          // spectral directions dropped by the pseudo-inverse
  double threshold = 0.0;  // relative eigenvalue cutoff that was applied
  std::vector<double> class_values;

  double value(const Permutation& p) const;
  GroupAlgebraElement element() const;
};

// Cached per (n, N); concurrent readers always see complete entries.
const WeingartenTable& weingarten_table(int n, int N);

// Phi(A_1 tensor ... tensor A_n): coefficient of sigma is the product over
// cycles (i_1 ... i_k) of sigma of Tr(A_{i_1} ... A_{i_k}).
GroupAlgebraElement phi_of_tensor(const std::vector<Matrix>& mats);

GroupAlgebraElement wg_element(int n, int N);

// E(A) = Phi(A) * Wg; represents the Haar average of g^{tensor n} A g*^{tensor n}.
GroupAlgebraElement conditional_expectation(const std::vector<Matrix>& mats);

// Test-scale helpers that materialize endomorphisms of (C^N)^{tensor n}.
Matrix rho_matrix(const Permutation& sigma, int N);
Matrix represent(const GroupAlgebraElement& x, int N);  // d rho(x)
// Coefficient extraction Phi(M) for an arbitrary endomorphism M:
// coefficient of sigma is Tr(M rho(sigma^{-1})).
GroupAlgebraElement phi_of_endomorphism(const Matrix& m, int n, int N);

}  // namespace freeconv
