#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "freeconv/models.hpp"
#include "freeconv/weingarten.hpp"  // for the Matrix alias

namespace freeconv {

struct SampleConfig {
  std::variant<HermitianModel, UnitaryModel> model;
  std::uint64_t n_samples = 1;
  int brownian_steps = 200;
  std::uint64_t seed = 0;
};

struct EmpiricalMoments {
  std::vector<cd> estimates;
  std::vector<double> stderrs;
  std::uint64_t n_samples = 0;
};

// One draw of eta I + G + J: G Gaussian with covariance a/(N+1) on traceless
// directions and a on the identity direction, J compound-Poisson rank-one
// jumps at rate N * mass, minus the deterministic small-jump compensator
// (sum of w x over atoms with |x| <= 1) I implied by the generator's triplet
// normalization. Exactly Hermitian by construction.
Matrix sample_hermitian(const HermitianModel& m, std::uint64_t seed, std::uint64_t index);

// One draw of the time-1 unitary Levy process by a multiplicative Lie-Euler
// scheme on the grid {steps cells} united with the Poisson jump times. The
// drift is compensated: y0_eff = y0 - sum of w sin(theta) over jump atoms.
// Haar flag: QR-of-Ginibre draw. Pure drift: returns e^{i y0} I exactly.
Matrix sample_unitary(const UnitaryModel& m, std::uint64_t seed, std::uint64_t index, int steps);

// Coupled pair (coarse, fine): both paths consume the same Brownian segments
// and jumps, the fine path at 2x steps; their difference isolates the
// time-discretization error from Monte Carlo noise.
std::pair<Matrix, Matrix> sample_unitary_coupled(const UnitaryModel& m, std::uint64_t seed,
                                                 std::uint64_t index, int coarse_steps);

Matrix haar_unitary(int N, std::mt19937_64& eng);

// Config-driven single-draw entry points.
Matrix sample_hermitian(const SampleConfig& cfg, std::uint64_t index = 0);
Matrix sample_unitary(const SampleConfig& cfg, std::uint64_t index = 0);

// Mean and stderr of prod_j (1/N) Tr(X^{k_j}) over independent draws.
EmpiricalMoments empirical_trace_products(const SampleConfig& cfg, const std::vector<int>& cycle_type);

// Several cycle-type statistics from one shared stream of unitary samples.
EmpiricalMoments empirical_cycle_products(const UnitaryModel& m,
                                          const std::vector<std::vector<int>>& cycle_types,
                                          std::uint64_t n_samples, int steps, std::uint64_t seed);

// Same statistics evaluated on coupled (coarse, fine) paths; first element of
// the pair is the coarse result, second the fine.
std::pair<EmpiricalMoments, EmpiricalMoments> empirical_cycle_products_coupled(
    const UnitaryModel& m, const std::vector<std::vector<int>>& cycle_types,
    std::uint64_t n_samples, int coarse_steps, std::uint64_t seed);

// Eigenvalue-based moments (1/N) sum lambda_i^k for k = 1..k_max.
EmpiricalMoments empirical_spectral_moments(const SampleConfig& cfg, int k_max);

}  // namespace freeconv
