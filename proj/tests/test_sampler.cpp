#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "freeconv/finiten.hpp"
#include "freeconv/models.hpp"
#include "freeconv/parallel.hpp"
#include "freeconv/sampler.hpp"
#include "freeconv/triplets.hpp"

using namespace freeconv;

namespace {

UnitaryModel mixed_unitary(int N) {
  return gamma_n(MultFreeTriplet(0.3, 0.6, AtomicMeasure::circle({{1.9, 0.5}})), N);
}

HermitianModel gaussian_model(int N, double a) {
  return HermitianModel(N, 0.0, a, AtomicMeasure::zero(Space::kRealLine));
}

}  // namespace

TEST_CASE("hermitian draws are exactly hermitian") {
  HermitianModel m(5, 0.4, 0.9, AtomicMeasure::real_line({{1.5, 0.7}}));
  for (std::uint64_t i = 0; i < 4; ++i) {
    Matrix h = sample_hermitian(m, 99, i);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("unitary draws stay on the group") {
  UnitaryModel m = mixed_unitary(6);
  for (std::uint64_t i = 0; i < 4; ++i) {
    Matrix u = sample_unitary(m, 7, i, 50);
    Matrix defect = u.adjoint() * u - Matrix::Identity(6, 6);
    CHECK(defect.cwiseAbs().maxCoeff() <= 1e-10);
  }

  std::mt19937_64 eng(5);
  Matrix h = haar_unitary(4, eng);
  CHECK((h.adjoint() * h - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("draws are reproducible from the seed and sample index") {
  UnitaryModel m = mixed_unitary(4);
  Matrix a = sample_unitary(m, 11, 3, 40);
  Matrix b = sample_unitary(m, 11, 3, 40);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  Matrix c = sample_unitary(m, 11, 4, 40);
  CHECK((a - c).cwiseAbs().maxCoeff() > 0.0);

  HermitianModel hm = gaussian_model(4, 1.0);
  Matrix ha = sample_hermitian(hm, 11, 3);
  Matrix hb = sample_hermitian(hm, 11, 3);
  CHECK((ha - hb).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("estimates do not depend on the thread count") {
  const int ambient = max_threads();
  UnitaryModel m = mixed_unitary(3);
  set_threads(1);
  EmpiricalMoments one = empirical_cycle_products(m, {{1}, {2}, {1, 1}}, 800, 30, 42);
  set_threads(4);
  EmpiricalMoments four = empirical_cycle_products(m, {{1}, {2}, {1, 1}}, 800, 30, 42);
  set_threads(ambient);
  REQUIRE(one.estimates.size() == four.estimates.size());
  for (std::size_t k = 0; k < one.estimates.size(); ++k) {
    CHECK(one.estimates[k] == four.estimates[k]);
    CHECK(one.stderrs[k] == four.stderrs[k]);
  }
}

TEST_CASE("pure drift is deterministic") {
  const double y0 = 0.8;
  UnitaryModel m(4, y0, 0.0, 0.0, AtomicMeasure::zero(Space::kCircle));
  Matrix u = sample_unitary(m, 1, 0, 10);
  CHECK((u - std::polar(1.0, y0) * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-15);

  SampleConfig cfg{m, 50, 10, 3};
  EmpiricalMoments em = empirical_trace_products(cfg, {2});
  CHECK(std::abs(em.estimates[0] - std::exp(cd(0.0, 2.0 * y0))) <= 1e-13);
  CHECK(em.stderrs[0] <= 1e-13);

  auto [coarse, fine] = sample_unitary_coupled(m, 1, 0, 16);
  CHECK((coarse - fine).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("gaussian part has the advertised covariance") {
  const int N = 3;
  const double a = 0.8;
  HermitianModel m = gaussian_model(N, a);
  const std::uint64_t samples = 40000;

  Matrix e11 = Matrix::Zero(N, N);
  e11(0, 0) = 1.0;
  Matrix e12 = Matrix::Zero(N, N);
  e12(0, 1) = e12(1, 0) = 1.0;
  Matrix id = Matrix::Identity(N, N);

  struct Probe {
    Matrix y;
    double target;  // (a/(N+1)) (Tr y^2 + (Tr y)^2)
  };
  const std::vector<Probe> probes = {
      {e11, a / (N + 1) * (1.0 + 1.0)},
      {e12, a / (N + 1) * 2.0},
      {id, a / (N + 1) * (N + N * N)},
  };

  for (const auto& probe : probes) {
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      double v = (probe.y * sample_hermitian(m, 2024, i)).trace().real();
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / samples;
    const double var = sumsq / samples - mean * mean;
    // variance estimator noise ~ var * sqrt(2/n); allow five sigma
    CHECK(std::abs(var - probe.target) <= 5.0 * probe.target * std::sqrt(2.0 / samples));
    CHECK(std::abs(mean) <= 5.0 * std::sqrt(probe.target / samples));
  }
}

TEST_CASE("gaussian spectral moments match the finite-dimension Wick values") {
  const int N = 10;
  const double a = 1.3;
  SampleConfig cfg{gaussian_model(N, a), 30000, 1, 77};
  EmpiricalMoments em = empirical_spectral_moments(cfg, 4);

  // E tr G^2 = a and E tr G^4 = 2 a^2 (N+2)/(N+1) hold exactly at every N
  const double m2 = a;
  const double m4 = 2.0 * a * a * (N + 2.0) / (N + 1.0);
  CHECK(std::abs(em.estimates[1] - cd(m2)) <= 4.0 * em.stderrs[1]);
  CHECK(std::abs(em.estimates[3] - cd(m4)) <= 4.0 * em.stderrs[3]);
  CHECK(std::abs(em.estimates[0]) <= 4.0 * em.stderrs[0]);
}

TEST_CASE("compound poisson hermitian mean is the triplet mean") {
  // mean of tr H: eta plus the uncompensated large-jump mass
  HermitianModel m = pi_n(free_poisson_triplet(1.0), 6);
  SampleConfig cfg{m, 20000, 1, 15};
  EmpiricalMoments em = empirical_spectral_moments(cfg, 1);
  CHECK(std::abs(em.estimates[0] - cd(1.0)) <= 4.0 * em.stderrs[0]);

  HermitianModel big(4, 0.0, 0.0, AtomicMeasure::real_line({{3.0, 0.5}}));
  SampleConfig cfg2{big, 20000, 1, 16};
  EmpiricalMoments em2 = empirical_spectral_moments(cfg2, 1);
  CHECK(std::abs(em2.estimates[0] - cd(1.5)) <= 4.0 * em2.stderrs[0]);
}

TEST_CASE("haar samples have vanishing mean trace") {
  UnitaryModel h = gamma_n(haar_triplet(), 5);
  EmpiricalMoments em = empirical_cycle_products(h, {{1}}, 1000, 1, 8);
  CHECK(std::abs(em.estimates[0]) <= 5.0 * em.stderrs[0]);
  CHECK(em.stderrs[0] > 0.0);
}

TEST_CASE("coupled paths bound the discretization error") {
  UnitaryModel m = gamma_n(free_mult_brownian_triplet(1.0), 3);
  auto [coarse, fine] = empirical_cycle_products_coupled(m, {{1}}, 4000, 100, 21);
  CHECK(coarse.n_samples == 4000);
  // halving the step moves the first moment by far less than the target scale
  CHECK(std::abs(coarse.estimates[0] - fine.estimates[0]) <= 0.02);
  // and both sit near the known limit value e^{-1/2}
  CHECK(std::abs(fine.estimates[0] - cd(std::exp(-0.5))) <=
        4.0 * fine.stderrs[0] + 0.01);
}

TEST_CASE("brownian unitary model reproduces the exact trace expectation") {
  const int N = 4;
  UnitaryModel m = gamma_n(free_mult_brownian_triplet(1.0), N);
  EmpiricalMoments em = empirical_cycle_products(m, {{1}, {2}}, 10000, 200, 33);
  const cd exact1 = exact_trace_moments(m, Permutation(1)) / static_cast<double>(N);
  const cd exact2 =
      exact_trace_moments(m, Permutation::from_cycles(2, {{1, 2}})) / static_cast<double>(N);
  CHECK(std::abs(em.estimates[0] - exact1) <= 4.0 * em.stderrs[0] + 2e-3);
  CHECK(std::abs(em.estimates[1] - exact2) <= 4.0 * em.stderrs[1] + 2e-3);
}

TEST_CASE("identity model spectral moments are exactly one") {
  UnitaryModel m(4, 0.0, 0.0, 0.0, AtomicMeasure::zero(Space::kCircle));
  SampleConfig cfg{m, 20, 5, 1};
  EmpiricalMoments em = empirical_spectral_moments(cfg, 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(em.estimates[static_cast<std::size_t>(k)] - cd(1.0)) <= 1e-12);
    CHECK(em.stderrs[static_cast<std::size_t>(k)] <= 1e-12);
  }
}

TEST_CASE("sampling rejects malformed requests") {
  UnitaryModel m = mixed_unitary(3);
  CHECK_THROWS_AS(empirical_cycle_products(m, {{1}}, 0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cycle_products(m, {{1}}, 10, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cycle_products(m, {{0}}, 10, 10, 1), std::invalid_argument);

  SampleConfig herm{gaussian_model(3, 1.0), 5, 1, 1};
  CHECK_THROWS_AS(sample_unitary(herm), std::invalid_argument);
  SampleConfig unit{m, 5, 10, 1};
  CHECK_THROWS_AS(sample_hermitian(unit), std::invalid_argument);
  CHECK_THROWS_AS(empirical_spectral_moments(unit, 0), std::invalid_argument);
}
