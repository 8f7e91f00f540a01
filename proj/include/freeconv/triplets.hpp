#pragma once

#include <cstdint>
#include <vector>

#include "freeconv/measures.hpp"
#include "freeconv/permutation.hpp"
#include "freeconv/series.hpp"
#include "freeconv/transforms.hpp"

namespace freeconv {

// Characteristic pair (gamma, sigma) for additive infinite divisibility;
// sigma is a finite measure on the real line.
struct CharPair {
  double gamma = 0.0;
  AtomicMeasure sigma = AtomicMeasure::zero(Space::kRealLine);
};

// (eta, a, rho): drift, Gaussian weight, finite atomic Levy measure with no
// atom at 0. The classical and free variants carry identical data; the types
// stay separate so the homomorphisms below have honest signatures.
struct AddClassicalTriplet {
  double eta = 0.0;
  double a = 0.0;
  AtomicMeasure levy = AtomicMeasure::zero(Space::kRealLine);

  AddClassicalTriplet() = default;
  AddClassicalTriplet(double eta, double a, AtomicMeasure levy);
};

struct AddFreeTriplet {
  double eta = 0.0;
  double a = 0.0;
  AtomicMeasure levy = AtomicMeasure::zero(Space::kRealLine);

  AddFreeTriplet() = default;
  AddFreeTriplet(double eta, double a, AtomicMeasure levy);
};

// Haar factor lambda_m: the circle's idempotents. m = 1 is trivial; the
// infinite one is the Haar measure itself.
struct Idempotent {
  bool is_infinite = false;
  std::uint64_t m = 1;

  static Idempotent trivial() { return {false, 1}; }
  static Idempotent infinite() { return {true, 1}; }
  static Idempotent finite(std::uint64_t m);
  bool divides(long long k) const;
  bool operator==(const Idempotent& o) const;
};

Idempotent idempotent_product(const Idempotent& a, const Idempotent& b);

// (omega, b, upsilon, lambda_m) with omega stored as a principal angle so its
// logarithm is unambiguous per instance.
struct MultClassicalTriplet {
  double omega_angle = 0.0;
  double b = 0.0;
  AtomicMeasure levy = AtomicMeasure::zero(Space::kCircle);
  Idempotent idempotent = Idempotent::trivial();

  MultClassicalTriplet() = default;
  MultClassicalTriplet(double omega_angle, double b, AtomicMeasure levy,
                       Idempotent idempotent = Idempotent::trivial());
};

// (omega, b, upsilon) plus the haar flag for the one absorbing law outside
// the moment-invertible class. When haar is set the other fields are zeroed.
struct MultFreeTriplet {
  double omega_angle = 0.0;
  double b = 0.0;
  AtomicMeasure levy = AtomicMeasure::zero(Space::kCircle);
  bool haar = false;

  MultFreeTriplet() = default;
  MultFreeTriplet(double omega_angle, double b, AtomicMeasure levy, bool haar = false);
};

// --- pair <-> triplet -------------------------------------------------------

AddClassicalTriplet pair_to_triplet(const CharPair& pair);
CharPair triplet_to_pair(const AddClassicalTriplet& t);

// --- the four homomorphisms -------------------------------------------------

AddFreeTriplet lambda_map(const AddClassicalTriplet& t);
MultClassicalTriplet estar_map(const AddClassicalTriplet& t);
MultFreeTriplet eboxplus_map(const AddFreeTriplet& t);
MultClassicalTriplet gamma_map(const MultFreeTriplet& t);

// gamma_map(eboxplus_map(lambda_map(t))) == estar_map(t), within 1e-12
// (angles modulo 2 pi).
bool diagram_check(const AddClassicalTriplet& t);

// --- analytic data of a mult-free triplet ------------------------------------

// Lk_1 = i omega_angle - b/2 + sum w (Re zeta - 1);
// Lk_2 = -b + sum w (zeta-1)^2; Lk_n = sum w (zeta-1)^n for n >= 3.
// Throws std::domain_error on the haar flag.
LogCumulantSequence log_cumulants(const MultFreeTriplet& t, int n_max);

// Weighted simple-chain sum: for sigma with cycle lengths c_1,...,c_r this is
// the product m_{c_1} ... m_{c_r}; a single n-cycle gives the n-th moment.
cd moments_from_triplet(const MultFreeTriplet& t, const Permutation& sigma);

// S(z) = omega^{-1} exp(b/2 + b z + sum_j w_j [i Im zeta_j +
// (1-zeta_j)/(1+z(1-zeta_j))]), geometric part truncated at the given order.
TruncatedSeries s_series_from_triplet(const MultFreeTriplet& t, int order);

// Fourier coefficient hat(mu)(k) = lambda_m-factor * omega^k *
// exp(-b k^2/2 + sum w (zeta^k - 1 - i k Im zeta)).
cd char_function(const MultClassicalTriplet& t, long long k);

struct PowerLimitRow {
  int n;
  double max_moment_error;
};

// base^{boxtimes n} for each requested n via S-transform powering; reports the
// max moment distance to the target over the common order range.
std::vector<PowerLimitRow> boxtimes_power_limit_experiment(const MomentSequence& base,
                                                           const std::vector<int>& powers,
                                                           const MomentSequence& target);

// --- semigroup sums (convolution at triplet level) ---------------------------

AddClassicalTriplet add(const AddClassicalTriplet& s, const AddClassicalTriplet& t);
AddFreeTriplet add(const AddFreeTriplet& s, const AddFreeTriplet& t);
MultClassicalTriplet add(const MultClassicalTriplet& s, const MultClassicalTriplet& t);
MultFreeTriplet add(const MultFreeTriplet& s, const MultFreeTriplet& t);

// --- standard families --------------------------------------------------------

AddClassicalTriplet gaussian_triplet(double a);                 // N_a
AddClassicalTriplet dirac_triplet(double eta);                  // delta_eta
AddClassicalTriplet poisson_triplet(double lambda, const AtomicMeasure& jump_law);
AddFreeTriplet semicircle_triplet(double a);                    // S_a
AddFreeTriplet free_poisson_triplet(double lambda);             // jump law delta_1
AddFreeTriplet free_compound_poisson_triplet(double lambda, const AtomicMeasure& jump_law);
MultFreeTriplet free_mult_brownian_triplet(double b);           // B_b = (1, b, 0)
MultFreeTriplet free_mult_poisson_triplet(double lambda, const AtomicMeasure& jump_law);
MultFreeTriplet dirac_circle_triplet(double angle);
MultFreeTriplet haar_triplet();
MultClassicalTriplet wrapped_gaussian_triplet(double b);        // e_*(N_b) = (1, b, 0)
MultClassicalTriplet mult_poisson_triplet(double lambda, const AtomicMeasure& jump_law);

}  // namespace freeconv
