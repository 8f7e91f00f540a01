#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "freeconv/measures.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/triplets.hpp"

using namespace freeconv;

namespace {

AddClassicalTriplet random_classical(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> w(0.05, 1.5);
  std::uniform_int_distribution<int> count(0, 3);
  std::vector<Atom> atoms;
  for (int j = count(eng); j > 0; --j) {
    double x = u(eng) * 1.5;
    if (std::abs(x) < 0.05) x = 0.4;
    atoms.push_back({x, w(eng)});
  }
  return {u(eng), std::abs(u(eng)), AtomicMeasure::real_line(atoms)};
}

}  // namespace

TEST_CASE("characteristic pair to triplet on a worked example") {
  CharPair pair;
  pair.gamma = 0.5;
  pair.sigma = AtomicMeasure::real_line({{0.0, 0.7}, {2.0, 0.3}});

  AddClassicalTriplet t = pair_to_triplet(pair);
  CHECK(t.a == doctest::Approx(0.7).epsilon(1e-14));
  REQUIRE(t.levy.atoms().size() == 1);
  // the atom at 2 acquires density (1+x^2)/x^2 = 5/4
  CHECK(t.levy.atoms()[0].location == doctest::Approx(2.0));
  CHECK(t.levy.atoms()[0].weight == doctest::Approx(0.375).epsilon(1e-14));
  // eta = gamma + w x (1_{|x|<=1} - 1/(1+x^2)) = 0.5 - 0.375 * 2 * 0.2
  CHECK(t.eta == doctest::Approx(0.35).epsilon(1e-13));

  CharPair back = triplet_to_pair(t);
  CHECK(back.gamma == doctest::Approx(pair.gamma).epsilon(1e-13));
  CHECK(measure_distance(back.sigma, pair.sigma) <= 1e-13);
}

TEST_CASE("pair and triplet round trips on random data") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    AddClassicalTriplet t = random_classical(seed);
    AddClassicalTriplet t2 = pair_to_triplet(triplet_to_pair(t));
    CHECK(std::abs(t2.eta - t.eta) <= 1e-12);
    CHECK(std::abs(t2.a - t.a) <= 1e-12);
    CHECK(measure_distance(t2.levy, t.levy) <= 1e-12);
  }
}

TEST_CASE("a Levy measure may not charge the excluded point") {
  AtomicMeasure bad = AtomicMeasure::real_line({{0.0, 1.0}});
  CHECK_THROWS_AS(AddClassicalTriplet(0.0, 0.0, bad), std::invalid_argument);
  AtomicMeasure bad_circle = AtomicMeasure::circle({{0.0, 1.0}});
  CHECK_THROWS_AS(MultFreeTriplet(0.0, 0.0, bad_circle), std::invalid_argument);
  CHECK(bad.without_excluded_point().is_zero());
}

TEST_CASE("the additive to free map keeps the data") {
  AddClassicalTriplet t = random_classical(5);
  AddFreeTriplet f = lambda_map(t);
  CHECK(f.eta == t.eta);
  CHECK(f.a == t.a);
  CHECK(f.levy == t.levy);
}

TEST_CASE("wrapping map on a worked example") {
  AddClassicalTriplet t(0.35, 0.7, AtomicMeasure::real_line({{2.0, 0.375}}));
  MultClassicalTriplet w = estar_map(t);
  CHECK(w.b == doctest::Approx(0.7));
  CHECK(w.omega_angle == doctest::Approx(0.35 + 0.375 * std::sin(2.0)).epsilon(1e-13));
  REQUIRE(w.levy.atoms().size() == 1);
  CHECK(w.levy.atoms()[0].location == doctest::Approx(2.0));
  CHECK(w.levy.atoms()[0].weight == doctest::Approx(0.375));
  CHECK(w.idempotent == Idempotent::trivial());

  // a small jump keeps its compensation term: angle = eta + w (sin x - x)
  AddClassicalTriplet small(0.0, 0.0, AtomicMeasure::real_line({{0.5, 1.2}}));
  CHECK(estar_map(small).omega_angle ==
        doctest::Approx(1.2 * (std::sin(0.5) - 0.5)).epsilon(1e-13));

  // a jump of size 2 pi lands on the excluded circle point and is dropped
  AddClassicalTriplet wrap(0.2, 0.0, AtomicMeasure::real_line({{2.0 * kPi, 0.5}}));
  MultClassicalTriplet wrapped = estar_map(wrap);
  CHECK(wrapped.levy.is_zero());
  CHECK(wrapped.omega_angle == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("both wrapping maps share the data transform") {
  AddClassicalTriplet t = random_classical(7);
  MultClassicalTriplet wc = estar_map(t);
  MultFreeTriplet wf = eboxplus_map(lambda_map(t));
  CHECK(wf.omega_angle == doctest::Approx(wc.omega_angle).epsilon(1e-14));
  CHECK(wf.b == wc.b);
  CHECK(measure_distance(wf.levy, wc.levy) == 0.0);
  CHECK_FALSE(wf.haar);
}

TEST_CASE("the free to classical comparison map") {
  MultFreeTriplet t(0.4, 0.9, AtomicMeasure::circle({{1.1, 0.6}}));
  MultClassicalTriplet g = gamma_map(t);
  CHECK(g.omega_angle == t.omega_angle);
  CHECK(g.b == t.b);
  CHECK(g.levy == t.levy);
  CHECK(g.idempotent == Idempotent::trivial());

  MultClassicalTriplet gh = gamma_map(haar_triplet());
  CHECK(gh.idempotent == Idempotent::infinite());
  CHECK(gh.omega_angle == 0.0);
  CHECK(gh.b == 0.0);
  CHECK(gh.levy.is_zero());
}

TEST_CASE("the square of maps commutes on random laws") {
  for (std::uint64_t seed = 100; seed < 200; ++seed) CHECK(diagram_check(random_classical(seed)));
}

TEST_CASE("semigroup sums act componentwise") {
  AddClassicalTriplet s = random_classical(11);
  AddClassicalTriplet t = random_classical(12);
  AddClassicalTriplet st = add(s, t);
  CHECK(st.eta == doctest::Approx(s.eta + t.eta));
  CHECK(st.a == doctest::Approx(s.a + t.a));
  CHECK(measure_distance(st.levy, s.levy + t.levy) == 0.0);

  AddClassicalTriplet ts = add(t, s);
  CHECK(st.eta == ts.eta);
  CHECK(measure_distance(st.levy, ts.levy) == 0.0);
}

TEST_CASE("circle idempotents form the divisibility semilattice") {
  CHECK(Idempotent::finite(1) == Idempotent::trivial());
  CHECK_THROWS_AS(Idempotent::finite(0), std::invalid_argument);
  CHECK(Idempotent::finite(4).divides(8));
  CHECK_FALSE(Idempotent::finite(4).divides(6));
  CHECK(Idempotent::finite(4).divides(0));
  CHECK(Idempotent::infinite().divides(0));
  CHECK_FALSE(Idempotent::infinite().divides(3));

  CHECK(idempotent_product(Idempotent::finite(4), Idempotent::finite(6)) == Idempotent::finite(12));
  CHECK(idempotent_product(Idempotent::infinite(), Idempotent::finite(7)) ==
        Idempotent::infinite());
}

TEST_CASE("haar absorbs under the free multiplicative sum") {
  MultFreeTriplet t(0.3, 0.5, AtomicMeasure::circle({{2.0, 0.7}}));
  MultFreeTriplet sum = add(t, haar_triplet());
  CHECK(sum.haar);
  CHECK(sum.b == 0.0);
  CHECK(sum.levy.is_zero());

  MultFreeTriplet tt = add(t, t);
  CHECK(tt.omega_angle == doctest::Approx(0.6));
  CHECK(tt.b == doctest::Approx(1.0));
  CHECK(tt.levy.atoms()[0].weight == doctest::Approx(1.4));
}

TEST_CASE("standard family triplets carry the advertised fields") {
  AddClassicalTriplet g = gaussian_triplet(1.3);
  CHECK(g.eta == 0.0);
  CHECK(g.a == 1.3);
  CHECK(g.levy.is_zero());

  AddFreeTriplet fp = free_poisson_triplet(2.0);
  CHECK(fp.eta == doctest::Approx(2.0));
  CHECK(fp.a == 0.0);
  REQUIRE(fp.levy.atoms().size() == 1);
  CHECK(fp.levy.atoms()[0].location == doctest::Approx(1.0));
  CHECK(fp.levy.atoms()[0].weight == doctest::Approx(2.0));

  // jumps at the origin are discarded; only small jumps feed the drift
  AddClassicalTriplet p =
      poisson_triplet(2.0, AtomicMeasure::real_line({{0.0, 0.5}, {3.0, 0.25}, {0.5, 1.0}}));
  CHECK(p.a == 0.0);
  CHECK(p.eta == doctest::Approx(2.0 * 0.5 * 1.0).epsilon(1e-14));
  REQUIRE(p.levy.atoms().size() == 2);
  CHECK(p.levy.atoms()[0].weight == doctest::Approx(2.0));   // at 0.5
  CHECK(p.levy.atoms()[1].weight == doctest::Approx(0.5));   // at 3

  MultFreeTriplet b = free_mult_brownian_triplet(0.8);
  CHECK(b.omega_angle == 0.0);
  CHECK(b.b == doctest::Approx(0.8));
  CHECK(b.levy.is_zero());

  MultFreeTriplet mp = free_mult_poisson_triplet(1.5, AtomicMeasure::circle({{0.9, 1.0}}));
  CHECK(mp.omega_angle == doctest::Approx(1.5 * std::sin(0.9)).epsilon(1e-14));
  CHECK(mp.b == 0.0);
  REQUIRE(mp.levy.atoms().size() == 1);
  CHECK(mp.levy.atoms()[0].weight == doctest::Approx(1.5));

  // a jump law charging 1 contributes no jump but keeps its angle term
  MultFreeTriplet mp1 = free_mult_poisson_triplet(2.0, AtomicMeasure::circle({{0.0, 1.0}}));
  CHECK(mp1.levy.is_zero());
  CHECK(mp1.omega_angle == 0.0);
}

TEST_CASE("log-cumulants of a single jump law") {
  // jump at angle pi: zeta - 1 = -2
  const double lam = 0.7;
  MultFreeTriplet t(0.0, 0.0, AtomicMeasure::circle({{kPi, lam}}));
  LogCumulantSequence lk = log_cumulants(t, 6);
  CHECK(std::abs(lk.at(1) - cd(-2.0 * lam)) <= 1e-13);
  for (int n = 2; n <= 6; ++n)
    CHECK(std::abs(lk.at(n) - cd(lam * std::pow(-2.0, n))) <= 1e-12);
}

TEST_CASE("log-cumulants of the free multiplicative Brownian motion") {
  LogCumulantSequence lk = log_cumulants(free_mult_brownian_triplet(0.9), 5);
  CHECK(std::abs(lk.at(1) - cd(-0.45)) <= 1e-15);
  CHECK(std::abs(lk.at(2) - cd(-0.9)) <= 1e-15);
  for (int n = 3; n <= 5; ++n) CHECK(std::abs(lk.at(n)) <= 1e-15);

  CHECK_THROWS_AS(log_cumulants(haar_triplet(), 4), std::domain_error);
  CHECK_THROWS_AS(s_series_from_triplet(haar_triplet(), 4), std::domain_error);
}

TEST_CASE("first moment is the exponential of the first log-cumulant") {
  MultFreeTriplet t(0.6, 0.4, AtomicMeasure::circle({{-1.9, 0.8}, {0.7, 0.3}}));
  cd m1 = moments_from_triplet(t, Permutation(1));
  CHECK(std::abs(m1 - std::exp(log_cumulants(t, 1).at(1))) <= 1e-13);
}

TEST_CASE("Brownian moments in closed form") {
  for (double b : {0.7, 1.3}) {
    MultFreeTriplet t = free_mult_brownian_triplet(b);
    cd m1 = moments_from_triplet(t, Permutation::long_cycle(1));
    cd m2 = moments_from_triplet(t, Permutation::long_cycle(2));
    cd m3 = moments_from_triplet(t, Permutation::long_cycle(3));
    CHECK(std::abs(m1 - cd(std::exp(-b / 2))) <= 1e-13);
    CHECK(std::abs(m2 - cd(std::exp(-b) * (1 - b))) <= 1e-13);
    CHECK(std::abs(m3 - cd(std::exp(-1.5 * b) * (1 - 3 * b + 1.5 * b * b))) <= 1e-13);

    // a product of cycles multiplies the corresponding moments
    cd m21 = moments_from_triplet(t, Permutation::from_cycles(3, {{1, 2}}));
    CHECK(std::abs(m21 - m2 * m1) <= 1e-13);
  }
}

TEST_CASE("S-transform of the Brownian family is an explicit exponential") {
  const double b = 0.6;
  TruncatedSeries s = s_series_from_triplet(free_mult_brownian_triplet(b), 6);
  // S(z) = exp(b/2 + b z): coefficient k is e^{b/2} b^k / k!
  double fact = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    CHECK(std::abs(s.coef(k) - cd(std::exp(b / 2) * std::pow(b, k) / fact)) <= 1e-12);
  }

  TruncatedSeries sd = s_series_from_triplet(dirac_circle_triplet(0.8), 4);
  CHECK(std::abs(sd.coef(0) - std::polar(1.0, -0.8)) <= 1e-14);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(sd.coef(k)) <= 1e-14);
}

TEST_CASE("chain moments agree with the S-transform moments") {
  MultFreeTriplet t(0.3, 0.5, AtomicMeasure::circle({{2.2, 0.4}, {-0.9, 0.9}}));
  MomentSequence via_s = moments_from_s(s_series_from_triplet(t, 12));
  for (int n = 1; n <= 6; ++n) {
    cd chain = moments_from_triplet(t, Permutation::long_cycle(n));
    CHECK(std::abs(chain - via_s.moment(n)) <= 1e-10);
  }
}

TEST_CASE("Fourier coefficients multiply under the classical sum") {
  MultClassicalTriplet s(0.4, 0.3, AtomicMeasure::circle({{1.3, 0.5}}));
  MultClassicalTriplet t(-1.1, 0.7, AtomicMeasure::circle({{-2.0, 0.8}}), Idempotent::finite(3));
  MultClassicalTriplet st = add(s, t);
  for (long long k = -4; k <= 4; ++k)
    CHECK(std::abs(char_function(st, k) - char_function(s, k) * char_function(t, k)) <= 1e-12);
}

TEST_CASE("idempotent factors kill non-divisible Fourier modes") {
  MultClassicalTriplet t(0.2, 0.1, AtomicMeasure::zero(Space::kCircle), Idempotent::finite(4));
  CHECK(char_function(t, 6) == cd(0.0));
  const cd surviving = std::polar(std::exp(-0.5 * 0.1 * 64.0), 8.0 * 0.2);
  CHECK(std::abs(char_function(t, 8) - surviving) <= 1e-15);
  CHECK(char_function(t, 0) == cd(1.0));

  MultClassicalTriplet h(0.0, 0.0, AtomicMeasure::zero(Space::kCircle), Idempotent::infinite());
  CHECK(char_function(h, 1) == cd(0.0));
  CHECK(char_function(h, 0) == cd(1.0));
}

TEST_CASE("wrapped Gaussian Fourier coefficients") {
  MultClassicalTriplet t = wrapped_gaussian_triplet(0.5);
  for (long long k = 1; k <= 3; ++k)
    CHECK(std::abs(char_function(t, k) - cd(std::exp(-0.5 * 0.5 * k * k))) <= 1e-14);
}

TEST_CASE("powering a point mass moves it along the circle") {
  MomentSequence base = dirac_moments(6, std::polar(1.0, 0.3));
  MomentSequence target = dirac_moments(6, std::polar(1.0, 1.2));
  auto rows = boxtimes_power_limit_experiment(base, {4}, target);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].max_moment_error <= 1e-10);
  CHECK_THROWS_AS(boxtimes_power_limit_experiment(base, {0}, target), std::invalid_argument);
}
