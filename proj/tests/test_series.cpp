#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "freeconv/noncrossing.hpp"
#include "freeconv/series.hpp"
#include "freeconv/transforms.hpp"

using namespace freeconv;

namespace {

TruncatedSeries random_series(int order, std::uint64_t seed, bool zero_constant = false) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TruncatedSeries f(order);
  for (int k = 0; k <= order; ++k) f.set(k, cd(u(eng), u(eng)));
  if (zero_constant) f.set(0, 0.0);
  return f;
}

MomentSequence random_moments(int order, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> m(static_cast<std::size_t>(order) + 1, 1.0);
  for (int k = 1; k <= order; ++k) m[static_cast<std::size_t>(k)] = cd(u(eng), u(eng));
  // keep m_1 away from zero so every transform below is defined
  m[1] += cd(1.5, 0.5);
  return make_moment_sequence(m);
}

const std::vector<double> kCatalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};

}  // namespace

TEST_CASE("series arithmetic on hand examples") {
  TruncatedSeries a(2, {1.0, 2.0});
  TruncatedSeries b(2, {3.0, 1.0});
  TruncatedSeries prod = a * b;
  CHECK(prod.coef(0) == cd(3.0));
  CHECK(prod.coef(1) == cd(7.0));
  CHECK(prod.coef(2) == cd(2.0));
  CHECK((a + b).coef(0) == cd(4.0));
  CHECK((a - b).coef(1) == cd(1.0));
  CHECK(a.scaled(2.0).coef(1) == cd(4.0));
  CHECK(TruncatedSeries::identity(3).coef(1) == cd(1.0));
  CHECK(TruncatedSeries::constant(3, 5.0).coef(0) == cd(5.0));

  CHECK_THROWS_AS(TruncatedSeries(0), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(1, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(a.coef(3), std::invalid_argument);
  CHECK_THROWS_AS(a + TruncatedSeries(5), std::invalid_argument);
}

TEST_CASE("division inverts multiplication and rejects vanishing divisors") {
  TruncatedSeries f = random_series(10, 11);
  TruncatedSeries g = random_series(10, 12);
  g.set(0, cd(0.7, -0.4));
  CHECK(max_coeff_distance((f * g).div(g), f) <= 1e-12);

  TruncatedSeries tiny = random_series(4, 13, true);
  CHECK_THROWS_AS(f.resized(4).div(tiny), std::runtime_error);
}

TEST_CASE("composition and shifts") {
  TruncatedSeries f(4, {1.0, 0.0, 1.0});            // 1 + z^2
  TruncatedSeries inner(4, {0.0, 1.0, 1.0});        // z + z^2
  TruncatedSeries comp = f.compose(inner);          // 1 + z^2 + 2 z^3 + z^4
  CHECK(comp.coef(0) == cd(1.0));
  CHECK(comp.coef(2) == cd(1.0));
  CHECK(comp.coef(3) == cd(2.0));
  CHECK(comp.coef(4) == cd(1.0));
  CHECK_THROWS_AS(f.compose(TruncatedSeries::constant(4, 1.0)), std::invalid_argument);

  // shifting up at fixed order drops the top coefficients, so zero them first
  TruncatedSeries h = random_series(6, 14, true);
  h.set(5, 0.0);
  h.set(6, 0.0);
  CHECK(max_coeff_distance(h.shifted_up(2).shifted_down().shifted_down(), h) == 0.0);
  TruncatedSeries nonzero = random_series(6, 15);
  nonzero.set(0, 1.0);
  CHECK_THROWS_AS(nonzero.shifted_down(), std::invalid_argument);

  TruncatedSeries d = TruncatedSeries(3, {0.0, 1.0, 3.0, 5.0}).derivative();
  CHECK(d.coef(0) == cd(1.0));
  CHECK(d.coef(1) == cd(6.0));
  CHECK(d.coef(2) == cd(15.0));
}

TEST_CASE("compositional inverse of z + z^2 carries signed Catalan coefficients") {
  TruncatedSeries f(6, {0.0, 1.0, 1.0});
  TruncatedSeries g = f.comp_inverse();
  for (int k = 1; k <= 6; ++k) {
    double expected = (k % 2 == 0 ? -1.0 : 1.0) * kCatalan[static_cast<std::size_t>(k - 1)];
    CHECK(std::abs(g.coef(k) - cd(expected)) <= 1e-10 * kCatalan[static_cast<std::size_t>(k - 1)]);
  }
  CHECK(max_coeff_distance(f.compose(g), TruncatedSeries::identity(6)) <= 1e-10);
  CHECK(max_coeff_distance(g.compose(f), TruncatedSeries::identity(6)) <= 1e-10);
}

TEST_CASE("Newton inversion agrees with the Lagrange oracle") {
  TruncatedSeries f = random_series(9, 21, true);
  f.set(1, cd(1.3, 0.4));
  CHECK(max_coeff_distance(f.comp_inverse(), f.comp_inverse_lagrange()) <= 1e-11);
  CHECK_THROWS_AS(random_series(4, 22).comp_inverse(), std::invalid_argument);
  TruncatedSeries no_linear(4);
  no_linear.set(2, 1.0);
  CHECK_THROWS_AS(no_linear.comp_inverse(), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse away from the branch cut") {
  TruncatedSeries f = random_series(8, 31);
  f.set(0, cd(2.0, -1.0));
  CHECK(max_coeff_distance(f.log().exp(), f) <= 1e-12);

  TruncatedSeries g = random_series(8, 32).scaled(0.5);
  CHECK(max_coeff_distance(g.exp().log(), g) <= 1e-12);

  TruncatedSeries e = TruncatedSeries::identity(6).exp();
  double fact = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    CHECK(std::abs(e.coef(k) - cd(1.0 / fact)) <= 1e-14);
  }
  CHECK_THROWS_AS(random_series(4, 33, true).log(), std::runtime_error);
}

TEST_CASE("moment sequence validation and dirac moments") {
  CHECK_THROWS_AS(make_moment_sequence({cd(2.0), cd(1.0)}), std::invalid_argument);
  CHECK_THROWS_AS(make_moment_sequence({cd(1.0)}), std::invalid_argument);
  MomentSequence d = dirac_moments(5, cd(0.0, 1.0));
  CHECK(d.moment(0) == cd(1.0));
  CHECK(std::abs(d.moment(3) - cd(0.0, -1.0)) <= 1e-15);
  CHECK(d.first_moment_nonzero());
  CHECK_THROWS_AS(d.moment(6), std::invalid_argument);
}

TEST_CASE("catalan moments have unit free cumulants and S = 1/(1+z)") {
  // The moment sequence 1, 1, 2, 5, 14, ... has every free cumulant equal to 1.
  std::vector<cd> m(kCatalan.begin(), kCatalan.begin() + 9);
  MomentSequence cat = make_moment_sequence(m);
  auto kappa = free_cumulants_from_moments(cat);
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(kappa[static_cast<std::size_t>(n)] - cd(1.0)) <= 1e-9);

  TruncatedSeries s = s_from_moments(cat);
  for (int k = 0; k <= s.order(); ++k) {
    double expected = (k % 2 == 0 ? 1.0 : -1.0);
    CHECK(std::abs(s.coef(k) - cd(expected)) <= 1e-8);
  }
}

TEST_CASE("even moments with unit variance mean a single free cumulant") {
  MomentSequence semicircle = make_moment_sequence({1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 5.0, 0.0, 14.0});
  auto kappa = free_cumulants_from_moments(semicircle);
  for (int n = 1; n <= 8; ++n) {
    cd expected = (n == 2) ? cd(1.0) : cd(0.0);
    CHECK(std::abs(kappa[static_cast<std::size_t>(n)] - expected) <= 1e-9);
  }
}

TEST_CASE("moments match the noncrossing partition sum over free cumulants") {
  std::mt19937_64 eng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> kappa(9, 0.0);
  for (int n = 1; n <= 8; ++n) kappa[static_cast<std::size_t>(n)] = cd(u(eng), u(eng));

  MomentSequence m = moments_from_free_cumulants(kappa);
  for (int n = 1; n <= 8; ++n) {
    cd sum = 0.0;
    for (const auto& [part, image] : enumerate_noncrossing(n)) {
      cd prod = 1.0;
      for (const auto& block : part.blocks) prod *= kappa[block.size()];
      sum += prod;
    }
    CHECK(std::abs(m.moment(n) - sum) <= 1e-10);
  }

  auto back = free_cumulants_from_moments(m);
  for (int n = 1; n <= 8; ++n)
    CHECK(std::abs(back[static_cast<std::size_t>(n)] - kappa[static_cast<std::size_t>(n)]) <= 1e-10);
}

TEST_CASE("moment and S-transform round trips") {
  MomentSequence m = random_moments(9, 41);
  TruncatedSeries s = s_from_moments(m);
  MomentSequence back = moments_from_s(s);
  REQUIRE(back.order() >= m.order());
  for (int k = 0; k <= m.order(); ++k) CHECK(std::abs(back.moment(k) - m.moment(k)) <= 1e-9);

  std::vector<cd> zero_mean = {1.0, 0.0, 1.0};
  CHECK_THROWS_AS(s_from_moments(make_moment_sequence(zero_mean)), std::invalid_argument);
  CHECK_THROWS_AS(moments_from_s(TruncatedSeries(4)), std::invalid_argument);
}

TEST_CASE("free additive convolution adds free cumulants") {
  MomentSequence a = random_moments(7, 51);
  MomentSequence b = random_moments(7, 52);
  MomentSequence c = boxplus(a, b);
  auto ka = free_cumulants_from_moments(a);
  auto kb = free_cumulants_from_moments(b);
  auto kc = free_cumulants_from_moments(c);
  for (int n = 1; n <= 7; ++n) {
    auto i = static_cast<std::size_t>(n);
    CHECK(std::abs(kc[i] - (ka[i] + kb[i])) <= 1e-9);
  }
}

TEST_CASE("free multiplicative convolution multiplies S-transforms") {
  MomentSequence a = random_moments(7, 61);
  MomentSequence b = random_moments(7, 62);
  MomentSequence c = boxtimes(a, b);

  TruncatedSeries sprod = s_from_moments(a) * s_from_moments(b);
  TruncatedSeries sc = s_from_moments(c).resized(sprod.order());
  CHECK(max_coeff_distance(sc, sprod) <= 1e-8);

  MomentSequence d1 = dirac_moments(6, std::polar(1.0, 0.8));
  MomentSequence d2 = dirac_moments(6, std::polar(1.0, -1.7));
  MomentSequence dm = boxtimes(d1, d2);
  MomentSequence expected = dirac_moments(6, std::polar(1.0, -0.9));
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(dm.moment(k) - expected.moment(k)) <= 1e-10);

  // commutative and associative at the moment level
  MomentSequence ab = boxtimes(a, b);
  MomentSequence ba = boxtimes(b, a);
  for (int k = 0; k <= 7; ++k) CHECK(std::abs(ab.moment(k) - ba.moment(k)) <= 1e-9);
  MomentSequence c3 = random_moments(7, 63);
  MomentSequence left = boxtimes(boxtimes(a, b), c3);
  MomentSequence right = boxtimes(a, boxtimes(b, c3));
  for (int k = 0; k <= 7; ++k) CHECK(std::abs(left.moment(k) - right.moment(k)) <= 1e-8);

  std::vector<cd> zero_mean = {1.0, 0.0, 1.0};
  CHECK_THROWS_AS(boxtimes(make_moment_sequence(zero_mean), a), std::invalid_argument);
}

TEST_CASE("log-cumulants rebuild the S-transform and add under multiplication") {
  MomentSequence a = random_moments(7, 71);
  TruncatedSeries sa = s_from_moments(a);
  LogCumulantSequence la = log_cumulants_from_s(sa, a.moment(1));
  TruncatedSeries rebuilt = s_from_log_cumulants(la, sa.order());
  CHECK(max_coeff_distance(rebuilt, sa) <= 1e-9);

  MomentSequence b = random_moments(7, 72);
  LogCumulantSequence lb = log_cumulants_from_s(s_from_moments(b), b.moment(1));
  MomentSequence c = boxtimes(a, b);
  LogCumulantSequence lc = log_cumulants_from_s(s_from_moments(c), c.moment(1));
  // Lkappa_1 is a principal logarithm, so compare it through the exponential.
  CHECK(std::abs(std::exp(lc.at(1)) - std::exp(la.at(1) + lb.at(1))) <= 1e-9);
  for (int n = 2; n <= 6; ++n) CHECK(std::abs(lc.at(n) - (la.at(n) + lb.at(n))) <= 1e-8);

  CHECK_THROWS_AS(log_cumulants_from_s(sa, a.moment(1) + cd(0.5)), std::invalid_argument);
}
