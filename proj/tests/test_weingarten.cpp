#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "freeconv/group_algebra.hpp"
#include "freeconv/weingarten.hpp"

using namespace freeconv;

namespace {

GroupAlgebraElement random_element(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GroupAlgebraElement x(n);
  for (std::uint64_t r = 0; r < x.dim(); ++r) x.set_by_rank(r, cd(u(eng), u(eng)));
  return x;
}

Matrix random_matrix(int N, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = cd(u(eng), u(eng));
  return m;
}

double max_coeff_diff(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  double worst = 0.0;
  for (std::uint64_t r = 0; r < a.dim(); ++r)
    worst = std::max(worst, std::abs(a.coeff_by_rank(r) - b.coeff_by_rank(r)));
  return worst;
}

}  // namespace

TEST_CASE("group algebra convolution on hand cases") {
  const Permutation t12 = Permutation::from_cycles(2, {{1, 2}});
  GroupAlgebraElement sq = convolve(GroupAlgebraElement::basis(t12), GroupAlgebraElement::basis(t12));
  CHECK(sq == GroupAlgebraElement::unit(2));

  GroupAlgebraElement x = random_element(4, 3);
  CHECK(max_coeff_diff(convolve(x, GroupAlgebraElement::unit(4)), x) == 0.0);
  CHECK(max_coeff_diff(convolve(GroupAlgebraElement::unit(4), x), x) == 0.0);

  GroupAlgebraElement y = random_element(4, 4);
  GroupAlgebraElement z = random_element(4, 5);
  CHECK(max_coeff_diff(convolve(convolve(x, y), z), convolve(x, convolve(y, z))) <= 1e-12);

  CHECK_THROWS_AS(convolve(x, GroupAlgebraElement::unit(3)), std::invalid_argument);
}

TEST_CASE("parallel convolution matches the serial reference bitwise") {
  for (int n : {3, 5}) {
    GroupAlgebraElement a = random_element(n, 7);
    GroupAlgebraElement b = random_element(n, 8);
    CHECK(convolve(a, b) == convolve_serial(a, b));
  }
}

TEST_CASE("centrality detects class functions") {
  GroupAlgebraElement classfn(3);
  for (const auto& p : all_permutations(3))
    classfn.add_term(p, cd(static_cast<double>(p.norm()), 1.0));
  CHECK(classfn.is_central(0.0));
  CHECK_FALSE(GroupAlgebraElement::basis(Permutation::from_cycles(3, {{1, 2}})).is_central(1e-15));

  GroupAlgebraElement e = GroupAlgebraElement::basis(Permutation(2), cd(3.0, -4.0));
  CHECK(e.norm1() == doctest::Approx(5.0));
  CHECK(e.support_size() == 1);
}

TEST_CASE("conjugacy class bookkeeping") {
  const auto& cc = conjugacy_classes(4);
  CHECK(cc.types.size() == 5);
  std::uint64_t total = 0;
  for (auto s : cc.sizes) total += s;
  CHECK(total == 24);
  for (std::size_t k = 0; k < cc.types.size(); ++k)
    CHECK(cc.representatives[k].cycle_type() == cc.types[k]);
  CHECK(cc.index_of_type({2, 1, 1}) >= 0);
  CHECK(cc.index_of_type({4, 1}) == -1);
  CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("Weingarten closed forms for one and two tensor factors") {
  for (int N = 1; N <= 6; ++N) {
    const auto& t1 = weingarten_table(1, N);
    CHECK(std::abs(t1.value(Permutation(1)) - 1.0 / N) <= 1e-15);
  }
  for (int N = 2; N <= 6; ++N) {
    const auto& t2 = weingarten_table(2, N);
    const double d = static_cast<double>(N) * (N * N - 1.0);
    CHECK(std::abs(t2.value(Permutation(2)) - (N / d)) <= 1e-14);
    CHECK(std::abs(t2.value(Permutation::from_cycles(2, {{1, 2}})) + 1.0 / d) <= 1e-14);
    CHECK_FALSE(t2.pseudo);
    CHECK(t2.zeroed == 0);
  }
}

TEST_CASE("Weingarten closed forms for three tensor factors") {
  const Permutation id3(3);
  const Permutation tr3 = Permutation::from_cycles(3, {{1, 2}});
  const Permutation cyc3 = Permutation::from_cycles(3, {{1, 2, 3}});
  for (int N = 3; N <= 6; ++N) {
    const double d = N * (N * N - 1.0) * (N * N - 4.0);
    const auto& t = weingarten_table(3, N);
    CHECK(std::abs(t.value(id3) - (N * N - 2.0) / d) <= 1e-14);
    CHECK(std::abs(t.value(tr3) + 1.0 / ((N * N - 1.0) * (N * N - 4.0))) <= 1e-14);
    CHECK(std::abs(t.value(cyc3) - 2.0 / d) <= 1e-14);
  }
}

TEST_CASE("Weingarten element is the central inverse of the identity moments") {
  for (int n = 1; n <= 4; ++n)
    for (int N = n; N <= 4; ++N) {
      std::vector<Matrix> ids(static_cast<std::size_t>(n), Matrix::Identity(N, N));
      GroupAlgebraElement product = convolve(phi_of_tensor(ids), wg_element(n, N));
      CHECK(max_coeff_diff(product, GroupAlgebraElement::unit(n)) <= 1e-10);
      CHECK(wg_element(n, N).is_central(1e-14));
    }
}

TEST_CASE("below the stable range the product is an idempotent projection") {
  const auto& t = weingarten_table(3, 2);
  CHECK(t.pseudo);
  CHECK(t.zeroed > 0);
  std::vector<Matrix> ids(3, Matrix::Identity(2, 2));
  GroupAlgebraElement f = convolve(phi_of_tensor(ids), wg_element(3, 2));
  CHECK(max_coeff_diff(convolve(f, f), f) <= 1e-10);
  CHECK(max_coeff_diff(f, GroupAlgebraElement::unit(3)) > 0.1);
}

TEST_CASE("moment coefficients of a tensor product") {
  Matrix a = random_matrix(3, 11);
  Matrix b = random_matrix(3, 12);
  GroupAlgebraElement phi = phi_of_tensor({a, b});
  CHECK(std::abs(phi.coeff(Permutation(2)) - a.trace() * b.trace()) <= 1e-13);
  CHECK(std::abs(phi.coeff(Permutation::from_cycles(2, {{1, 2}})) - (a * b).trace()) <= 1e-13);

  // order matters inside a cycle: (1 2 3) traces A B C in factor order
  Matrix c = random_matrix(3, 13);
  GroupAlgebraElement phi3 = phi_of_tensor({a, b, c});
  CHECK(std::abs(phi3.coeff(Permutation::from_cycles(3, {{1, 2, 3}})) - (a * b * c).trace()) <=
        1e-12);
  CHECK(std::abs(phi3.coeff(Permutation::from_cycles(3, {{1, 3, 2}})) - (a * c * b).trace()) <=
        1e-12);

  CHECK_THROWS_AS(phi_of_tensor({}), std::invalid_argument);
  CHECK_THROWS_AS(phi_of_tensor({a, random_matrix(2, 14)}), std::invalid_argument);
}

TEST_CASE("permutation representation on tensor space") {
  const int N = 2;
  const Permutation swap2 = Permutation::from_cycles(2, {{1, 2}});
  Matrix rho = rho_matrix(swap2, N);
  REQUIRE(rho.rows() == 4);
  // basis order (i1, i2) -> i1 N + i2; the swap exchanges the two digits
  CHECK(rho(0, 0) == cd(1.0));
  CHECK(rho(2, 1) == cd(1.0));
  CHECK(rho(1, 2) == cd(1.0));
  CHECK(rho(1, 1) == cd(0.0));

  // homomorphism and trace identities on S_3
  for (const auto& s : all_permutations(3))
    for (const auto& t : all_permutations(3)) {
      Matrix lhs = rho_matrix(s, 2) * rho_matrix(t, 2);
      Matrix rhs = rho_matrix(s.compose(t), 2);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
    }
  for (const auto& s : all_permutations(3))
    CHECK(std::abs(rho_matrix(s, 2).trace() - cd(std::pow(2.0, s.cycle_count()))) <= 1e-12);
}

TEST_CASE("haar averaging fixes the symmetric-group commutant") {
  // E(d rho(y)) = d rho(y): averaging is the identity on the span of the rho(sigma)
  for (int n = 2; n <= 3; ++n) {
    const int N = n + 1;
    GroupAlgebraElement y = random_element(n, 21);
    Matrix m = represent(y, N);
    GroupAlgebraElement recovered = convolve(phi_of_endomorphism(m, n, N), wg_element(n, N));
    CHECK(max_coeff_diff(recovered, y) <= 1e-10);
  }
}

TEST_CASE("averaging a tensor product is a projection") {
  const int N = 3;
  Matrix a = random_matrix(N, 31);
  Matrix b = random_matrix(N, 32);
  GroupAlgebraElement e = conditional_expectation({a, b});
  Matrix em = represent(e, N);
  GroupAlgebraElement again = convolve(phi_of_endomorphism(em, 2, N), wg_element(2, N));
  CHECK(max_coeff_diff(again, e) <= 1e-11);

  // one factor: E(A) = (Tr A / N) Id
  GroupAlgebraElement e1 = conditional_expectation({a});
  CHECK(std::abs(e1.coeff(Permutation(1)) - a.trace() / static_cast<double>(N)) <= 1e-13);
}

TEST_CASE("rescaled Weingarten values approach their combinatorial limit") {
  // N^{n+|sigma|} Wg(sigma) tends to a product of signed Catalan numbers;
  // for a 3-cycle that limit is 2.
  const Permutation cyc3 = Permutation::from_cycles(3, {{1, 2, 3}});
  const double scaled = std::pow(40.0, 5) * weingarten_table(3, 40).value(cyc3);
  CHECK(std::abs(scaled - 2.0) <= 0.02);
}

TEST_CASE("table construction rejects bad arguments") {
  CHECK_THROWS_AS(weingarten_table(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(weingarten_table(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(weingarten_table(2, 3).value(Permutation(3)), std::invalid_argument);
}
