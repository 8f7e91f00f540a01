#include "freeconv/finiten.hpp"

#include <cmath>
#include <stdexcept>

#include "freeconv/weingarten.hpp"

namespace freeconv {

namespace {

void check_cap(int n) {
  if (n < 1 || n > kFinitenCap)
    throw std::invalid_argument("finite-N engine capped at degree " + std::to_string(kFinitenCap));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Sum of the Weingarten function over all of S_m.
double wg_total(int m, int N) {
  const WeingartenTable& t = weingarten_table(m, N);
  const ConjugacyClasses& cc = conjugacy_classes(m);
  double s = 0.0;
  for (std::size_t l = 0; l < cc.sizes.size(); ++l)
    s += static_cast<double>(cc.sizes[l]) * t.class_values[l];
  return s;
}

// Taylor application of the left-multiplication operator, with the 1-norm of
// the multiplier as rigorous operator bound; the caller pre-scales so that
// the bound is at most 8.
GroupAlgebraElement exp_apply_taylor(const GroupAlgebraElement& l, const GroupAlgebraElement& v0) {
  GroupAlgebraElement acc = v0;
  GroupAlgebraElement term = v0;
  const double theta = l.norm1();
  const double floor_norm = std::max(v0.norm1(), 1.0);
  for (int k = 1; k <= 200; ++k) {
    term = convolve(l, term).scaled(1.0 / static_cast<double>(k));
    acc = acc + term;
    // Once k exceeds theta the tail is dominated by a geometric series with
    // ratio theta/(k+1) < 1.
    if (static_cast<double>(k) > theta && term.norm1() <= 1e-17 * floor_norm) return acc;
  }
  throw std::runtime_error("exp_apply_taylor: norm bound exceeded, no convergence in 200 terms");
}

GroupAlgebraElement exp_apply(const GroupAlgebraElement& l, const GroupAlgebraElement& v0) {
  double theta = l.norm1();
  int squarings = 0;
  while (theta > 8.0 && squarings < 40) {
    theta /= 2.0;
    ++squarings;
  }
  const std::uint64_t stages = std::uint64_t{1} << squarings;
  GroupAlgebraElement scaled = l.scaled(1.0 / static_cast<double>(stages));
  GroupAlgebraElement v = v0;
  for (std::uint64_t s = 0; s < stages; ++s) v = exp_apply_taylor(scaled, v);
  return v;
}

}  // namespace

GroupAlgebraElement ltilde(const UnitaryModel& m, int n) {
  check_cap(n);
  if (m.haar) throw std::domain_error("the haar model has no generator");
  const double N = static_cast<double>(m.N);
  const double nn = static_cast<double>(n);

  cd constant = cd(0.0, nn * m.y0);
  constant -= (nn * nn / N) * (m.beta / 2.0);
  constant += (nn * nn / N - nn * N) * (m.alpha / 2.0);
  for (const auto& at : m.jump_law.atoms())
    constant += nn * at.weight * (std::cos(at.location) - 1.0);

  // Jump block: for support size s the coefficient is
  // N sum_{m >= max(2, s)} C(n-s, m-s) J_m W_m with J_m = sum_j w_j (zeta_j - 1)^m.
  std::vector<cd> jump_coeff_by_support(static_cast<std::size_t>(n) + 1, cd(0.0));
  if (!m.jump_law.is_zero()) {
    std::vector<cd> j_m(static_cast<std::size_t>(n) + 1, cd(0.0));
    for (int mm = 2; mm <= n; ++mm)
      for (std::size_t i = 0; i < m.jump_law.atoms().size(); ++i)
        j_m[static_cast<std::size_t>(mm)] +=
            m.jump_law.atoms()[i].weight * std::pow(m.jump_law.circle_point(i) - cd(1.0), mm);
    for (int s = 0; s <= n; ++s) {
      cd acc = 0.0;
      for (int mm = std::max(2, s); mm <= n; ++mm)
        acc += binomial(n - s, mm - s) * j_m[static_cast<std::size_t>(mm)] * wg_total(mm, m.N);
      jump_coeff_by_support[static_cast<std::size_t>(s)] = N * acc;
    }
  }

  GroupAlgebraElement out(n);
  const std::vector<Permutation>& perms = all_permutations(n);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const Permutation& g = perms[r];
    cd c = jump_coeff_by_support[static_cast<std::size_t>(g.support_size())];
    if (g.is_identity()) c += constant;
    if (g.norm() == 1) c -= m.alpha;  // transpositions
    out.set_by_rank(r, c);
  }
  return out;
}

cd exact_trace_moments(const UnitaryModel& m, const Permutation& sigma) {
  check_cap(sigma.degree());
  // A Haar unitary satisfies U ~ e^{i theta} U, so every trace-power product
  // of total positive degree averages to zero.
  if (m.haar) return 0.0;
  GroupAlgebraElement v = exp_apply(ltilde(m, sigma.degree()), GroupAlgebraElement::basis(sigma));
  const std::vector<Permutation>& perms = all_permutations(sigma.degree());
  cd acc = 0.0;
  for (std::size_t r = 0; r < perms.size(); ++r) {
    cd c = v.coeff_by_rank(r);
    if (c == cd(0.0)) continue;
    double p = 1.0;
    for (int i = 0; i < perms[r].cycle_count(); ++i) p *= static_cast<double>(m.N);
    acc += c * p;
  }
  return acc;
}

LimitOperatorT::LimitOperatorT(const MultFreeTriplet& t, int n) : n_(n) {
  check_cap(n);
  if (t.haar) throw std::domain_error("the haar law has no limit generator");
  LogCumulantSequence ls = log_cumulants(t, std::max(n, 2));
  lk1_ = ls.lk1;
  cycle_weight_.assign(static_cast<std::size_t>(n) + 1, cd(0.0));
  for (int m = 2; m <= n; ++m) cycle_weight_[static_cast<std::size_t>(m)] = ls.at(m);
}

GroupAlgebraElement LimitOperatorT::apply(const GroupAlgebraElement& v) const {
  return apply_nilpotent(v) + v.scaled(static_cast<double>(n_) * lk1_);
}

GroupAlgebraElement LimitOperatorT::apply_nilpotent(const GroupAlgebraElement& v) const {
  if (v.degree() != n_) throw std::invalid_argument("degree mismatch in limit operator");
  GroupAlgebraElement out(n_);
  const std::vector<Permutation>& perms = all_permutations(n_);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    cd c = v.coeff_by_rank(r);
    if (c == cd(0.0)) continue;
    const Permutation& sigma = perms[r];
    for (int m = 2; m <= n_; ++m) {
      if (sigma.norm() < m - 1) break;
      cd w = cycle_weight_[static_cast<std::size_t>(m)] * c;
      for (const Permutation& cyc : cycles_below(sigma, m)) out.add_term(cyc.compose(sigma), w);
    }
  }
  return out;
}

LimitOperatorT limit_operator_T(const MultFreeTriplet& t, int n) { return LimitOperatorT(t, n); }

cd limit_trace_moments(const MultFreeTriplet& t, const Permutation& sigma) {
  const int n = sigma.degree();
  LimitOperatorT op(t, n);
  // e^T = e^{n Lk_1} e^{T0} with T0 nilpotent: the Taylor sum below is exact.
  GroupAlgebraElement acc = GroupAlgebraElement::basis(sigma);
  GroupAlgebraElement term = acc;
  for (int j = 1; j <= n; ++j) {
    term = op.apply_nilpotent(term).scaled(1.0 / static_cast<double>(j));
    if (term.norm1() == 0.0) break;
    acc = acc + term;
  }
  cd total = 0.0;
  for (std::size_t r = 0; r < acc.dim(); ++r) total += acc.coeff_by_rank(r);
  return std::exp(static_cast<double>(n) * op.lk1()) * total;
}

}  // namespace freeconv
