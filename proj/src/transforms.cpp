#include "freeconv/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace freeconv {

cd MomentSequence::moment(int k) const {
  if (k < 0 || k > order()) throw std::invalid_argument("moment index out of range");
  return m[static_cast<std::size_t>(k)];
}

bool MomentSequence::first_moment_nonzero() const {
  return order() >= 1 && std::abs(m[1]) > kDivisionFloor;
}

MomentSequence make_moment_sequence(std::vector<cd> m) {
  if (m.empty() || m[0] != cd(1.0)) throw std::invalid_argument("moment sequence must start with m_0 = 1");
  if (m.size() < 2) throw std::invalid_argument("moment sequence needs order at least 1");
  return MomentSequence{std::move(m)};
}

MomentSequence dirac_moments(int order, cd omega) {
  std::vector<cd> m(static_cast<std::size_t>(order) + 1);
  m[0] = 1.0;
  for (int k = 1; k <= order; ++k) m[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k - 1)] * omega;
  return MomentSequence{std::move(m)};
}

cd LogCumulantSequence::at(int n) const {
  if (n == 1) return lk1;
  if (n < 1 || n > order()) throw std::invalid_argument("log-cumulant index out of range");
  return lk[static_cast<std::size_t>(n - 2)];
}

TruncatedSeries m_series_from_moments(const MomentSequence& m) {
  return TruncatedSeries(m.order(), m.m);
}

TruncatedSeries s_from_moments(const MomentSequence& m) {
  if (!m.first_moment_nonzero())
    throw std::invalid_argument("s_from_moments requires a nonzero first moment");
  const int K = m.order();
  TruncatedSeries m_minus_1 = m_series_from_moments(m);
  m_minus_1.set(0, 0.0);
  TruncatedSeries v = m_minus_1.comp_inverse();
  // S = (V/z)(1+z); V/z is exact through K-1, so the product is returned at K-1.
  TruncatedSeries one_plus_z = TruncatedSeries::constant(K, 1.0) + TruncatedSeries::identity(K);
  return (v.shifted_down() * one_plus_z).resized(K - 1);
}

MomentSequence moments_from_s(const TruncatedSeries& s) {
  if (std::abs(s.coef(0)) <= kDivisionFloor)
    throw std::invalid_argument("moments_from_s requires S(0) != 0");
  const int P = s.order() + 1;
  TruncatedSeries sp = s.resized(P);
  TruncatedSeries one_plus_z = TruncatedSeries::constant(P, 1.0) + TruncatedSeries::identity(P);
  TruncatedSeries v = sp.shifted_up(1).div(one_plus_z);  // z S/(1+z), exact through P
  TruncatedSeries m_minus_1 = v.comp_inverse();
  std::vector<cd> m(static_cast<std::size_t>(P) + 1);
  m[0] = 1.0;
  for (int k = 1; k <= P; ++k) m[static_cast<std::size_t>(k)] = m_minus_1.coef(k);
  return MomentSequence{std::move(m)};
}

std::vector<cd> free_cumulants_from_moments(const MomentSequence& m) {
  const int K = m.order();
  const int P = K + 1;
  TruncatedSeries mp = m_series_from_moments(m).resized(P);
  TruncatedSeries w = mp.shifted_up(1).comp_inverse();  // inverts zM(z)
  TruncatedSeries c = mp.compose(w);
  std::vector<cd> kappa(static_cast<std::size_t>(K) + 1, cd(0.0));
  for (int n = 1; n <= K; ++n) kappa[static_cast<std::size_t>(n)] = c.coef(n);
  return kappa;
}

MomentSequence moments_from_free_cumulants(const std::vector<cd>& kappa) {
  const int K = static_cast<int>(kappa.size()) - 1;
  if (K < 1) throw std::invalid_argument("cumulant sequence needs order at least 1");
  TruncatedSeries c = TruncatedSeries::constant(K, 1.0);
  for (int n = 1; n <= K; ++n) c.set(n, kappa[static_cast<std::size_t>(n)]);
  // M = C(zM): each pass fixes one further order.
  TruncatedSeries msr = TruncatedSeries::constant(K, 1.0);
  for (int pass = 0; pass < K; ++pass) msr = c.compose(msr.shifted_up(1));
  std::vector<cd> m(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) m[static_cast<std::size_t>(k)] = msr.coef(k);
  m[0] = 1.0;
  return MomentSequence{std::move(m)};
}

LogCumulantSequence log_cumulants_from_s(const TruncatedSeries& s, cd m1) {
  if (std::abs(m1 * s.coef(0) - cd(1.0)) > 1e-8)
    throw std::invalid_argument("log_cumulants_from_s: m1 inconsistent with S(0)");
  const int L = s.order();
  TruncatedSeries g = s.scaled(m1).log();  // log(m1 S), zero constant term
  LogCumulantSequence out;
  out.lk1 = std::log(m1);
  out.lk.resize(static_cast<std::size_t>(L));
  // LS(z) = -z log(m1 S(z)); Lkappa_n is its z^n coefficient.
  for (int n = 2; n <= L + 1; ++n) out.lk[static_cast<std::size_t>(n - 2)] = -g.coef(n - 1);
  return out;
}

TruncatedSeries s_from_log_cumulants(const LogCumulantSequence& ls, int order) {
  TruncatedSeries h(order);
  for (int n = 2; n <= std::min(ls.order(), order + 1); ++n) h.set(n - 1, -ls.at(n));
  return h.exp().scaled(std::exp(-ls.lk1));
}

MomentSequence boxtimes(const MomentSequence& a, const MomentSequence& b) {
  if (!a.first_moment_nonzero() || !b.first_moment_nonzero())
    throw std::invalid_argument("boxtimes requires nonzero first moments");
  const int L = std::min(a.order(), b.order()) - 1;
  TruncatedSeries sa = s_from_moments(a).resized(L);
  TruncatedSeries sb = s_from_moments(b).resized(L);
  return moments_from_s(sa * sb);
}

MomentSequence boxplus(const MomentSequence& a, const MomentSequence& b) {
  const int K = std::min(a.order(), b.order());
  std::vector<cd> ka = free_cumulants_from_moments(a);
  std::vector<cd> kb = free_cumulants_from_moments(b);
  std::vector<cd> sum(static_cast<std::size_t>(K) + 1);
  for (int n = 0; n <= K; ++n)
    sum[static_cast<std::size_t>(n)] = ka[static_cast<std::size_t>(n)] + kb[static_cast<std::size_t>(n)];
  return moments_from_free_cumulants(sum);
}

}  // namespace freeconv
