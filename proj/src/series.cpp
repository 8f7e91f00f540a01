#include "freeconv/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace freeconv {

namespace {

void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  c_.assign(static_cast<std::size_t>(order) + 1, cd(0.0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<cd> coeffs) : TruncatedSeries(order) {
  if (coeffs.size() > c_.size()) throw std::invalid_argument("more coefficients than series order admits");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncatedSeries TruncatedSeries::constant(int order, cd value) {
  TruncatedSeries s(order);
  s.c_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  s.c_[1] = 1.0;
  return s;
}

cd TruncatedSeries::coef(int k) const {
  if (k < 0 || k > order_) throw std::invalid_argument("series coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, cd value) {
  if (k < 0 || k > order_) throw std::invalid_argument("series coefficient index out of range");
  c_[static_cast<std::size_t>(k)] = value;
}

TruncatedSeries TruncatedSeries::resized(int order) const {
  TruncatedSeries s(order);
  int keep = std::min(order, order_);
  for (int k = 0; k <= keep; ++k) s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  TruncatedSeries s(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] + o.c_[k];
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  TruncatedSeries s(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] - o.c_[k];
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  TruncatedSeries s(order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[static_cast<std::size_t>(i)] == cd(0.0)) continue;
    for (int j = 0; i + j <= order_; ++j)
      s.c_[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
  }
  return s;
}

TruncatedSeries TruncatedSeries::scaled(cd factor) const {
  TruncatedSeries s(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] * factor;
  return s;
}

TruncatedSeries TruncatedSeries::div(const TruncatedSeries& denom) const {
  check_same_order(*this, denom);
  if (std::abs(denom.c_[0]) <= kDivisionFloor)
    throw std::runtime_error("series division: divisor constant term below 1e-13");
  TruncatedSeries q(order_);
  for (int n = 0; n <= order_; ++n) {
    cd acc = c_[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k)
      acc -= q.c_[static_cast<std::size_t>(k)] * denom.c_[static_cast<std::size_t>(n - k)];
    q.c_[static_cast<std::size_t>(n)] = acc / denom.c_[0];
  }
  return q;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  check_same_order(*this, inner);
  if (inner.c_[0] != cd(0.0))
    throw std::invalid_argument("series composition requires zero constant term in the inner series");
  // Horner in the inner series.
  TruncatedSeries r = constant(order_, c_[static_cast<std::size_t>(order_)]);
  for (int k = order_ - 1; k >= 0; --k) {
    r = r * inner;
    r.c_[0] += c_[static_cast<std::size_t>(k)];
  }
  return r;
}

TruncatedSeries TruncatedSeries::comp_inverse() const {
  if (c_[0] != cd(0.0) || std::abs(c_[1]) <= kDivisionFloor)
    throw std::invalid_argument("compositional inverse requires c_0 = 0 and c_1 != 0");
  TruncatedSeries g = identity(order_).scaled(cd(1.0) / c_[1]);
  TruncatedSeries id = identity(order_);
  TruncatedSeries deriv = derivative();
  int rounds = 2;
  for (int v = 1; v < order_ + 1; v *= 2) ++rounds;  // error valuation doubles per round
  for (int it = 0; it < rounds; ++it) {
    TruncatedSeries err = compose(g) - id;
    g = g - err.div(deriv.compose(g));
  }
  return g;
}

TruncatedSeries TruncatedSeries::comp_inverse_lagrange() const {
  if (c_[0] != cd(0.0) || std::abs(c_[1]) <= kDivisionFloor)
    throw std::invalid_argument("compositional inverse requires c_0 = 0 and c_1 != 0");
  // g_n = (1/n) [z^{n-1}] (z/f)^n
  TruncatedSeries u(order_);  // f/z
  for (int k = 0; k < order_; ++k) u.set(k, c_[static_cast<std::size_t>(k + 1)]);
  TruncatedSeries inv_u = constant(order_, 1.0).div(u);
  TruncatedSeries g(order_);
  TruncatedSeries p = constant(order_, 1.0);
  for (int n = 1; n <= order_; ++n) {
    p = p * inv_u;
    g.set(n, p.coef(n - 1) / static_cast<double>(n));
  }
  return g;
}

TruncatedSeries TruncatedSeries::exp() const {
  // h' = f' h, h_0 = exp(f_0): n h_n = sum_{k=1..n} k f_k h_{n-k}
  TruncatedSeries h(order_);
  h.c_[0] = std::exp(c_[0]);
  for (int n = 1; n <= order_; ++n) {
    cd acc = 0.0;
    for (int k = 1; k <= n; ++k)
      acc += static_cast<double>(k) * c_[static_cast<std::size_t>(k)] * h.c_[static_cast<std::size_t>(n - k)];
    h.c_[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
  }
  return h;
}

TruncatedSeries TruncatedSeries::log() const {
  if (std::abs(c_[0]) <= kDivisionFloor)
    throw std::runtime_error("series log: constant term below 1e-13");
  // L' f = f': n L_n f_0 = n f_n - sum_{k=1..n-1} k L_k f_{n-k}
  TruncatedSeries h(order_);
  h.c_[0] = std::log(c_[0]);
  for (int n = 1; n <= order_; ++n) {
    cd acc = static_cast<double>(n) * c_[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k)
      acc -= static_cast<double>(k) * h.c_[static_cast<std::size_t>(k)] * c_[static_cast<std::size_t>(n - k)];
    h.c_[static_cast<std::size_t>(n)] = acc / (static_cast<double>(n) * c_[0]);
  }
  return h;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries d(order_);
  for (int k = 1; k <= order_; ++k)
    d.c_[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * c_[static_cast<std::size_t>(k)];
  return d;
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be nonnegative");
  TruncatedSeries s(order_);
  for (int j = 0; j + k <= order_; ++j) s.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down() const {
  if (c_[0] != cd(0.0)) throw std::invalid_argument("shift down requires zero constant term");
  TruncatedSeries s(order_);
  for (int j = 1; j <= order_; ++j) s.c_[static_cast<std::size_t>(j - 1)] = c_[static_cast<std::size_t>(j)];
  return s;
}

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b);
  double d = 0.0;
  for (int k = 0; k <= a.order(); ++k) d = std::max(d, std::abs(a.coef(k) - b.coef(k)));
  return d;
}

}  // namespace freeconv
