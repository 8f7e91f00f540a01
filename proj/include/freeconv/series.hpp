#pragma once

#include <vector>

#include "freeconv/common.hpp"

namespace freeconv {

// Dense truncated power series over complex doubles. Order K means
// coefficients c_0..c_K are stored; every operation is exact through
// order K and silently discards higher terms.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<cd> coeffs);  // pads with zeros; rejects longer input

  static TruncatedSeries constant(int order, cd value);
  static TruncatedSeries identity(int order);  // the series z

  int order() const { return order_; }
  cd coef(int k) const;
  void set(int k, cd value);
  const std::vector<cd>& coeffs() const { return c_; }

  TruncatedSeries resized(int order) const;  // truncate or zero-pad

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(cd factor) const;

  // Fails loudly when the divisor's constant term is below 1e-13 in modulus.
  TruncatedSeries div(const TruncatedSeries& denom) const;

  // this(inner(z)); inner must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  // Compositional inverse; requires c_0 = 0 and c_1 != 0. Newton iteration.
  TruncatedSeries comp_inverse() const;
  // Same result by Lagrange inversion; slow, kept as a test oracle.
  TruncatedSeries comp_inverse_lagrange() const;

  TruncatedSeries exp() const;
  TruncatedSeries log() const;  // principal branch; requires |c_0| above the division floor
  TruncatedSeries derivative() const;

  // Multiply by z^k, shifting coefficients up (top terms fall off).
  TruncatedSeries shifted_up(int k) const;
  // Divide by z; requires c_0 = 0.
  TruncatedSeries shifted_down() const;

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  int order_;
  std::vector<cd> c_;
};

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace freeconv
