#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace freeconv {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Smallest magnitude a series constant term (or first moment) may have
/// before division-like operations refuse to proceed.
inline constexpr double kDivisionFloor = 1e-13;

/// Atom locations closer than this are merged on measure construction.
inline constexpr double kAtomMergeTol = 1e-12;

/// Canonical angle in (-pi, pi].
inline double principal_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// |a - b| on the circle, i.e. distance of angles mod 2*pi.
inline double angle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace freeconv
