#pragma once

// Permutations of {1..n} and the Cayley-graph geometry generated by
// transpositions: the norm |s| = n - #cycles(s), the bi-invariant distance
// d(a,b) = |a^{-1} b|, and the geodesic partial order
//   a <= b  iff  d(id,a) + d(a,b) = d(id,b).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace freeconv {

/// Hard degree ceiling for the value type (noncrossing enumeration goes to 12).
inline constexpr int kMaxDegree = 12;

class Permutation {
 public:
  Permutation() = default;
  /// Identity of S_n.
  explicit Permutation(int n);
  /// One-line notation with 1-based images; must be a bijection of {1..n}.
  Permutation(int n, const std::vector<int>& images_one_based);

  static Permutation identity(int n) { return Permutation(n); }
  /// Product of the given disjoint cycles (1-based labels); unlisted points fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// The long cycle (1 2 ... n).
  static Permutation long_cycle(int n);
  /// Disjoint consecutive cycles of the given lengths: (1..k1)(k1+1..k1+k2)...
  static Permutation from_cycle_type(const std::vector<int>& lengths);

  int degree() const { return n_; }
  /// 0-based image.
  int image(int i) const { return img_[static_cast<std::size_t>(i)]; }
  /// 1-based one-line notation.
  std::vector<int> one_line() const;

  /// Function composition: (*this)(rhs(i)). rhs acts first.
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;

  int cycle_count() const;
  int norm() const { return n_ - cycle_count(); }
  bool is_identity() const;
  /// Cycles with minimal element first, sorted by minimal element; 1-based.
  /// Fixed points included as singleton cycles.
  std::vector<std::vector<int>> cycles() const;
  /// Nontrivial cycles only (length >= 2), same canonical form.
  std::vector<std::vector<int>> nontrivial_cycles() const;
  /// Cycle lengths including fixed points, descending.
  std::vector<int> cycle_type() const;
  int support_size() const;

  bool operator==(const Permutation& o) const;
  /// Lexicographic on one-line notation (degrees must match for a meaningful order).
  bool operator<(const Permutation& o) const;

  /// "(1 2)(3 5 4)" with fixed points omitted; "id" for the identity.
  std::string to_cycle_string() const;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// d(a,b) = |a^{-1} b|. Throws std::invalid_argument on degree mismatch.
int cayley_distance(const Permutation& a, const Permutation& b);

/// Geodesic order: a on a geodesic from the identity to b.
bool geodesic_leq(const Permutation& a, const Permutation& b);

/// All m-cycles c with c*sigma <= sigma (equivalently norm(c*sigma) ==
/// norm(sigma) - (m-1)); sorted by one-line notation. 2 <= m <= degree.
std::vector<Permutation> cycles_below(const Permutation& sigma, int m);

/// Lexicographic rank of the one-line notation among S_n (factorial base).
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, std::uint64_t r);

/// All of S_n in lexicographic (= rank) order; cached per degree. n <= 8.
const std::vector<Permutation>& all_permutations(int n);

}  // namespace freeconv
