#pragma once

#include <cstdint>
#include <vector>

#include "freeconv/common.hpp"
#include "freeconv/permutation.hpp"

namespace freeconv {

inline constexpr int kGroupAlgebraCap = 8;

// Element of the group algebra of S_n, stored densely by permutation rank
// (lexicographic one-line order). n is capped at 8 (8! = 40320 coefficients).
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n);  // zero element
  static GroupAlgebraElement unit(int n);
  static GroupAlgebraElement basis(const Permutation& p, cd c = cd(1.0));

  int degree() const { return n_; }
  std::size_t dim() const { return coef_.size(); }

  cd coeff(const Permutation& p) const;
  cd coeff_by_rank(std::uint64_t r) const { return coef_[r]; }
  void add_term(const Permutation& p, cd c);
  void set_by_rank(std::uint64_t r, cd c) { coef_[r] = c; }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(cd factor) const;

  double norm1() const;
  std::size_t support_size() const;  // count of nonzero coefficients
  bool is_central(double tol = 0.0) const;

  bool operator==(const GroupAlgebraElement& o) const = default;

 private:
  int n_;
  std::vector<cd> coef_;
};

// Convolution product: (a*b)(h) = sum_g a(g) b(g^{-1} h). The parallel kernel
// partitions output indices; the serial reference is kept for testing and
// both return bitwise-identical results.
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement convolve_serial(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// Conjugacy-class bookkeeping for one degree, cached.
struct ConjugacyClasses {
  int n = 0;
  std::vector<std::vector<int>> types;   // descending cycle types
  std::vector<std::uint64_t> sizes;      // class cardinalities
  std::vector<int> class_of_rank;        // permutation rank -> class index
  std::vector<Permutation> representatives;

  int index_of_type(const std::vector<int>& type) const;  // -1 when absent
};

const ConjugacyClasses& conjugacy_classes(int n);

// All partitions of n, each written in descending order.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace freeconv
