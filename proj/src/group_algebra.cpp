#include "freeconv/group_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "freeconv/parallel.hpp"

namespace freeconv {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kGroupAlgebraCap)
    throw std::invalid_argument("group algebra degree must be between 1 and " +
                                std::to_string(kGroupAlgebraCap));
}

std::uint64_t factorial_u(int n) { return factorial(n); }

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  check_degree(n);
  coef_.assign(factorial_u(n), cd(0.0));
}

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  GroupAlgebraElement e(n);
  e.coef_[0] = 1.0;  // rank 0 is the identity
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, cd c) {
  GroupAlgebraElement e(p.degree());
  e.coef_[perm_rank(p)] = c;
  return e;
}

cd GroupAlgebraElement::coeff(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch in coeff");
  return coef_[perm_rank(p)];
}

void GroupAlgebraElement::add_term(const Permutation& p, cd c) {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch in add_term");
  coef_[perm_rank(p)] += c;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("degree mismatch in group algebra sum");
  GroupAlgebraElement r(n_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] + o.coef_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("degree mismatch in group algebra difference");
  GroupAlgebraElement r(n_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] - o.coef_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(cd factor) const {
  GroupAlgebraElement r(n_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] * factor;
  return r;
}

double GroupAlgebraElement::norm1() const {
  double s = 0.0;
  for (const cd& c : coef_) s += std::abs(c);
  return s;
}

std::size_t GroupAlgebraElement::support_size() const {
  std::size_t s = 0;
  for (const cd& c : coef_)
    if (c != cd(0.0)) ++s;
  return s;
}

bool GroupAlgebraElement::is_central(double tol) const {
  const ConjugacyClasses& cc = conjugacy_classes(n_);
  std::vector<cd> first(cc.types.size());
  std::vector<bool> seen(cc.types.size(), false);
  for (std::size_t r = 0; r < coef_.size(); ++r) {
    int cls = cc.class_of_rank[r];
    if (!seen[static_cast<std::size_t>(cls)]) {
      seen[static_cast<std::size_t>(cls)] = true;
      first[static_cast<std::size_t>(cls)] = coef_[r];
    } else if (std::abs(coef_[r] - first[static_cast<std::size_t>(cls)]) > tol) {
      return false;
    }
  }
  return true;
}

namespace {

template <class ForEach>
GroupAlgebraElement convolve_impl(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                  ForEach&& for_each) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in convolution");
  const int n = a.degree();
  const std::vector<Permutation>& perms = all_permutations(n);
  // Gather the nonzero left factors once; their inverses drive the pull loop.
  std::vector<std::pair<Permutation, cd>> terms;
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (a.coeff_by_rank(r) != cd(0.0)) terms.emplace_back(perms[r].inverse(), a.coeff_by_rank(r));
  GroupAlgebraElement out(n);
  for_each(static_cast<std::int64_t>(0), static_cast<std::int64_t>(out.dim()), [&](std::int64_t h) {
    const Permutation& ph = perms[static_cast<std::size_t>(h)];
    cd acc = 0.0;
    for (const auto& [ginv, cg] : terms)
      acc += cg * b.coeff_by_rank(perm_rank(ginv.compose(ph)));
    out.set_by_rank(static_cast<std::uint64_t>(h), acc);
  });
  return out;
}

}  // namespace

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return convolve_impl(a, b, [](std::int64_t lo, std::int64_t hi, auto&& f) {
    parallel_for(lo, hi, f);
  });
}

GroupAlgebraElement convolve_serial(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return convolve_impl(a, b, [](std::int64_t lo, std::int64_t hi, auto&& f) {
    serial_for(lo, hi, f);
  });
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Descending parts, largest first; recursion keeps lexicographic order.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

const ConjugacyClasses& conjugacy_classes(int n) {
  check_degree(n);
  static std::array<ConjugacyClasses, kGroupAlgebraCap + 1> cache;
  static std::array<std::once_flag, kGroupAlgebraCap + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    ConjugacyClasses cc;
    cc.n = n;
    cc.types = partitions_of(n);
    cc.sizes.assign(cc.types.size(), 0);
    cc.representatives.resize(cc.types.size(), Permutation(n));
    const std::vector<Permutation>& perms = all_permutations(n);
    cc.class_of_rank.resize(perms.size());
    std::vector<bool> have_rep(cc.types.size(), false);
    for (std::size_t r = 0; r < perms.size(); ++r) {
      int idx = cc.index_of_type(perms[r].cycle_type());
      cc.class_of_rank[r] = idx;
      ++cc.sizes[static_cast<std::size_t>(idx)];
      if (!have_rep[static_cast<std::size_t>(idx)]) {
        have_rep[static_cast<std::size_t>(idx)] = true;
        cc.representatives[static_cast<std::size_t>(idx)] = perms[r];
      }
    }
    cache[static_cast<std::size_t>(n)] = std::move(cc);
  });
  return cache[static_cast<std::size_t>(n)];
}

int ConjugacyClasses::index_of_type(const std::vector<int>& type) const {
  for (std::size_t i = 0; i < types.size(); ++i)
    if (types[i] == type) return static_cast<int>(i);
  return -1;
}

}  // namespace freeconv
