#include "freeconv/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "freeconv/common.hpp"

namespace freeconv {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
}

}  // namespace

Permutation::Permutation(int n) : n_(n) {
  check_degree(n);
  for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation::Permutation(int n, const std::vector<int>& images_one_based) : n_(n) {
  check_degree(n);
  if (static_cast<int>(images_one_based.size()) != n)
    throw std::invalid_argument("one-line notation must list exactly n images");
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    int v = images_one_based[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images must be a bijection of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::array<bool, kMaxDegree> used{};
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      int from = c[j], to = c[(j + 1) % c.size()];
      if (from < 1 || from > n || to < 1 || to > n)
        throw std::invalid_argument("cycle entry out of range");
      if (used[static_cast<std::size_t>(from - 1)])
        throw std::invalid_argument("cycles must be disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      p.img_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

Permutation Permutation::long_cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
  return p;
}

Permutation Permutation::from_cycle_type(const std::vector<int>& lengths) {
  int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  check_degree(n);
  Permutation p(n);
  int base = 0;
  for (int len : lengths) {
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
    for (int j = 0; j < len; ++j)
      p.img_[static_cast<std::size_t>(base + j)] = static_cast<std::uint8_t>(base + (j + 1) % len);
    base += len;
  }
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
  return v;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("degree mismatch in permutation product");
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i)
    r.img_[static_cast<std::size_t>(i)] = img_[rhs.img_[static_cast<std::size_t>(i)]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i)
    r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

int Permutation::cycle_count() const {
  std::array<bool, kMaxDegree> seen{};
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = img_[static_cast<std::size_t>(j)];
    }
  }
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j + 1);
      j = img_[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(c));
  }
  return out;  // outer order is by minimal element because i ascends
}

std::vector<std::vector<int>> Permutation::nontrivial_cycles() const {
  auto cs = cycles();
  std::vector<std::vector<int>> out;
  for (auto& c : cs)
    if (c.size() >= 2) out.push_back(std::move(c));
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int Permutation::support_size() const {
  int s = 0;
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) ++s;
  return s;
}

bool Permutation::operator==(const Permutation& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != o.img_[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Permutation::operator<(const Permutation& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (int i = 0; i < n_; ++i) {
    if (img_[static_cast<std::size_t>(i)] != o.img_[static_cast<std::size_t>(i)])
      return img_[static_cast<std::size_t>(i)] < o.img_[static_cast<std::size_t>(i)];
  }
  return false;
}

std::string Permutation::to_cycle_string() const {
  auto cs = nontrivial_cycles();
  if (cs.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << ' ';
      os << c[j];
    }
    os << ')';
  }
  return os.str();
}

int cayley_distance(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in cayley_distance");
  return a.inverse().compose(b).norm();
}

bool geodesic_leq(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in geodesic_leq");
  return a.norm() + cayley_distance(a, b) == b.norm();
}

std::vector<Permutation> cycles_below(const Permutation& sigma, int m) {
  const int n = sigma.degree();
  if (m < 2 || m > n) throw std::invalid_argument("cycle length m must satisfy 2 <= m <= degree");
  std::vector<Permutation> out;
  const int target = sigma.norm() - (m - 1);
  if (target < 0) return out;

  // Enumerate supports as ascending m-subsets, then the (m-1)! cyclic orders
  // anchored at the subset minimum.
  std::vector<int> subset(static_cast<std::size_t>(m));
  std::vector<int> rest(static_cast<std::size_t>(m - 1));
  auto emit_subset = [&]() {
    std::copy(subset.begin() + 1, subset.end(), rest.begin());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> cyc;
      cyc.reserve(static_cast<std::size_t>(m));
      cyc.push_back(subset[0]);
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      Permutation c = Permutation::from_cycles(n, {cyc});
      if (c.compose(sigma).norm() == target) out.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  // Standard ascending-combination enumeration.
  for (int i = 0; i < m; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    emit_subset();
    int i = m - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t perm_rank(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.image(j) < p.image(i)) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation perm_unrank(int n, std::uint64_t r) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    std::uint64_t d = r / f;
    r %= f;
    images.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(n, images);
}

const std::vector<Permutation>& all_permutations(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_permutations supports degrees 1..8");
  static std::vector<Permutation> cache[9];
  static std::once_flag flags[9];
  std::call_once(flags[n], [n]() {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> all;
    all.reserve(factorial(n));
    do {
      all.emplace_back(n, images);
    } while (std::next_permutation(images.begin(), images.end()));
    cache[n] = std::move(all);
  });
  return cache[n];
}

}  // namespace freeconv
