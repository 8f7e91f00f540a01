#include "freeconv/noncrossing.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace freeconv {

namespace {

using Blocks = std::vector<std::vector<int>>;

void canonicalize(Blocks& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}

/// Two canonical blocks cross iff their merged order has >= 4 alternation runs.
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  int runs = 0, last = -1;
  while (i < a.size() || j < b.size()) {
    int which;
    if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
      which = 0;
      ++i;
    } else {
      which = 1;
      ++j;
    }
    if (which != last) {
      ++runs;
      last = which;
    }
  }
  return runs >= 4;
}

/// All noncrossing partitions of the ascending label list. The block of the
/// least label may be any subset; the gaps it leaves partition independently,
/// so the enumeration is output-linear.
std::vector<Blocks> nc_of(const std::vector<int>& labels) {
  std::vector<Blocks> result;
  if (labels.empty()) {
    result.push_back({});
    return result;
  }
  const int m = static_cast<int>(labels.size());
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> block{labels[0]};
    std::vector<std::vector<int>> gaps;
    std::vector<int> current;
    for (int i = 1; i < m; ++i) {
      if (mask & (1u << (i - 1))) {
        gaps.push_back(current);
        current.clear();
        block.push_back(labels[static_cast<std::size_t>(i)]);
      } else {
        current.push_back(labels[static_cast<std::size_t>(i)]);
      }
    }
    gaps.push_back(current);

    std::vector<std::vector<Blocks>> gap_parts;
    gap_parts.reserve(gaps.size());
    for (const auto& g : gaps) gap_parts.push_back(nc_of(g));

    // Cartesian product over the gaps.
    std::vector<std::size_t> idx(gaps.size(), 0);
    while (true) {
      Blocks p{block};
      for (std::size_t g = 0; g < gaps.size(); ++g)
        for (const auto& blk : gap_parts[g][idx[g]]) p.push_back(blk);
      result.push_back(std::move(p));
      std::size_t g = 0;
      while (g < gaps.size() && ++idx[g] == gap_parts[g].size()) {
        idx[g] = 0;
        ++g;
      }
      if (g == gaps.size()) break;
    }
  }
  return result;
}

}  // namespace

bool is_noncrossing(const std::vector<std::vector<int>>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks_cross(blocks[i], blocks[j])) return false;
  return true;
}

NoncrossingPartition make_noncrossing(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1 || n > kNoncrossingCap)
    throw std::invalid_argument("partition size must be in 1.." + std::to_string(kNoncrossingCap));
  for (const auto& b : blocks)
    if (b.empty()) throw std::invalid_argument("empty block");
  canonicalize(blocks);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int covered = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("blocks must be disjoint subsets of {1..n}");
      seen[static_cast<std::size_t>(x - 1)] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks must cover {1..n}");
  if (!is_noncrossing(blocks)) throw std::invalid_argument("partition has a crossing");
  return NoncrossingPartition{n, std::move(blocks)};
}

bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  if (a.n != b.n) throw std::invalid_argument("size mismatch in partition refinement");
  std::vector<int> owner(static_cast<std::size_t>(b.n) + 1, -1);
  for (std::size_t k = 0; k < b.blocks.size(); ++k)
    for (int x : b.blocks[k]) owner[static_cast<std::size_t>(x)] = static_cast<int>(k);
  for (const auto& blk : a.blocks) {
    int o = owner[static_cast<std::size_t>(blk.front())];
    for (int x : blk)
      if (owner[static_cast<std::size_t>(x)] != o) return false;
  }
  return true;
}

NoncrossingPartition discrete_partition(int n) {
  Blocks b;
  for (int i = 1; i <= n; ++i) b.push_back({i});
  return make_noncrossing(n, std::move(b));
}

NoncrossingPartition full_partition(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return make_noncrossing(n, {all});
}

Permutation biane(const NoncrossingPartition& p) {
  return Permutation::from_cycles(p.n, p.blocks);
}

NoncrossingPartition partition_from_cycles(const Permutation& s) {
  Blocks blocks;
  for (auto& c : s.cycles()) blocks.push_back(std::move(c));
  return make_noncrossing(s.degree(), std::move(blocks));
}

std::vector<std::pair<NoncrossingPartition, Permutation>> enumerate_noncrossing(int n) {
  if (n < 1 || n > kNoncrossingCap)
    throw std::invalid_argument("enumerate_noncrossing cap is n <= " + std::to_string(kNoncrossingCap));
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::pair<NoncrossingPartition, Permutation>> out;
  for (auto& blocks : nc_of(labels)) {
    canonicalize(blocks);
    NoncrossingPartition p{n, std::move(blocks)};
    Permutation img = biane(p);
    out.emplace_back(std::move(p), img);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

NoncrossingPartition kreweras(const NoncrossingPartition& pi, const NoncrossingPartition& top) {
  if (!refines(pi, top)) throw std::invalid_argument("kreweras: pi must refine top");
  Permutation q = biane(pi).inverse().compose(biane(top));
  return partition_from_cycles(q);
}

}  // namespace freeconv
