#include "freeconv/chains.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace freeconv {

namespace {

void check_cap(const Permutation& sigma) {
  if (sigma.degree() > kChainDegreeCap)
    throw std::invalid_argument("chain operations capped at degree " + std::to_string(kChainDegreeCap));
}

}  // namespace

int IntervalPoset::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

IntervalPoset interval_below(const Permutation& sigma) {
  check_cap(sigma);
  const int n = sigma.degree();

  // Walk downward: predecessors of tau are c*tau with c a cycle and the norms
  // adding up. Everything reachable this way is exactly {tau : tau <= sigma},
  // since a quotient factors into its disjoint cycles one at a time.
  std::unordered_map<std::uint64_t, Permutation> seen;
  std::vector<Permutation> stack{sigma};
  seen.emplace(perm_rank(sigma), sigma);
  while (!stack.empty()) {
    Permutation tau = stack.back();
    stack.pop_back();
    for (int m = 2; m <= n; ++m) {
      if (tau.norm() < m - 1) break;
      for (const auto& c : cycles_below(tau, m)) {
        Permutation p = c.compose(tau);
        auto r = perm_rank(p);
        if (seen.emplace(r, p).second) stack.push_back(p);
      }
    }
  }

  IntervalPoset ip;
  ip.elements.reserve(seen.size());
  for (auto& kv : seen) ip.elements.push_back(kv.second);
  std::sort(ip.elements.begin(), ip.elements.end());
  ip.preds.resize(ip.elements.size());
  for (std::size_t i = 0; i < ip.elements.size(); ++i) {
    const Permutation& tau = ip.elements[i];
    for (int m = 2; m <= n; ++m) {
      if (tau.norm() < m - 1) break;
      for (const auto& c : cycles_below(tau, m)) {
        int j = ip.index_of(c.compose(tau));
        ip.preds[i].emplace_back(j, m);
      }
    }
  }
  ip.sigma_index = ip.index_of(sigma);
  return ip;
}

const IntervalPoset& interval_below_cached(const Permutation& sigma) {
  static std::map<std::pair<int, std::uint64_t>, IntervalPoset> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(sigma.degree(), perm_rank(sigma));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > 64) cache.clear();
  return cache.emplace(key, interval_below(sigma)).first->second;
}

std::vector<std::complex<double>> chain_length_weights(
    const Permutation& sigma, const std::vector<std::complex<double>>& cycle_weight) {
  const IntervalPoset& ip = interval_below_cached(sigma);
  auto weight = [&](int m) -> std::complex<double> {
    return m < static_cast<int>(cycle_weight.size()) ? cycle_weight[static_cast<std::size_t>(m)]
                                                     : std::complex<double>(0.0);
  };
  std::vector<std::complex<double>> g(ip.elements.size(), 0.0), next(ip.elements.size());
  for (auto& v : g) v = 1.0;  // length 0: the one-element chain at each tau
  std::vector<std::complex<double>> out{1.0};
  const int max_len = sigma.norm();
  for (int l = 1; l <= max_len; ++l) {
    for (std::size_t i = 0; i < ip.elements.size(); ++i) {
      std::complex<double> acc = 0.0;
      for (auto [pj, m] : ip.preds[i]) acc += weight(m) * g[static_cast<std::size_t>(pj)];
      next[i] = acc;
    }
    std::swap(g, next);
    out.push_back(g[static_cast<std::size_t>(ip.sigma_index)]);
  }
  return out;
}

std::uint64_t count_simple_chains(const Permutation& sigma) {
  const IntervalPoset& ip = interval_below_cached(sigma);
  std::vector<std::uint64_t> g(ip.elements.size(), 1), next(ip.elements.size());
  std::uint64_t total = 1;
  const int max_len = sigma.norm();
  for (int l = 1; l <= max_len; ++l) {
    for (std::size_t i = 0; i < ip.elements.size(); ++i) {
      std::uint64_t acc = 0;
      for (auto [pj, m] : ip.preds[i]) {
        (void)m;
        acc += g[static_cast<std::size_t>(pj)];
      }
      next[i] = acc;
    }
    std::swap(g, next);
    total += g[static_cast<std::size_t>(ip.sigma_index)];
  }
  return total;
}

void for_each_simple_chain(const Permutation& sigma,
                           const std::function<void(const SimpleChain&)>& fn) {
  const IntervalPoset& ip = interval_below_cached(sigma);

  // Collect chains as index sequences (indices are lex-ordered, so sorting
  // index sequences lexicographically sorts the chains as specified).
  std::vector<std::vector<int>> seqs;
  std::vector<int> rev{ip.sigma_index};
  std::function<void()> dfs = [&]() {
    seqs.emplace_back(rev.rbegin(), rev.rend());
    int front = rev.back();
    for (auto [pj, m] : ip.preds[static_cast<std::size_t>(front)]) {
      (void)m;
      rev.push_back(pj);
      dfs();
      rev.pop_back();
    }
  };
  dfs();
  std::sort(seqs.begin(), seqs.end());

  SimpleChain chain;
  for (const auto& s : seqs) {
    chain.steps.clear();
    for (int idx : s) chain.steps.push_back(ip.elements[static_cast<std::size_t>(idx)]);
    fn(chain);
  }
}

std::vector<SimpleChain> simple_chains_ending_at(const Permutation& sigma) {
  std::vector<SimpleChain> out;
  for_each_simple_chain(sigma, [&](const SimpleChain& c) { out.push_back(c); });
  return out;
}

}  // namespace freeconv
