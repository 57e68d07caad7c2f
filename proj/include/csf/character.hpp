#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

namespace detail {

// Beta-set border strip removal step of the Murnaghan-Nakayama rule.
// beta[j] = lambda_j + (L-1-j), strictly decreasing.
inline std::vector<int> beta_set(const Partition& lambda) {
  int L = lambda.length();
  std::vector<int> beta(L);
  for (int j = 0; j < L; ++j) beta[j] = lambda.part(j) + (L - 1 - j);
  return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int L = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int j = 0; j < L; ++j) {
    int p = beta[j] - (L - 1 - j);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

}  // namespace detail

// Irreducible character chi^lambda(mu) of S_n by the Murnaghan-Nakayama rule,
// memoized on the (lambda, mu) pair.
inline Int character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: |lambda| != |mu|");

  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  static std::mutex mu_lock;

  auto rec = [&](auto&& self, const Partition& lam, const Partition& rho) -> Int {
    if (rho.empty()) return 1;
    std::pair<std::vector<int>, std::vector<int>> key(lam.parts(), rho.parts());
    {
      std::lock_guard<std::mutex> lock(mu_lock);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    int k = rho.part(0);
    Partition rest = rho.without_one_part(k);
    std::vector<int> beta = detail::beta_set(lam);
    Int total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      int b = beta[j] - k;
      if (b < 0) continue;
      bool occupied = false;
      int between = 0;
      for (std::size_t t = 0; t < beta.size(); ++t) {
        if (t == j) continue;
        if (beta[t] == b) occupied = true;
        if (beta[t] > b && beta[t] < beta[j]) ++between;
      }
      if (occupied) continue;
      std::vector<int> nb = beta;
      nb[j] = b;
      Int sub = self(self, detail::partition_from_beta(std::move(nb)), rest);
      total += (between % 2 == 0) ? sub : -sub;
    }
    {
      std::lock_guard<std::mutex> lock(mu_lock);
      memo.emplace(std::move(key), total);
    }
    return total;
  };
  return rec(rec, lambda, mu);
}

// Full character table of S_n: rows lambda, columns mu, both canonical order.
inline const std::vector<std::vector<Int>>& character_table(int n) {
  static std::map<int, std::vector<std::vector<Int>>> cache;
  static std::mutex mu_lock;
  std::lock_guard<std::mutex> lock(mu_lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto& parts = partitions_of(n);
  std::vector<std::vector<Int>> table(parts.size(), std::vector<Int>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      table[i][j] = character(parts[i], parts[j]);
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace csf
