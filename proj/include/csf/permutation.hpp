#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

// Permutation of {0, ..., n-1} in one-line form. Composition follows
// (sigma*tau)(x) = sigma(tau(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img_[a], p.img_[b]);
    return p;
  }

  // Cycle (c_0 c_1 ... c_k): c_0 -> c_1 -> ... -> c_k -> c_0.
  static Permutation from_cycle(int n, const std::vector<int>& cycle) {
    Permutation p = identity(n);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.img_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation compose(const Permutation& tau) const {  // this after tau
    if (n() != tau.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(n());
    for (int x = 0; x < n(); ++x) img[x] = img_[tau.img_[x]];
    Permutation p;
    p.img_ = std::move(img);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> img(n());
    for (int x = 0; x < n(); ++x) img[img_[x]] = x;
    Permutation p;
    p.img_ = std::move(img);
    return p;
  }

  bool is_identity() const {
    for (int x = 0; x < n(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int x = 0; x < n(); ++x)
      if (img_[x] != x) s.push_back(x);
    return s;
  }

  Partition cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(n(), false);
    for (int x = 0; x < n(); ++x) {
      if (seen[x]) continue;
      int len = 0, y = x;
      while (!seen[y]) {
        seen[y] = true;
        y = img_[y];
        ++len;
      }
      lens.push_back(len);
    }
    return Partition::from_multiset(std::move(lens));
  }

  int sgn() const { return cycle_type().sgn(); }

  int cycle_length_through(int v) const {
    int len = 1, y = img_[v];
    while (y != v) {
      y = img_[y];
      ++len;
    }
    return len;
  }

  // Cycle type of the cycles avoiding v.
  Partition cycle_type_avoiding(int v) const {
    std::vector<int> lens;
    std::vector<bool> seen(n(), false);
    int y = v;
    do {
      seen[y] = true;
      y = img_[y];
    } while (y != v);
    for (int x = 0; x < n(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      int z = x;
      while (!seen[z]) {
        seen[z] = true;
        z = img_[z];
        ++len;
      }
      lens.push_back(len);
    }
    return Partition::from_multiset(std::move(lens));
  }

  // Factorization into adjacent transpositions s_i = (i, i+1), returned in
  // product order: sigma = s[0] * s[1] * ... * s[last].
  std::vector<int> adjacent_factorization() const {
    std::vector<int> w = img_, factors;
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (int i = 0; i + 1 < n(); ++i) {
        if (w[i] > w[i + 1]) {
          std::swap(w[i], w[i + 1]);
          factors.push_back(i);
          progressed = true;
        }
      }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
  }

  // Lexicographic (Lehmer) rank among all permutations of n.
  std::uint64_t rank() const {
    std::uint64_t r = 0;
    for (int i = 0; i < n(); ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n(); ++j) smaller += (img_[j] < img_[i]);
      r = r * (n() - i) + smaller;
    }
    return r;
  }

  static Permutation unrank(int n, std::uint64_t r) {
    std::vector<int> avail(n), img(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<std::uint64_t> digits(n);
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = r % (n - i);
      r /= (n - i);
    }
    for (int i = 0; i < n; ++i) {
      img[i] = avail[digits[i]];
      avail.erase(avail.begin() + digits[i]);
    }
    return Permutation(std::move(img));
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int v : img_) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }

  // 1-based cycle notation for display.
  std::string to_string() const {
    std::vector<bool> seen(n(), false);
    std::string s;
    for (int x = 0; x < n(); ++x) {
      if (seen[x] || img_[x] == x) {
        seen[x] = true;
        continue;
      }
      s += "(";
      int y = x;
      bool first = true;
      while (!seen[y]) {
        seen[y] = true;
        if (!first) s += " ";
        s += std::to_string(y + 1);
        first = false;
        y = img_[y];
      }
      s += ")";
    }
    return s.empty() ? "id" : s;
  }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// All cycles (as permutations of [n]) whose support is exactly the given set;
// there are (|set|-1)! of them.
inline std::vector<Permutation> cycles_with_support(int n, std::vector<int> set) {
  std::vector<Permutation> out;
  if (set.size() < 2) return out;
  std::sort(set.begin(), set.end());
  std::vector<int> rest(set.begin() + 1, set.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> cycle;
    cycle.push_back(set[0]);
    for (int v : rest) cycle.push_back(v);
    out.push_back(Permutation::from_cycle(n, cycle));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace csf
