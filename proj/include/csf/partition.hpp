#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/rational.hpp"

namespace csf {

// Integer partition: weakly decreasing positive parts. The empty partition is
// allowed and denotes the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    normalize_check();
  }
  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize_check(); }

  // Sorts a part multiset into partition form.
  static Partition from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int idx) const { return parts_[idx]; }

  int multiplicity(int value) const {
    int m = 0;
    for (int p : parts_) m += (p == value);
    return m;
  }

  std::vector<int> distinct_parts() const {
    std::vector<int> d;
    for (int p : parts_)
      if (d.empty() || d.back() != p) d.push_back(p);
    return d;
  }

  bool contains_part(int value) const { return multiplicity(value) > 0; }

  // Diagram containment, row by row.
  bool subdiagram_of(const Partition& outer) const {
    if (length() > outer.length()) return false;
    for (int r = 0; r < length(); ++r)
      if (parts_[r] > outer.parts_[r]) return false;
    return true;
  }

  Partition with_part(int value) const {
    std::vector<int> p = parts_;
    p.push_back(value);
    return from_multiset(std::move(p));
  }

  Partition without_one_part(int value) const {
    std::vector<int> p = parts_;
    auto it = std::find(p.begin(), p.end(), value);
    if (it == p.end()) throw std::invalid_argument("part not present");
    p.erase(it);
    return Partition(std::move(p));
  }

  Partition merged_with(const Partition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return from_multiset(std::move(p));
  }

  // lambda^{down i}: one copy of i becomes i-1 (dropped when i = 1). Valid for
  // every distinct part, acting on the last copy.
  Partition down(int i) const {
    if (!contains_part(i)) throw std::invalid_argument("down: part not present");
    std::vector<int> p = parts_;
    for (int r = length() - 1; r >= 0; --r) {
      if (p[r] == i) {
        p[r] = i - 1;
        if (p[r] == 0) p.erase(p.begin() + r);
        return Partition(std::move(p));
      }
    }
    throw std::logic_error("unreachable");
  }

  // lambda^{up i}: one copy of i becomes i+1, acting on the first copy.
  Partition up(int i) const {
    if (!contains_part(i)) throw std::invalid_argument("up: part not present");
    std::vector<int> p = parts_;
    for (int r = 0; r < length(); ++r) {
      if (p[r] == i) {
        p[r] = i + 1;
        return Partition(std::move(p));
      }
    }
    throw std::logic_error("unreachable");
  }

  // Pairs (i, lambda^{down i}) over distinct parts, largest i first.
  std::vector<std::pair<int, Partition>> down_moves() const {
    std::vector<std::pair<int, Partition>> out;
    for (int i : distinct_parts()) out.emplace_back(i, down(i));
    return out;
  }

  std::vector<std::pair<int, Partition>> up_moves() const {
    std::vector<std::pair<int, Partition>> out;
    for (int i : distinct_parts()) out.emplace_back(i, up(i));
    return out;
  }

  // Cells (row, col) 0-based that can be removed / added keeping a partition.
  std::vector<std::pair<int, int>> removable_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < length(); ++r)
      if (r + 1 == length() || parts_[r] > parts_[r + 1]) out.emplace_back(r, parts_[r] - 1);
    return out;
  }

  std::vector<std::pair<int, int>> addable_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < length(); ++r)
      if (r == 0 || parts_[r] < parts_[r - 1]) out.emplace_back(r, parts_[r]);
    out.emplace_back(length(), 0);
    return out;
  }

  Partition remove_cell(int row) const {
    std::vector<int> p = parts_;
    p[row] -= 1;
    if (p[row] == 0) p.erase(p.begin() + row);
    return Partition(std::move(p));
  }

  Partition add_cell(int row) const {
    std::vector<int> p = parts_;
    if (row == length())
      p.push_back(1);
    else
      p[row] += 1;
    return Partition(std::move(p));
  }

  Partition conjugate() const {
    std::vector<int> p;
    for (int c = 0; length() > 0 && c < parts_[0]; ++c) {
      int cnt = 0;
      for (int v : parts_) cnt += (v > c);
      p.push_back(cnt);
    }
    return Partition(std::move(p));
  }

  // sgn of a permutation with this cycle type: (-1)^(n - length).
  int sgn() const { return ((size() - length()) % 2 == 0) ? 1 : -1; }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  // Canonical order: smaller size first; within a size, reverse lexicographic,
  // i.e. (n) first and (1^n) last. Used everywhere rows/columns are indexed.
  bool operator<(const Partition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(), parts_.begin(),
                                        parts_.end());
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int p : parts_) {
      h ^= static_cast<std::size_t>(p);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void normalize_check() {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

// All partitions of n in canonical (reverse lexicographic) order.
inline const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::size_t num_partitions(int n) { return partitions_of(n).size(); }

// Centralizer size of a permutation of cycle type lambda: prod i^{m_i} m_i!.
inline Int z_of(const Partition& lambda) {
  Int z = 1;
  for (int i : lambda.distinct_parts()) {
    int m = lambda.multiplicity(i);
    z *= int_pow(Int(i), m);
    z *= factorial(m);
  }
  return z;
}

// Hook length formula for the number of standard Young tableaux of shape lambda.
inline Int dim_irrep(const Partition& lambda) {
  int n = lambda.size();
  Partition conj = lambda.conjugate();
  Int num = factorial(n);
  Int den = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) {
      int hook = (lambda.part(r) - c) + (conj.part(c) - r) - 1;
      den *= hook;
    }
  return num / den;
}

// Number of distinct rearrangements of the parts: length! / prod m_i!.
inline Int multiset_permutations(const Partition& lambda) {
  Int r = factorial(lambda.length());
  for (int i : lambda.distinct_parts()) r /= factorial(lambda.multiplicity(i));
  return r;
}

}  // namespace csf
