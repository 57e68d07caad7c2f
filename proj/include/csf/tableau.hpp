#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

// Standard Young tableau of a given shape, stored as the row index (0-based)
// of each entry 1..n. Columns are recoverable since entries increase along rows.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<int> row_of)
      : shape_(std::move(shape)), row_of_(std::move(row_of)) {
    if (!valid()) throw std::invalid_argument("not a standard tableau");
  }

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(row_of_.size()); }

  int row(int entry) const { return row_of_[entry - 1]; }
  int col(int entry) const {
    int r = row(entry), c = 0;
    for (int e = 1; e < entry; ++e) c += (row_of_[e - 1] == r);
    return c;
  }
  int content(int entry) const { return col(entry) - row(entry); }

  const std::vector<int>& row_vector() const { return row_of_; }

  // Shape after the first k entries; the full chain is the Gelfand-Tsetlin path.
  Partition prefix_shape(int k) const {
    std::vector<int> counts(shape_.length(), 0);
    for (int e = 0; e < k; ++e) counts[row_of_[e]]++;
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return Partition(std::move(counts));
  }

  // Swap entries k and k+1; returns nullopt when the result is not standard
  // (k and k+1 in the same row or column).
  std::optional<StandardTableau> swapped(int k) const {
    int rk = row(k), rk1 = row(k + 1);
    if (rk == rk1) return std::nullopt;
    if (col(k) == col(k + 1)) return std::nullopt;
    std::vector<int> rows = row_of_;
    std::swap(rows[k - 1], rows[k]);
    return StandardTableau(shape_, std::move(rows));
  }

  bool operator==(const StandardTableau& o) const {
    return shape_ == o.shape_ && row_of_ == o.row_of_;
  }

 private:
  bool valid() const {
    if (static_cast<int>(row_of_.size()) != shape_.size()) return false;
    std::vector<int> fill(shape_.length(), 0);
    for (int e = 0; e < static_cast<int>(row_of_.size()); ++e) {
      int r = row_of_[e];
      if (r < 0 || r >= shape_.length()) return false;
      // Cell (r, fill[r]) must exist and, for r > 0, the cell above must
      // already be filled (column-strictness).
      if (fill[r] >= shape_.part(r)) return false;
      if (r > 0 && fill[r - 1] <= fill[r]) return false;
      fill[r]++;
    }
    return true;
  }

  Partition shape_;
  std::vector<int> row_of_;
};

// All standard tableaux of a shape, in canonical order: lexicographic on the
// row vector (row of 1, row of 2, ...). Cached per shape.
inline const std::vector<StandardTableau>& standard_tableaux(const Partition& shape) {
  static std::map<std::vector<int>, std::vector<StandardTableau>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(shape.parts());
  if (it != cache.end()) return it->second;

  std::vector<StandardTableau> out;
  int n = shape.size();
  std::vector<int> fill(shape.length(), 0), rows;
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (fill[r] >= shape.part(r)) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      fill[r]++;
      rows.push_back(r);
      self(self, entry + 1);
      rows.pop_back();
      fill[r]--;
    }
  };
  rec(rec, 1);
  return cache.emplace(shape.parts(), std::move(out)).first->second;
}

}  // namespace csf
