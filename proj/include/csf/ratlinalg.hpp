#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "csf/ratpoly.hpp"
#include "csf/rational.hpp"

namespace csf {

// Dense exact-rational matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& operator()(int r, int c) const { return a_[r * cols_ + c]; }

  RatMatrix operator+(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }
  RatMatrix operator-(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }
  RatMatrix operator*(const Rat& s) const {
    RatMatrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
  }
  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rat& w = o(k, j);
          if (w != 0) m(i, j) += v * w;
        }
      }
    return m;
  }
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape");
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Rat trace() const {
    Rat t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  int rank() const {
    RatMatrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (m(i, c) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      for (int i = r + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        Rat f = m(i, c) / m(r, c);
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    return r;
  }

  // Solves A X = B exactly (A square nonsingular).
  RatMatrix solve(const RatMatrix& b) const {
    if (rows_ != cols_ || b.rows_ != rows_) throw std::invalid_argument("shape");
    RatMatrix m = *this, rhs = b;
    int n = rows_;
    for (int c = 0; c < n; ++c) {
      int pivot = -1;
      for (int i = c; i < n; ++i)
        if (m(i, c) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) throw std::domain_error("singular matrix");
      m.swap_rows(pivot, c);
      rhs.swap_rows(pivot, c);
      for (int i = c + 1; i < n; ++i) {
        if (m(i, c) == 0) continue;
        Rat f = m(i, c) / m(c, c);
        for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        for (int j = 0; j < rhs.cols_; ++j) rhs(i, j) -= f * rhs(c, j);
      }
    }
    RatMatrix x(n, b.cols_);
    for (int i = n - 1; i >= 0; --i)
      for (int j = 0; j < b.cols_; ++j) {
        Rat acc = rhs(i, j);
        for (int k = i + 1; k < n; ++k) acc -= m(i, k) * x(k, j);
        x(i, j) = acc / m(i, i);
      }
    return x;
  }

  std::vector<Rat> solve_vector(const std::vector<Rat>& b) const {
    RatMatrix rhs(rows_, 1);
    for (int i = 0; i < rows_; ++i) rhs(i, 0) = b[i];
    RatMatrix x = solve(rhs);
    std::vector<Rat> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = x(i, 0);
    return out;
  }

  // Characteristic polynomial det(xI - A) via similarity reduction to upper
  // Hessenberg form and the standard recurrence.
  RatPoly char_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("char_poly: square only");
    int n = rows_;
    if (n == 0) return RatPoly::constant(1);
    RatMatrix h = *this;
    for (int c = 0; c + 2 < n; ++c) {
      int pivot = -1;
      for (int i = c + 1; i < n; ++i)
        if (h(i, c) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      h.swap_rows(pivot, c + 1);
      h.swap_cols(pivot, c + 1);
      for (int i = c + 2; i < n; ++i) {
        if (h(i, c) == 0) continue;
        Rat f = h(i, c) / h(c + 1, c);
        for (int j = 0; j < n; ++j) h(i, j) -= f * h(c + 1, j);
        for (int j = 0; j < n; ++j) h(j, c + 1) += f * h(j, i);
      }
    }
    std::vector<RatPoly> p(n + 1);
    p[0] = RatPoly::constant(1);
    for (int k = 1; k <= n; ++k) {
      RatPoly term = (RatPoly::x() - RatPoly::constant(h(k - 1, k - 1))) * p[k - 1];
      Rat sub = 1;
      for (int m = 1; m < k; ++m) {
        sub *= h(k - m, k - m - 1);
        if (sub == 0) break;
        term = term - p[k - m - 1] * (h(k - m - 1, k - 1) * sub);
      }
      p[k] = std::move(term);
    }
    return p[n];
  }

  // Minimal polynomial via per-vector Krylov annihilators, lcm over the
  // standard basis with an early annihilation check.
  RatPoly min_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("min_poly: square only");
    int n = rows_;
    RatPoly m = RatPoly::constant(1);
    for (int start = 0; start < n; ++start) {
      std::vector<Rat> v(n, Rat(0));
      v[start] = 1;
      if (m.degree() >= 1 && poly_annihilates(m, v)) continue;
      RatPoly local = krylov_annihilator(v);
      RatPoly g = poly_gcd(m, local);
      m = (m * local).divmod(g).first.monic();
      if (m.degree() == n) break;
    }
    return m;
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape");
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool poly_annihilates(const RatPoly& p, const std::vector<Rat>& v) const {
    std::vector<Rat> acc(v.size(), Rat(0));
    for (int k = p.degree(); k >= 0; --k) {
      acc = apply(acc);
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] += p.coeff(k) * v[i];
    }
    for (const Rat& x : acc)
      if (x != 0) return false;
    return true;
  }

  RatPoly krylov_annihilator(std::vector<Rat> v) const {
    int n = rows_;
    // Echelon rows with pivot columns plus the power-expansion of each row.
    std::vector<std::vector<Rat>> ech;
    std::vector<int> pivots;
    std::vector<std::vector<Rat>> combos;
    std::vector<Rat> cur = std::move(v);
    for (int power = 0;; ++power) {
      std::vector<Rat> red = cur;
      std::vector<Rat> combo(power + 1, Rat(0));
      combo[power] = 1;
      for (std::size_t r = 0; r < ech.size(); ++r) {
        const Rat& lead = red[pivots[r]];
        if (lead == 0) continue;
        Rat f = lead / ech[r][pivots[r]];
        for (int j = 0; j < n; ++j) red[j] -= f * ech[r][j];
        for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
      }
      int pivot = -1;
      for (int j = 0; j < n; ++j)
        if (red[j] != 0) {
          pivot = j;
          break;
        }
      if (pivot < 0) return RatPoly(std::move(combo)).monic();
      ech.push_back(std::move(red));
      pivots.push_back(pivot);
      combos.push_back(std::move(combo));
      cur = apply(cur);
    }
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace csf
