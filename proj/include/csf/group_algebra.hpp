#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "csf/character.hpp"
#include "csf/permutation.hpp"
#include "csf/pointed_symfun.hpp"
#include "csf/symfun.hpp"

namespace csf {

// Sparse element of the rational group algebra of S_n.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  static GroupAlgebraElement zero(int n) { return GroupAlgebraElement(n); }
  static GroupAlgebraElement identity(int n) {
    GroupAlgebraElement a(n);
    a.add_term(Permutation::identity(n), 1);
    return a;
  }
  static GroupAlgebraElement of(const Permutation& p, Rat c = Rat(1)) {
    GroupAlgebraElement a(p.n());
    a.add_term(p, std::move(c));
    return a;
  }

  int n() const { return n_; }
  const std::unordered_map<Permutation, Rat, PermutationHash>& terms() const {
    return terms_;
  }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& p, Rat c) {
    if (c == 0) return;
    if (p.n() != n_) throw std::invalid_argument("permutation size mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Coefficient of the identity permutation, written [1]alpha.
  Rat identity_coeff() const { return coeff(Permutation::identity(n_)); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
    check_n(o);
    GroupAlgebraElement a = *this;
    for (const auto& [p, c] : o.terms_) a.add_term(p, c);
    return a;
  }
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
    return *this + o * Rat(-1);
  }
  GroupAlgebraElement operator*(const Rat& s) const {
    GroupAlgebraElement a(n_);
    if (s == 0) return a;
    for (const auto& [p, c] : terms_) a.terms_.emplace(p, c * s);
    return a;
  }
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
    check_n(o);
    GroupAlgebraElement a(n_);
    for (const auto& [p, c] : terms_)
      for (const auto& [q, d] : o.terms_) a.add_term(p.compose(q), c * d);
    return a;
  }
  bool operator==(const GroupAlgebraElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  // Adjoint with respect to the inner product making S_n orthonormal.
  GroupAlgebraElement star() const {
    GroupAlgebraElement a(n_);
    for (const auto& [p, c] : terms_) a.terms_.emplace(p.inverse(), c);
    return a;
  }

  bool is_hermitian() const { return *this == star(); }

  // Frobenius characteristic: sigma -> p_cyc(sigma) / n!.
  SymFun ch() const {
    SymFun f(Basis::p);
    Rat scale = Rat(1) / Rat(factorial(n_));
    for (const auto& [p, c] : terms_) f.add_term(p.cycle_type(), c * scale);
    return f;
  }

  // Pointed Frobenius characteristic at root v (1-based):
  // sigma -> p_{cyc_v^-} t^{cyc_v^+ - 1} / (n-1)!.
  PointedSymFun pointed_ch(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("root out of range");
    PointedSymFun f;
    Rat scale = Rat(1) / Rat(factorial(n_ - 1));
    for (const auto& [p, c] : terms_)
      f.add_term({p.cycle_type_avoiding(v - 1), p.cycle_length_through(v - 1) - 1},
                 c * scale);
    return f;
  }

  // Trace in the regular representation: n! [1]alpha.
  Rat regular_trace() const { return identity_coeff() * factorial(n_); }

  // Matrix of x -> alpha x on C[S_n], rows/columns indexed by Lehmer rank.
  RatMatrix regular_matrix() const {
    Int size = factorial(n_);
    int dim = size.convert_to<int>();
    RatMatrix m(dim, dim);
    std::vector<int> img(n_);
    std::iota(img.begin(), img.end(), 0);
    do {
      Permutation s(img);
      int col = static_cast<int>(s.rank());
      for (const auto& [p, c] : terms_) m(static_cast<int>(p.compose(s).rank()), col) = c;
    } while (std::next_permutation(img.begin(), img.end()));
    return m;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Permutation, Rat>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string s;
    for (const auto& [p, c] : sorted) {
      if (!s.empty()) s += " + ";
      s += rat_to_string(c) + "*" + p.to_string();
    }
    return s;
  }

 private:
  void check_n(const GroupAlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("group algebra size mismatch");
  }

  int n_;
  std::unordered_map<Permutation, Rat, PermutationHash> terms_;
};

// 1 - (a b), 1-based vertex labels.
inline GroupAlgebraElement one_minus_transposition(int n, int a, int b) {
  GroupAlgebraElement e = GroupAlgebraElement::identity(n);
  e.add_term(Permutation::transposition(n, a - 1, b - 1), -1);
  return e;
}

// Central idempotent eps_lambda = (f^lambda / n!) sum_sigma chi^lambda(sigma) sigma.
inline GroupAlgebraElement idempotent(int n, const Partition& lambda) {
  if (lambda.size() != n) throw std::invalid_argument("idempotent: |lambda| != n");
  GroupAlgebraElement e(n);
  Rat scale = Rat(dim_irrep(lambda)) / Rat(factorial(n));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Permutation s(img);
    Int chi = character(lambda, s.cycle_type());
    if (chi != 0) e.add_term(s, scale * Rat(chi));
  } while (std::next_permutation(img.begin(), img.end()));
  return e;
}

// Embed an element of S_m into S_n fixing the remaining top labels.
inline GroupAlgebraElement embed(const GroupAlgebraElement& a, int n) {
  if (a.n() > n) throw std::invalid_argument("embed: target too small");
  GroupAlgebraElement out(n);
  for (const auto& [p, c] : a.terms()) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < a.n(); ++x) img[x] = p(x);
    out.add_term(Permutation(std::move(img)), c);
  }
  return out;
}

// eps_{lambda,i} = eps_{lambda down i} eps_lambda, with eps_{lambda down i}
// viewed inside C[S_{n-1}] fixing the last point.
inline GroupAlgebraElement pointed_idempotent(int n, const Partition& lambda, int i) {
  GroupAlgebraElement down = embed(idempotent(n - 1, lambda.down(i)), n);
  return down * idempotent(n, lambda);
}

// circ product: alpha in C[S_n], beta on the window {n, ..., n+m-1} given as an
// element of C[S_m] on labels 1..m with 1 playing the role of n. Returns
// (1/((n-1)!(m-1)!)) sum_{sigma(n)=n} sigma alpha beta sigma^{-1} in S_{n+m-1}.
inline GroupAlgebraElement circ(const GroupAlgebraElement& alpha,
                                const GroupAlgebraElement& beta_local) {
  int n = alpha.n(), m = beta_local.n();
  int N = n + m - 1;
  GroupAlgebraElement a = embed(alpha, N);
  GroupAlgebraElement b(N);
  for (const auto& [p, c] : beta_local.terms()) {
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < m; ++x) img[n - 1 + x] = n - 1 + p(x);
    b.add_term(Permutation(std::move(img)), c);
  }
  GroupAlgebraElement ab = a * b;
  GroupAlgebraElement out(N);
  // Permutations of [N] fixing n (0-based n-1): permute the other N-1 points.
  std::vector<int> others;
  for (int x = 0; x < N; ++x)
    if (x != n - 1) others.push_back(x);
  std::vector<int> perm = others;
  do {
    std::vector<int> img(N);
    img[n - 1] = n - 1;
    for (std::size_t idx = 0; idx < others.size(); ++idx) img[others[idx]] = perm[idx];
    Permutation sigma(std::move(img));
    Permutation sigma_inv = sigma.inverse();
    for (const auto& [p, c] : ab.terms())
      out.add_term(sigma.compose(p).compose(sigma_inv), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out * (Rat(1) / Rat(factorial(n - 1) * factorial(m - 1)));
}

}  // namespace csf
