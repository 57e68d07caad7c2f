#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/character.hpp"
#include "csf/partition.hpp"
#include "csf/ratlinalg.hpp"
#include "csf/rational.hpp"

namespace csf {

enum class Basis { p, e, m, s };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

inline Basis basis_from_name(const std::string& s) {
  if (s == "p") return Basis::p;
  if (s == "e") return Basis::e;
  if (s == "m") return Basis::m;
  if (s == "s") return Basis::s;
  throw std::invalid_argument("unknown basis: " + s);
}

// Element of the ring of symmetric functions with exact rational coefficients,
// expressed in a tagged basis. Heterogeneous (mixed-degree) sums are allowed;
// all per-degree operations act degree by degree.
class SymFun {
 public:
  explicit SymFun(Basis basis = Basis::p) : basis_(basis) {}

  static SymFun zero(Basis basis = Basis::p) { return SymFun(basis); }
  static SymFun one(Basis basis = Basis::p) {
    SymFun f(basis);
    f.add_term(Partition{}, 1);
    return f;
  }
  static SymFun single(Basis basis, Partition key, Rat coeff) {
    SymFun f(basis);
    f.add_term(std::move(key), std::move(coeff));
    return f;
  }

  Basis basis() const { return basis_; }
  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Partition key, Rat coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [k, v] : terms_) {
      if (d && *d != k.size()) return false;
      d = k.size();
    }
    return true;
  }

  int degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.size());
    return d;
  }

  SymFun operator+(const SymFun& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in +");
    SymFun f = *this;
    for (const auto& [k, v] : o.terms_) f.add_term(k, v);
    return f;
  }
  SymFun operator-(const SymFun& o) const { return *this + o * Rat(-1); }
  SymFun operator*(const Rat& s) const {
    SymFun f(basis_);
    if (s == 0) return f;
    for (const auto& [k, v] : terms_) f.terms_.emplace(k, v * s);
    return f;
  }

  // Product. Multiplicative bases (p, e) multiply by key concatenation;
  // anything else routes through p and converts back to the left basis.
  SymFun operator*(const SymFun& o) const;

  bool operator==(const SymFun& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return in_basis(Basis::p).terms_ == o.in_basis(Basis::p).terms_;
  }

  SymFun in_basis(Basis target) const;

  // Substitute k ones for the variables: on the p basis p_m -> k.
  Rat specialize_ones(int k) const {
    SymFun p = in_basis(Basis::p);
    Rat total = 0;
    for (const auto& [key, v] : p.terms_) total += v * rat_pow(Rat(k), key.length());
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += rat_to_string(v) + "*" + basis_name(basis_) + k.to_string();
    }
    return s;
  }

 private:
  Basis basis_;
  std::map<Partition, Rat> terms_;
};

namespace detail {

// e_m and h_m in the power sum basis (cached).
inline const std::map<Partition, Rat>& e_in_p(int m) {
  static std::map<int, std::map<Partition, Rat>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::map<Partition, Rat> out;
  for (const auto& mu_p : partitions_of(m)) out[mu_p] = Rat(mu_p.sgn()) / Rat(z_of(mu_p));
  return cache.emplace(m, std::move(out)).first->second;
}

// Multiply an m-basis expansion by p_k.
inline std::map<Partition, Rat> m_times_pk(const std::map<Partition, Rat>& f, int k) {
  std::map<Partition, Rat> out;
  for (const auto& [lam, v] : f) {
    std::vector<int> values = lam.distinct_parts();
    values.push_back(0);
    for (int val : values) {
      Partition nu = (val == 0) ? lam.with_part(k)
                                : lam.without_one_part(val).with_part(val + k);
      Rat c = v * nu.multiplicity(val + k);
      auto it = out.find(nu);
      if (it == out.end())
        out.emplace(std::move(nu), std::move(c));
      else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

// p_mu in the monomial basis.
inline std::map<Partition, Rat> p_in_m(const Partition& mu) {
  std::map<Partition, Rat> f;
  f[Partition{}] = 1;
  for (int part : mu.parts()) f = m_times_pk(f, part);
  return f;
}

// Transition matrix from basis b to p for a fixed degree: column index is the
// b-basis key, row index the p-basis key, canonical partition order both ways.
inline const RatMatrix& basis_to_p_matrix(Basis b, int degree) {
  static std::map<std::pair<int, int>, RatMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(b), degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const auto& parts = partitions_of(degree);
  int dim = static_cast<int>(parts.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < dim; ++i) index[parts[i].parts()] = i;
  RatMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    std::map<Partition, Rat> col;
    if (b == Basis::e) {
      col[Partition{}] = 1;
      for (int part : parts[j].parts()) {
        std::map<Partition, Rat> next;
        for (const auto& [k1, v1] : col)
          for (const auto& [k2, v2] : e_in_p(part)) {
            Partition merged = k1.merged_with(k2);
            next[merged] += v1 * v2;
          }
        col = std::move(next);
      }
    } else if (b == Basis::s) {
      for (const auto& mu_p : partitions_of(degree))
        col[mu_p] = Rat(character(parts[j], mu_p)) / Rat(z_of(mu_p));
    } else if (b == Basis::m) {
      // Columns of the inverse of [p -> m]; fill after the loop instead.
      continue;
    }
    for (const auto& [k, v] : col) m(index.at(k.parts()), j) = v;
  }
  if (b == Basis::m) {
    // [m -> p] = inverse of [p -> m].
    RatMatrix ptom(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, v] : p_in_m(parts[j])) ptom(index.at(k.parts()), j) = v;
    m = ptom.solve(RatMatrix::identity(dim));
  }
  return cache.emplace(key, std::move(m)).first->second;
}

}  // namespace detail

inline SymFun SymFun::in_basis(Basis target) const {
  if (target == basis_) return *this;

  // First to p, degree by degree.
  SymFun in_p(Basis::p);
  if (basis_ == Basis::p) {
    in_p = *this;
  } else {
    std::map<int, std::map<Partition, Rat>> by_degree;
    for (const auto& [k, v] : terms_) by_degree[k.size()][k] = v;
    for (const auto& [d, terms] : by_degree) {
      const auto& parts = partitions_of(d);
      const RatMatrix& mtx = detail::basis_to_p_matrix(basis_, d);
      std::vector<Rat> coeffs(parts.size(), Rat(0));
      for (std::size_t j = 0; j < parts.size(); ++j) {
        auto it = terms.find(parts[j]);
        if (it != terms.end()) coeffs[j] = it->second;
      }
      std::vector<Rat> pc = mtx.apply(coeffs);
      for (std::size_t i = 0; i < parts.size(); ++i) in_p.add_term(parts[i], pc[i]);
    }
  }
  if (target == Basis::p) return in_p;

  SymFun out(target);
  std::map<int, std::map<Partition, Rat>> by_degree;
  for (const auto& [k, v] : in_p.terms_) by_degree[k.size()][k] = v;
  for (const auto& [d, terms] : by_degree) {
    const auto& parts = partitions_of(d);
    if (target == Basis::s) {
      // [s_lambda] F = sum_mu x_mu chi^lambda(mu); no solve needed.
      for (const auto& lambda : parts) {
        Rat c = 0;
        for (const auto& [mu_p, v] : terms) c += v * Rat(character(lambda, mu_p));
        out.add_term(lambda, c);
      }
    } else if (target == Basis::m) {
      std::map<Partition, Rat> acc;
      for (const auto& [mu_p, v] : terms)
        for (const auto& [k, w] : detail::p_in_m(mu_p)) acc[k] += v * w;
      for (auto& [k, v] : acc) out.add_term(k, v);
    } else {  // e
      const RatMatrix& mtx = detail::basis_to_p_matrix(Basis::e, d);
      std::vector<Rat> rhs(parts.size(), Rat(0));
      for (std::size_t j = 0; j < parts.size(); ++j) {
        auto it = terms.find(parts[j]);
        if (it != terms.end()) rhs[j] = it->second;
      }
      std::vector<Rat> sol = mtx.solve_vector(rhs);
      for (std::size_t j = 0; j < parts.size(); ++j) out.add_term(parts[j], sol[j]);
    }
  }
  return out;
}

inline SymFun SymFun::operator*(const SymFun& o) const {
  if (basis_ == o.basis_ && (basis_ == Basis::p || basis_ == Basis::e)) {
    SymFun f(basis_);
    for (const auto& [k1, v1] : terms_)
      for (const auto& [k2, v2] : o.terms_) f.add_term(k1.merged_with(k2), v1 * v2);
    return f;
  }
  SymFun prod = in_basis(Basis::p) * o.in_basis(Basis::p);
  return prod.in_basis(basis_);
}

// Convenience constructors.
inline SymFun sym_p(const Partition& mu) { return SymFun::single(Basis::p, mu, 1); }
inline SymFun sym_e(int m) {
  return m == 0 ? SymFun::one(Basis::p)
                : SymFun::single(Basis::e, Partition{m}, 1).in_basis(Basis::p);
}
inline SymFun sym_e(const Partition& lambda) {
  return SymFun::single(Basis::e, lambda, 1).in_basis(Basis::p);
}
inline SymFun sym_h(int m) {
  SymFun f(Basis::p);
  for (const auto& mu : partitions_of(m)) f.add_term(mu, Rat(1) / Rat(z_of(mu)));
  return f;
}
inline SymFun sym_s(const Partition& lambda) {
  return SymFun::single(Basis::s, lambda, 1).in_basis(Basis::p);
}

struct PositivityReport {
  SymFun expansion{Basis::p};
  bool nonnegative = true;
  std::optional<Partition> witness;  // first negative key in canonical order
};

inline PositivityReport positivity(const SymFun& f, Basis basis) {
  PositivityReport r;
  r.expansion = f.in_basis(basis);
  for (const auto& [k, v] : r.expansion.terms()) {
    if (v < 0) {
      r.nonnegative = false;
      r.witness = k;
      break;
    }
  }
  return r;
}

}  // namespace csf
