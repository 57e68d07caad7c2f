#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "csf/symfun.hpp"

namespace csf {

// Key of a Lambda[t] term: p_mu * t^k.
struct PtKey {
  Partition mu;
  int k = 0;

  int pointed_degree() const { return mu.size() + k; }
  bool operator==(const PtKey& o) const { return k == o.k && mu == o.mu; }
  bool operator<(const PtKey& o) const {
    if (pointed_degree() != o.pointed_degree()) return pointed_degree() < o.pointed_degree();
    if (k != o.k) return k < o.k;
    return mu < o.mu;
  }
  std::string to_string() const {
    return "p" + mu.to_string() + (k ? "*t^" + std::to_string(k) : "");
  }
};

// Element of Lambda[t] in the p-t monomial basis, exact rational coefficients.
class PointedSymFun {
 public:
  PointedSymFun() = default;

  static PointedSymFun zero() { return PointedSymFun(); }
  static PointedSymFun one() {
    PointedSymFun f;
    f.add_term({Partition{}, 0}, 1);
    return f;
  }
  static PointedSymFun t_power(int k) {
    PointedSymFun f;
    f.add_term({Partition{}, k}, 1);
    return f;
  }
  static PointedSymFun from_sym(const SymFun& s) {
    PointedSymFun f;
    for (const auto& [key, v] : s.in_basis(Basis::p).terms()) f.add_term({key, 0}, v);
    return f;
  }

  const std::map<PtKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(PtKey key, Rat coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const PtKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  PointedSymFun operator+(const PointedSymFun& o) const {
    PointedSymFun f = *this;
    for (const auto& [k, v] : o.terms_) f.add_term(k, v);
    return f;
  }
  PointedSymFun operator-(const PointedSymFun& o) const { return *this + o * Rat(-1); }
  PointedSymFun operator*(const Rat& s) const {
    PointedSymFun f;
    if (s == 0) return f;
    for (const auto& [k, v] : terms_) f.terms_.emplace(k, v * s);
    return f;
  }
  PointedSymFun operator*(const PointedSymFun& o) const {
    PointedSymFun f;
    for (const auto& [k1, v1] : terms_)
      for (const auto& [k2, v2] : o.terms_)
        f.add_term({k1.mu.merged_with(k2.mu), k1.k + k2.k}, v1 * v2);
    return f;
  }
  PointedSymFun operator*(const SymFun& s) const { return *this * from_sym(s); }

  bool operator==(const PointedSymFun& o) const { return terms_ == o.terms_; }

  // Homogeneous of pointed degree d when |mu| + k = d on every key.
  std::optional<int> homogeneous_pointed_degree() const {
    std::optional<int> d;
    for (const auto& [key, v] : terms_) {
      if (d && *d != key.pointed_degree()) return std::nullopt;
      d = key.pointed_degree();
    }
    return d;
  }

  int pointed_degree() const {
    int d = 0;
    for (const auto& [key, v] : terms_) d = std::max(d, key.pointed_degree());
    return d;
  }

  // The Lambda-linear map psi: p_mu t^{i-1} -> p_{mu union i}; raises degree by 1.
  SymFun psi() const {
    SymFun out(Basis::p);
    for (const auto& [key, v] : terms_) out.add_term(key.mu.with_part(key.k + 1), v);
    return out;
  }

  PointedSymFun substitute_t_negated() const {
    PointedSymFun f;
    for (const auto& [key, v] : terms_) f.terms_.emplace(key, (key.k % 2) ? -v : v);
    return f;
  }

  // Coefficient of t^k as an element of Lambda (p basis).
  SymFun t_coefficient(int k) const {
    SymFun out(Basis::p);
    for (const auto& [key, v] : terms_)
      if (key.k == k) out.add_term(key.mu, v);
    return out;
  }

  int max_t_power() const {
    int m = 0;
    for (const auto& [key, v] : terms_) m = std::max(m, key.k);
    return m;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += rat_to_string(v) + "*" + k.to_string();
    }
    return s;
  }

 private:
  std::map<PtKey, Rat> terms_;
};

// Expansion in the {m_lambda t^k} basis of Lambda[t].
struct PointedMonomialReport {
  std::map<PtKey, Rat> coefficients;  // key.mu indexes m_mu here
  bool nonnegative = true;
  std::optional<PtKey> witness;
};

inline PointedMonomialReport pointed_monomial_expansion(const PointedSymFun& f) {
  PointedMonomialReport r;
  for (int k = 0; k <= f.max_t_power(); ++k) {
    SymFun part = f.t_coefficient(k).in_basis(Basis::m);
    for (const auto& [key, v] : part.terms()) r.coefficients[{key, k}] = v;
  }
  for (const auto& [key, v] : r.coefficients) {
    if (v < 0) {
      r.nonnegative = false;
      r.witness = key;
      break;
    }
  }
  return r;
}

}  // namespace csf
