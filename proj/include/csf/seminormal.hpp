#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "csf/group_algebra.hpp"
#include "csf/ratlinalg.hpp"
#include "csf/tableau.hpp"

namespace csf {

// Young's seminormal form: rational-entry irreducible representation matrices
// indexed by standard tableaux in canonical order. The generator s_k (swapping
// entries k and k+1) acts on e_T with diagonal coefficient 1/d where
// d = content(k+1) - content(k), and couples T to s_k T when both are standard,
// with off-diagonal coefficients 1 (from the d < 0 side) and 1 - 1/d^2.
struct GeneratorAction {
  std::vector<Rat> diag;
  std::vector<int> partner;  // -1 when s_k T is not standard
  std::vector<Rat> cross;    // coefficient of e_{partner} in s_k e_T
};

class SeminormalRep {
 public:
  explicit SeminormalRep(Partition lambda)
      : lambda_(std::move(lambda)), tableaux_(&standard_tableaux(lambda_)) {
    int n = lambda_.size();
    int f = dim();
    std::map<std::vector<int>, int> index;
    for (int t = 0; t < f; ++t) index[(*tableaux_)[t].row_vector()] = t;
    actions_.resize(n >= 1 ? n - 1 : 0);
    for (int k = 1; k <= n - 1; ++k) {
      GeneratorAction act;
      act.diag.resize(f);
      act.partner.assign(f, -1);
      act.cross.resize(f, Rat(0));
      for (int t = 0; t < f; ++t) {
        const StandardTableau& T = (*tableaux_)[t];
        int d = T.content(k + 1) - T.content(k);
        act.diag[t] = Rat(1) / Rat(d);
        auto swapped = T.swapped(k);
        if (swapped) {
          act.partner[t] = index.at(swapped->row_vector());
          act.cross[t] = (d < 0) ? Rat(1) : Rat(1) - Rat(1) / Rat(Int(d) * d);
        }
      }
      actions_[k - 1] = std::move(act);
    }
    double_gens_.resize(actions_.size());
    for (std::size_t g = 0; g < actions_.size(); ++g) {
      std::vector<double> m(f * f, 0.0);
      for (int t = 0; t < f; ++t) {
        m[t * f + t] = rat_to_double(actions_[g].diag[t]);
        if (actions_[g].partner[t] >= 0)
          m[actions_[g].partner[t] * f + t] = rat_to_double(actions_[g].cross[t]);
      }
      double_gens_[g] = std::move(m);
    }
  }

  const Partition& lambda() const { return lambda_; }
  int dim() const { return static_cast<int>(tableaux_->size()); }
  const std::vector<StandardTableau>& tableaux() const { return *tableaux_; }

  // v <- rho(s_k) v, O(dim).
  std::vector<Rat> apply_generator(int k, const std::vector<Rat>& v) const {
    const GeneratorAction& act = actions_[k - 1];
    std::vector<Rat> out(v.size(), Rat(0));
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t] == 0) continue;
      out[t] += act.diag[t] * v[t];
      if (act.partner[t] >= 0) out[act.partner[t]] += act.cross[t] * v[t];
    }
    return out;
  }

  std::vector<Rat> apply_permutation(const Permutation& sigma,
                                     std::vector<Rat> v) const {
    auto factors = sigma.adjacent_factorization();
    // sigma = s_{j1} ... s_{jm} composes right to left on vectors.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      v = apply_generator(*it + 1, v);
    return v;
  }

  RatMatrix matrix(const Permutation& sigma) const {
    int f = dim();
    RatMatrix m(f, f);
    for (int col = 0; col < f; ++col) {
      std::vector<Rat> v(f, Rat(0));
      v[col] = 1;
      v = apply_permutation(sigma, std::move(v));
      for (int row = 0; row < f; ++row) m(row, col) = v[row];
    }
    return m;
  }

  RatMatrix matrix(const GroupAlgebraElement& alpha) const {
    if (alpha.n() != lambda_.size()) throw std::invalid_argument("size mismatch");
    int f = dim();
    RatMatrix m(f, f);
    for (const auto& [sigma, c] : alpha.terms()) {
      for (int col = 0; col < f; ++col) {
        std::vector<Rat> v(f, Rat(0));
        v[col] = 1;
        v = apply_permutation(sigma, std::move(v));
        for (int row = 0; row < f; ++row)
          if (v[row] != 0) m(row, col) += c * v[row];
      }
    }
    return m;
  }

  Rat trace(const GroupAlgebraElement& alpha) const {
    Rat tr = 0;
    int f = dim();
    for (const auto& [sigma, c] : alpha.terms()) {
      for (int col = 0; col < f; ++col) {
        std::vector<Rat> v(f, Rat(0));
        v[col] = 1;
        v = apply_permutation(sigma, std::move(v));
        if (v[col] != 0) tr += c * v[col];
      }
    }
    return tr;
  }

  // Partial trace over basis tableaux whose entry n sits in the corner
  // lambda / lambda^{down i}; this is tr(rho(alpha) restricted to the
  // S_{n-1}-branch V^{lambda down i}).
  Rat branch_partial_trace(int i, const GroupAlgebraElement& alpha) const {
    int n = lambda_.size();
    Partition nu = lambda_.down(i);
    Rat tr = 0;
    int f = dim();
    for (const auto& [sigma, c] : alpha.terms()) {
      for (int col = 0; col < f; ++col) {
        if (!((*tableaux_)[col].prefix_shape(n - 1) == nu)) continue;
        std::vector<Rat> v(f, Rat(0));
        v[col] = 1;
        v = apply_permutation(sigma, std::move(v));
        if (v[col] != 0) tr += c * v[col];
      }
    }
    return tr;
  }

  // Generator matrices as row-major double arrays; index k-1 for s_k.
  const std::vector<std::vector<double>>& double_generators() const {
    return double_gens_;
  }

 private:
  Partition lambda_;
  const std::vector<StandardTableau>* tableaux_;
  std::vector<GeneratorAction> actions_;
  std::vector<std::vector<double>> double_gens_;
};

// Shared per-shape representation objects.
inline const SeminormalRep& seminormal_rep(const Partition& lambda) {
  static std::map<std::vector<int>, SeminormalRep> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lambda.parts());
  if (it != cache.end()) return it->second;
  return cache.emplace(lambda.parts(), SeminormalRep(lambda)).first->second;
}

inline RatMatrix irrep_matrix(const Partition& lambda, const GroupAlgebraElement& alpha) {
  return seminormal_rep(lambda).matrix(alpha);
}

inline Rat irrep_trace(const Partition& lambda, const GroupAlgebraElement& alpha) {
  return seminormal_rep(lambda).trace(alpha);
}

}  // namespace csf
