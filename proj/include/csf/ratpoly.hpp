#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csf/rational.hpp"

namespace csf {

// Univariate polynomial over the rationals, coefficients ascending, no
// trailing zeros. The zero polynomial has an empty coefficient vector.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& leading() const { return c_.back(); }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
  }

  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
    return v;
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * int(i);
    return RatPoly(std::move(d));
  }

  RatPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> d = c_;
    Rat lc = d.back();
    for (auto& v : d) v /= lc;
    return RatPoly(std::move(d));
  }

  RatPoly operator+(const RatPoly& o) const {
    std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
    return RatPoly(std::move(d));
  }
  RatPoly operator-(const RatPoly& o) const {
    std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] -= o.c_[i];
    return RatPoly(std::move(d));
  }
  RatPoly operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> d(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(d));
  }
  RatPoly operator*(const Rat& s) const {
    std::vector<Rat> d = c_;
    for (auto& v : d) v *= s;
    return RatPoly(std::move(d));
  }

  // Euclidean division; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& div) const {
    if (div.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quot(std::max<int>(0, degree() - div.degree() + 1), Rat(0));
    for (int k = degree() - div.degree(); k >= 0; --k) {
      if (static_cast<int>(rem.size()) <= k + div.degree()) continue;
      Rat f = rem[k + div.degree()] / div.leading();
      if (f == 0) continue;
      quot[k] = f;
      for (int i = 0; i <= div.degree(); ++i) rem[k + i] -= f * div.c_[i];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
  }

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += rat_to_string(c_[i]) + (i ? "*x^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 1) return p.monic();
  RatPoly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

inline bool is_squarefree(const RatPoly& p) {
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

namespace detail {

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of p at +infinity / -infinity.
inline int sign_at_inf(const RatPoly& p, bool positive_end) {
  if (p.is_zero()) return 0;
  int s = sign_of(p.leading());
  if (!positive_end && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Generalized Sturm chain: f0, f1, then negated Euclidean remainders.
inline std::vector<RatPoly> sturm_chain(RatPoly f0, RatPoly f1) {
  std::vector<RatPoly> chain;
  chain.push_back(std::move(f0));
  if (!f1.is_zero()) chain.push_back(std::move(f1));
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rat(-1));
  }
  return chain;
}

inline int chain_variations_at_inf(const std::vector<RatPoly>& chain, bool positive_end) {
  std::vector<int> signs;
  for (const auto& f : chain) signs.push_back(sign_at_inf(f, positive_end));
  return variations(signs);
}

inline int chain_variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  for (const auto& f : chain) signs.push_back(sign_of(f.eval(x)));
  return variations(signs);
}

}  // namespace detail

// Number of distinct real roots in the open interval (a, b); pass the full
// line with the infinity flags.
inline int count_real_roots(const RatPoly& p, bool from_neg_inf, const Rat& a,
                            bool to_pos_inf, const Rat& b) {
  RatPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(sf, sf.derivative());
  int va = from_neg_inf ? detail::chain_variations_at_inf(chain, false)
                        : detail::chain_variations_at(chain, a);
  int vb = to_pos_inf ? detail::chain_variations_at_inf(chain, true)
                      : detail::chain_variations_at(chain, b);
  int count = va - vb;
  // Sturm counts roots in (a, b]; drop b when it is an actual root.
  if (!to_pos_inf && sf.eval(b) == 0) --count;
  return count;
}

inline int count_distinct_negative_real_roots(const RatPoly& p) {
  return count_real_roots(p, true, Rat(0), false, Rat(0));
}

inline int count_distinct_positive_real_roots(const RatPoly& p) {
  return count_real_roots(p, false, Rat(0), true, Rat(0));
}

struct HalfPlaneCount {
  int left = 0;       // distinct roots with Re < 0
  int right = 0;      // distinct roots with Re > 0
  int imaginary = 0;  // distinct roots with Re = 0 (including 0 itself)
};

// Distinct-root counts by sign of the real part, fully exact. Uses the
// winding identity ell - r = [phi(inf) - phi(-inf)]/pi - I(Q/P) on the
// squarefree, imaginary-axis-free part, where p(iy) = P(y) + iQ(y) and the
// Cauchy index I is evaluated with a generalized Sturm chain.
inline HalfPlaneCount count_roots_by_real_part(const RatPoly& p_in) {
  HalfPlaneCount out;
  if (p_in.degree() <= 0) return out;
  RatPoly p = squarefree_part(p_in);

  // Roots at the origin.
  if (p.coeff(0) == 0) {
    std::vector<Rat> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = RatPoly(std::move(shifted));
    out.imaginary += 1;
  }
  if (p.degree() <= 0) return out;

  // p(iy) = P(y) + i Q(y).
  std::vector<Rat> pc(p.degree() + 1, Rat(0)), qc(p.degree() + 1, Rat(0));
  for (int k = 0; k <= p.degree(); ++k) {
    switch (k % 4) {
      case 0: pc[k] = p.coeff(k); break;
      case 1: qc[k] = p.coeff(k); break;
      case 2: pc[k] = -p.coeff(k); break;
      case 3: qc[k] = -p.coeff(k); break;
    }
  }
  RatPoly P(std::move(pc)), Q(std::move(qc));

  // Common factor g(y) = e(y^2) carries the remaining imaginary-axis roots
  // together with the root pairs {x, -conj(x)}; handle it separately.
  RatPoly g = poly_gcd(P, Q);
  if (g.degree() > 0) {
    std::vector<Rat> ec(g.degree() / 2 + 1, Rat(0));
    for (int k = 0; k <= g.degree(); ++k) {
      if (g.coeff(k) == 0) continue;
      if (k % 2 == 1) throw std::logic_error("gcd(P,Q) must be even here");
      ec[k / 2] = g.coeff(k);
    }
    RatPoly e(std::move(ec));
    int pos_real = count_distinct_positive_real_roots(e);
    out.imaginary += 2 * pos_real;
    int pair_roots = e.degree() - pos_real;  // each gives one LHP + one RHP root
    out.left += pair_roots;
    out.right += pair_roots;
    P = P.divmod(g).first;
    Q = Q.divmod(g).first;
  }

  int deg = std::max(P.degree(), Q.degree());
  if (deg <= 0) return out;

  int end_term = 0;
  if (Q.degree() > P.degree()) {
    int s = detail::sign_of(Q.leading()) * detail::sign_of(P.leading());
    if ((Q.degree() - P.degree()) % 2 == 1) end_term = s;
  }
  auto chain = detail::sturm_chain(P, Q);
  int cauchy = detail::chain_variations_at_inf(chain, false) -
               detail::chain_variations_at_inf(chain, true);
  int delta = end_term - cauchy;  // ell - r for the reduced polynomial
  if ((deg + delta) % 2 != 0) throw std::logic_error("half-plane parity violated");
  out.left += (deg + delta) / 2;
  out.right += (deg - delta) / 2;
  return out;
}

}  // namespace csf
