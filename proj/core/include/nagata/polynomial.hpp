#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "nagata/scalar_ops.hpp"

namespace nagata::fatpoints {

/// Exponent vector of a monomial z^alpha.
struct MultiIndex {
  std::vector<int> exponents;

  int total() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
  std::size_t size() const noexcept { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;
};

/// All multi-indices in n variables with |alpha| == k, first exponent
/// descending (so (k,0,..) comes first).
std::vector<MultiIndex> multi_indices_of_total(int n, int k);

/// Graded-lex basis of polynomials of degree <= d in n variables.
std::vector<MultiIndex> monomials(int n, int d);

/// Monomials of exact degree d in `vars` variables.
std::vector<MultiIndex> homogeneous_monomials(int vars, int d);

/// C(n, k) as a 64-bit integer; throws std::overflow_error past 2^63.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// C(d + n, n), the dimension of the degree-<=d polynomials in n variables.
std::size_t monomial_count(int n, int d);

/// Coefficient of (z - p)^alpha in the Taylor expansion of z^beta:
/// prod_i C(beta_i, alpha_i) p_i^(beta_i - alpha_i), zero if beta < alpha.
template <class S>
S shifted_coefficient(std::span<const S> point, const MultiIndex& alpha, const MultiIndex& beta,
                      const exactla::ScalarOps<S>& ops) {
  S value = ops.one();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const int b = beta[i];
    const int a = alpha[i];
    if (b < a) return ops.zero();
    if (b > a) {
      if (exactla::is_zero(point[i])) return ops.zero();
      for (int e = 0; e < b - a; ++e) value *= point[i];
    }
    if (a > 0 && a < b) value *= ops.from_int(binomial(b, a));
  }
  return value;
}

/// Sparse polynomial with exact coefficients; zero coefficients are never
/// stored.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int variables) : n_(variables) {}

  int variables() const noexcept { return n_; }
  const std::map<MultiIndex, S>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const MultiIndex& m, const S& c) {
    if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!exactla::is_zero(c)) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (exactla::is_zero(it->second)) terms_.erase(it);
  }

  /// Largest total degree with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
  }

  S coefficient(const MultiIndex& m, const S& zero) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        MultiIndex m = ma;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }

  Polynomial scaled(const S& s) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  /// The coefficient of (z - p)^alpha in the expansion about p.
  S taylor_coefficient(std::span<const S> point, const MultiIndex& alpha,
                       const exactla::ScalarOps<S>& ops) const {
    S acc = ops.zero();
    for (const auto& [beta, c] : terms_) acc += c * shifted_coefficient(point, alpha, beta, ops);
    return acc;
  }

  S evaluate(std::span<const S> point, const exactla::ScalarOps<S>& ops) const {
    return taylor_coefficient(point, MultiIndex{std::vector<int>(static_cast<std::size_t>(n_), 0)}, ops);
  }

  /// ord(P, p): least |alpha| with a nonzero Taylor coefficient at p.
  int vanishing_order(std::span<const S> point, const exactla::ScalarOps<S>& ops) const {
    if (is_zero()) throw std::invalid_argument("vanishing order of the zero polynomial");
    const int d = degree();
    for (int k = 0; k <= d; ++k) {
      for (const auto& alpha : multi_indices_of_total(n_, k)) {
        if (!exactla::is_zero(taylor_coefficient(point, alpha, ops))) return k;
      }
    }
    throw std::logic_error("nonzero polynomial with order above its degree");
  }

  /// True when a == lambda * b for some nonzero scalar lambda.
  friend bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size() || a.is_zero()) return false;
    const auto& [m0, ca0] = *a.terms_.begin();
    auto it = b.terms_.find(m0);
    if (it == b.terms_.end()) return false;
    const S lambda = ca0 / it->second;
    for (const auto& [m, ca] : a.terms_) {
      auto jt = b.terms_.find(m);
      if (jt == b.terms_.end() || !(ca == lambda * jt->second)) return false;
    }
    return true;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  int n_ = 0;
  std::map<MultiIndex, S> terms_;
};

}  // namespace nagata::fatpoints
