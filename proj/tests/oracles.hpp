#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <vector>

#include "nagata/configs.hpp"

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

// Textbook Gauss-Jordan over Q with the first nonzero entry as pivot.
inline std::size_t gauss_jordan_rank(Rows a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Determinant by the Leibniz permutation sum.
inline Q leibniz_det(const Rows& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Q total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Q term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Rank as the size of the largest nonvanishing minor. Small matrices only.
inline std::size_t minor_rank(const Rows& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Rows sub(k, std::vector<Q>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        if (leibniz_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

// Exponent vectors of total degree <= d, any order (the rank does not care).
inline std::vector<std::vector<int>> all_exponents(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Odometer over [0, d]^n, keeping total <= d.
  while (true) {
    int total = 0;
    for (int x : e) total += x;
    if (total <= d) out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == d) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

// Coefficient of y^alpha in prod_i (y_i + p_i)^{beta_i}, by expanding each
// factor with Pascal's triangle.
inline Q shifted_monomial_coefficient(const std::vector<Q>& p, const std::vector<int>& alpha,
                                      const std::vector<int>& beta) {
  Q value = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (alpha[i] > beta[i]) return 0;
    std::vector<mpz_class> row{1};
    for (int k = 0; k < beta[i]; ++k) {
      std::vector<mpz_class> next(row.size() + 1, 0);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] += row[j];
        next[j + 1] += row[j];
      }
      row = next;
    }
    Q power = 1;
    for (int k = 0; k < beta[i] - alpha[i]; ++k) power *= p[i];
    value *= Q(row[static_cast<std::size_t>(alpha[i])]) * power;
  }
  return value;
}

// Condition matrix for order-l vanishing at every point, built from scratch.
inline Rows condition_rows(const nagata::configs::PointConfig& c, int l, int d) {
  const auto basis = all_exponents(c.dimension, d);
  Rows rows;
  for (const auto& p : c.points) {
    for (const auto& alpha : all_exponents(c.dimension, l - 1)) {
      std::vector<Q> row;
      for (const auto& beta : basis) row.push_back(shifted_monomial_coefficient(p, alpha, beta));
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::size_t vanishing_dimension(const nagata::configs::PointConfig& c, int l, int d) {
  const auto rows = condition_rows(c, l, d);
  return all_exponents(c.dimension, d).size() - gauss_jordan_rank(rows);
}

inline int omega(const nagata::configs::PointConfig& c, int l) {
  for (int d = l;; ++d) {
    if (vanishing_dimension(c, l, d) > 0) return d;
  }
}

}  // namespace oracle
