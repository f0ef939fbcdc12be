#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nagata/configs.hpp"
#include "nagata/matrix.hpp"
#include "nagata/polynomial.hpp"
#include "nagata/scalar_ops.hpp"

namespace nagata::fatpoints {

using exactla::ScalarDomain;

/// Polynomials of degree <= d (or, in homogeneous mode, forms of degree d in
/// n+1 variables) required to vanish to order >= orders[j] at point j.
struct InterpolationProblem {
  configs::PointConfig config;
  int degree = 0;
  std::vector<int> orders;
  ScalarDomain domain;
  bool homogeneous = false;

  /// Order l at every point.
  static InterpolationProblem uniform(configs::PointConfig config, int l, int d,
                                      ScalarDomain domain = ScalarDomain::field());
  /// Orders taken from the configuration's multiplicities.
  static InterpolationProblem weighted(configs::PointConfig config, int d,
                                       ScalarDomain domain = ScalarDomain::field());

  void validate() const;
  int max_order() const;
  /// sum_j C(m_j - 1 + n, n)
  std::size_t condition_count() const;
  /// C(d + n, n)
  std::size_t column_count() const;
};

/// Vanishing of the Taylor coefficient of (z - p)^alpha, against `basis`.
template <class S>
std::vector<S> condition_row(std::span<const S> point, const MultiIndex& alpha,
                             std::span<const MultiIndex> basis, const exactla::ScalarOps<S>& ops) {
  std::vector<S> row;
  row.reserve(basis.size());
  for (const auto& beta : basis) row.push_back(shifted_coefficient(point, alpha, beta, ops));
  return row;
}

/// Rows: points outer, multi-indices graded-lex inner. Columns: the affine
/// graded-lex basis of degree <= problem.degree, or the homogeneous basis.
template <class S>
exactla::Matrix<S> condition_matrix(const InterpolationProblem& problem);

/// C(d+n, n) - rank of the condition matrix.
std::size_t vanishing_dimension(const InterpolationProblem& problem);

/// Dimensions for every degree 0..problem.degree (affine mode), read off a
/// single elimination of the degree-d matrix through its column prefixes.
std::vector<std::size_t> vanishing_dimensions_upto(const InterpolationProblem& problem);

template <class S>
struct KernelPolynomial {
  Polynomial<S> poly;
  int degree = -1;
  std::vector<int> achieved_orders;
};

/// A basis of the vanishing space as polynomials, with exact vanishing orders
/// at every point. S must match the problem's scalar domain. Throws
/// std::runtime_error("system empty at this degree") on an empty kernel.
template <class S>
std::vector<KernelPolynomial<S>> kernel_polynomials(const InterpolationProblem& problem);

/// Exact vanishing orders of `poly` at every point of the configuration.
template <class S>
std::vector<int> achieved_orders(const Polynomial<S>& poly, const configs::PointConfig& config,
                                 const exactla::ScalarOps<S>& ops);

}  // namespace nagata::fatpoints
