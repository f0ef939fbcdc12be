#include "nagata/fatpoints.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "nagata/elimination.hpp"

namespace nagata::fatpoints {
namespace {

void enumerate_total(int n, int k, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  const auto pos = prefix.size();
  if (pos + 1 == static_cast<std::size_t>(n)) {
    prefix.push_back(k);
    out.push_back(MultiIndex{prefix});
    prefix.pop_back();
    return;
  }
  for (int a = k; a >= 0; --a) {
    prefix.push_back(a);
    enumerate_total(n, k - a, prefix, out);
    prefix.pop_back();
  }
}

template <class S>
std::vector<S> to_scalars(const configs::Point& p, const exactla::ScalarOps<S>& ops) {
  std::vector<S> out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(ops.from_rational(x));
  return out;
}

void check_rational_cap(const InterpolationProblem& problem) {
  if (problem.domain.is_rational() && problem.column_count() > problem.domain.rational_column_cap) {
    throw std::runtime_error("rational elimination refused: " +
                             std::to_string(problem.column_count()) +
                             " columns exceed the cap of " +
                             std::to_string(problem.domain.rational_column_cap));
  }
}

template <class S>
exactla::Matrix<S> build_matrix(const InterpolationProblem& problem) {
  problem.validate();
  const exactla::ScalarOps<S> ops(problem.domain);
  const int n = problem.config.dimension;
  if (problem.homogeneous) {
    const auto basis = homogeneous_monomials(n + 1, problem.degree);
    exactla::Matrix<S> m(0, basis.size());
    for (std::size_t j = 0; j < problem.config.size(); ++j) {
      auto point = to_scalars(problem.config.points[j], ops);
      point.push_back(ops.one());
      // Euler's relation: for forms, all order-(m-1) derivatives vanishing at
      // an affine point forces vanishing to order m.
      for (const auto& alpha : multi_indices_of_total(n + 1, problem.orders[j] - 1)) {
        m.append_row(condition_row<S>(point, alpha, basis, ops));
      }
    }
    return m;
  }
  const auto basis = monomials(n, problem.degree);
  exactla::Matrix<S> m(0, basis.size());
  for (std::size_t j = 0; j < problem.config.size(); ++j) {
    const auto point = to_scalars(problem.config.points[j], ops);
    for (int k = 0; k < problem.orders[j]; ++k) {
      for (const auto& alpha : multi_indices_of_total(n, k)) {
        m.append_row(condition_row<S>(point, alpha, basis, ops));
      }
    }
  }
  return m;
}

template <class S>
std::vector<std::size_t> pivots_of(const InterpolationProblem& problem) {
  return exactla::pivot_columns(build_matrix<S>(problem));
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_total(int n, int k) {
  if (n < 1 || k < 0) return {};
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  enumerate_total(n, k, prefix, out);
  return out;
}

std::vector<MultiIndex> monomials(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto level = multi_indices_of_total(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<MultiIndex> homogeneous_monomials(int vars, int d) { return multi_indices_of_total(vars, d); }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::size_t monomial_count(int n, int d) {
  if (d < 0) return 0;
  return static_cast<std::size_t>(binomial(d + n, n));
}

InterpolationProblem InterpolationProblem::uniform(configs::PointConfig config, int l, int d,
                                                   ScalarDomain domain) {
  InterpolationProblem p;
  p.orders.assign(config.size(), l);
  p.config = std::move(config);
  p.degree = d;
  p.domain = domain;
  p.validate();
  return p;
}

InterpolationProblem InterpolationProblem::weighted(configs::PointConfig config, int d,
                                                    ScalarDomain domain) {
  InterpolationProblem p;
  for (std::size_t j = 0; j < config.size(); ++j) p.orders.push_back(config.multiplicity(j));
  p.config = std::move(config);
  p.degree = d;
  p.domain = domain;
  p.validate();
  return p;
}

void InterpolationProblem::validate() const {
  config.validate();
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (orders.size() != config.size()) {
    throw std::invalid_argument("orders must have one entry per point");
  }
  for (int m : orders) {
    if (m < 1) throw std::invalid_argument("vanishing orders must be >= 1");
  }
}

int InterpolationProblem::max_order() const { return *std::max_element(orders.begin(), orders.end()); }

std::size_t InterpolationProblem::condition_count() const {
  std::size_t total = 0;
  for (int m : orders) total += monomial_count(config.dimension, m - 1);
  return total;
}

std::size_t InterpolationProblem::column_count() const {
  return monomial_count(config.dimension, degree);
}

template <class S>
exactla::Matrix<S> condition_matrix(const InterpolationProblem& problem) {
  return build_matrix<S>(problem);
}

template exactla::Matrix<exactla::Fp> condition_matrix(const InterpolationProblem&);
template exactla::Matrix<Rational> condition_matrix(const InterpolationProblem&);

std::size_t vanishing_dimension(const InterpolationProblem& problem) {
  problem.validate();
  // A nonzero polynomial of degree d vanishes to order at most d anywhere;
  // in homogeneous mode the derivative conditions are only valid for d >= m-1.
  if (problem.homogeneous && problem.degree < problem.max_order() - 1) return 0;
  check_rational_cap(problem);
  const std::size_t cols = problem.column_count();
  const std::size_t r = problem.domain.is_rational() ? pivots_of<Rational>(problem).size()
                                                     : pivots_of<exactla::Fp>(problem).size();
  return cols - r;
}

std::vector<std::size_t> vanishing_dimensions_upto(const InterpolationProblem& problem) {
  problem.validate();
  if (problem.homogeneous) {
    std::vector<std::size_t> dims;
    for (int d = 0; d <= problem.degree; ++d) {
      auto p = problem;
      p.degree = d;
      dims.push_back(vanishing_dimension(p));
    }
    return dims;
  }
  // Rational mode: eliminate only the widest prefix under the cap; degrees
  // beyond it are reported by throwing when requested.
  auto p = problem;
  if (problem.domain.is_rational()) {
    while (p.degree >= 0 && p.column_count() > problem.domain.rational_column_cap) --p.degree;
    if (p.degree < 0) check_rational_cap(problem);
  }
  const auto pivots = problem.domain.is_rational() ? pivots_of<Rational>(p) : pivots_of<exactla::Fp>(p);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= p.degree; ++d) {
    const std::size_t cols = monomial_count(problem.config.dimension, d);
    dims.push_back(cols - exactla::prefix_rank(pivots, cols));
  }
  return dims;
}

template <class S>
std::vector<int> achieved_orders(const Polynomial<S>& poly, const configs::PointConfig& config,
                                 const exactla::ScalarOps<S>& ops) {
  std::vector<int> out;
  out.reserve(config.size());
  for (const auto& p : config.points) {
    const auto point = to_scalars(p, ops);
    out.push_back(poly.vanishing_order(point, ops));
  }
  return out;
}

template std::vector<int> achieved_orders(const Polynomial<exactla::Fp>&, const configs::PointConfig&,
                                          const exactla::ScalarOps<exactla::Fp>&);
template std::vector<int> achieved_orders(const Polynomial<Rational>&, const configs::PointConfig&,
                                          const exactla::ScalarOps<Rational>&);

template <class S>
std::vector<KernelPolynomial<S>> kernel_polynomials(const InterpolationProblem& problem) {
  constexpr bool kRational = std::is_same_v<S, Rational>;
  if (kRational != problem.domain.is_rational()) {
    throw std::invalid_argument("kernel_polynomials: scalar type does not match the problem domain");
  }
  if (problem.homogeneous) {
    throw std::invalid_argument("kernel_polynomials: affine problems only");
  }
  check_rational_cap(problem);
  const exactla::ScalarOps<S> ops(problem.domain);
  const auto matrix = build_matrix<S>(problem);
  const auto basis_vectors = exactla::kernel_basis(matrix);
  if (basis_vectors.empty()) throw std::runtime_error("system empty at this degree");

  const auto basis = monomials(problem.config.dimension, problem.degree);
  std::vector<KernelPolynomial<S>> out;
  for (const auto& v : basis_vectors) {
    KernelPolynomial<S> k;
    k.poly = Polynomial<S>(problem.config.dimension);
    for (std::size_t c = 0; c < v.size(); ++c) k.poly.add_term(basis[c], v[c]);
    k.degree = k.poly.degree();
    k.achieved_orders = achieved_orders(k.poly, problem.config, ops);
    for (std::size_t j = 0; j < k.achieved_orders.size(); ++j) {
      if (k.achieved_orders[j] < problem.orders[j]) {
        throw std::logic_error("kernel polynomial misses a required vanishing order");
      }
    }
    out.push_back(std::move(k));
  }
  return out;
}

template std::vector<KernelPolynomial<exactla::Fp>> kernel_polynomials(const InterpolationProblem&);
template std::vector<KernelPolynomial<Rational>> kernel_polynomials(const InterpolationProblem&);

}  // namespace nagata::fatpoints
