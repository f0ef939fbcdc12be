#include "nagata/elimination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nagata::exactla {
namespace {

struct FieldEchelon {
  FieldMatrix m;
  std::vector<std::size_t> pivots;
};

// Gaussian elimination over Fp. Pivot is the first nonzero entry (row order)
// in the current column. With `reduce_above` the result is in reduced row
// echelon form with unit pivots.
FieldEchelon field_echelon(FieldMatrix m, bool reduce_above) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      auto a = m.row(p);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Fp inv = m(r, c).inverse();
    if (reduce_above) {
      for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    }
    const auto pivot_row = m.row(r);
    const std::size_t first = reduce_above ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Fp factor = reduce_above ? m(i, c) : m(i, c) * inv;
      auto target = m.row(i);
      for (std::size_t j = c; j < cols; ++j) target[j] -= factor * pivot_row[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;  // rank rows, upper echelon
  std::vector<std::size_t> pivots;
};

// Rows of a rational matrix scaled by the lcm of their denominators. Row
// scaling by nonzero constants preserves rank and right kernel.
std::vector<std::vector<mpz_class>> clear_denominators(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      out[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination. Pivot: the row with the
// largest-magnitude entry in the current column, first such row on ties.
// Every intermediate entry is a minor of the input, so the divisions by the
// previous pivot are exact.
IntegerEchelon bareiss_echelon(const RationalMatrix& input) {
  auto a = clear_denominators(input);
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (best == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) > 0) best = i;
    }
    if (best == rows) continue;
    std::swap(a[best], a[r]);
    const mpz_class& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (pivot * row[j] - lead * a[r][j]) / prev
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

template <class S>
void normalize_first_nonzero(std::vector<S>& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) {
      const S lead = x;
      for (auto& y : v) y /= lead;
      return;
    }
  }
}

template <class S>
void verify_kernel(const Matrix<S>& m, const std::vector<S>& v, const S& zero) {
  const auto image = multiply(m, std::span<const S>(v), zero);
  for (const auto& x : image) {
    if (!is_zero(x)) throw std::logic_error("kernel vector failed M*v = 0 check");
  }
}

}  // namespace

std::size_t prefix_rank(const std::vector<std::size_t>& pivots, std::size_t prefix) {
  return static_cast<std::size_t>(
      std::lower_bound(pivots.begin(), pivots.end(), prefix) - pivots.begin());
}

std::vector<std::size_t> pivot_columns(const FieldMatrix& m) {
  return field_echelon(m, false).pivots;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  return bareiss_echelon(m).pivots;
}

std::size_t rank(const FieldMatrix& m) { return pivot_columns(m).size(); }
std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

std::vector<std::vector<Fp>> kernel_basis(const FieldMatrix& m) {
  const auto [rref, pivots] = field_echelon(m, true);
  const std::size_t cols = m.cols();
  const Fp zero(0, m.rows() > 0 && cols > 0 ? m(0, 0).modulus() : kMersenne61);
  const Fp one(1, zero.modulus());
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;

  std::vector<std::vector<Fp>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Fp> v(cols, zero);
    v[f] = one;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rref(k, f);
    normalize_first_nonzero(v);
    verify_kernel(m, v, zero);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const auto echelon = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  const auto& pivots = echelon.pivots;
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    // Back substitution through the upper echelon rows.
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const auto& row = echelon.rows[k];
      Rational acc = 0;
      for (std::size_t j = pivots[k] + 1; j < cols; ++j) {
        if (sgn(row[j]) != 0 && sgn(v[j]) != 0) acc += Rational(row[j]) * v[j];
      }
      v[pivots[k]] = -acc / Rational(row[pivots[k]]);
    }
    normalize_first_nonzero(v);
    verify_kernel(m, v, Rational(0));
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix reduce_mod(const RationalMatrix& m, const PrimeField& f) {
  std::vector<Fp> entries;
  entries.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) entries.push_back(rational_to_field(x, f));
  return FieldMatrix(m.rows(), m.cols(), std::move(entries));
}

}  // namespace nagata::exactla
