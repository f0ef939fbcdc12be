#pragma once

#include <cstddef>
#include <vector>

#include "nagata/matrix.hpp"

namespace nagata::exactla {

/// Columns holding a pivot after row reduction, in increasing order. Because
/// elimination scans columns left to right, the number of pivots among the
/// first k columns is the rank of the leading k-column submatrix.
std::vector<std::size_t> pivot_columns(const FieldMatrix& m);
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

std::size_t rank(const FieldMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Right kernel basis: cols - rank vectors, one per non-pivot column (in
/// column order), each with its first nonzero entry equal to 1. Every vector
/// is checked against m before it is returned.
std::vector<std::vector<Fp>> kernel_basis(const FieldMatrix& m);
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Number of pivots among the first `prefix` columns.
std::size_t prefix_rank(const std::vector<std::size_t>& pivots, std::size_t prefix);

}  // namespace nagata::exactla
