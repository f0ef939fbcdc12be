#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nagata/scalar.hpp"

namespace nagata::exactla {

/// Dense row-major matrix over an exact scalar type (Fp or Rational).
template <class S>
class Matrix {
 public:
  using Scalar = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix entries do not match rows x cols");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const S& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<S> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<S>& entries() const noexcept { return data_; }

  void append_row(std::span<const S> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// The leading `count` columns.
  Matrix column_prefix(std::size_t count) const {
    if (count > cols_) throw std::out_of_range("column prefix wider than matrix");
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using FieldMatrix = Matrix<Fp>;
using RationalMatrix = Matrix<Rational>;

template <class S>
std::vector<S> multiply(const Matrix<S>& m, std::span<const S> v, const S& zero) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  std::vector<S> out(m.rows(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    S acc = zero;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

/// Entry-wise reduction mod p. Propagates ReductionError.
FieldMatrix reduce_mod(const RationalMatrix& m, const PrimeField& f);

}  // namespace nagata::exactla
