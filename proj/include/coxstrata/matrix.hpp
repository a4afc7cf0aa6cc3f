#pragma once

#include <cstddef>
#include <vector>

#include "coxstrata/errors.hpp"

namespace coxstrata {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Product of conformable matrices over possibly different entry types;
/// Out must be constructible from a product of entries and summable.
template <class Out, class L, class R>
Matrix<Out> multiply(const Matrix<L>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product of non-conformable shapes");
  Matrix<Out> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        out(i, j) += Out(a(i, k)) * Out(b(k, j));
      }
    }
  return out;
}

}  // namespace coxstrata
