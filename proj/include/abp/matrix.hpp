#pragma once

#include <cstddef>
#include <vector>

#include "abp/scalar.hpp"

namespace abp {

/// Dense matrix over a Scalar field. Square matrices form the algebra M_s
/// used for matrix-valued ABP evaluation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t dim);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix zero_like() const { return Matrix(field_, rows_, cols_); }
  Matrix one_like() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace abp
