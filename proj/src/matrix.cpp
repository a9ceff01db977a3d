#include "abp/matrix.hpp"

namespace abp {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t dim) {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::one_like() const {
  if (rows_ != cols_) throw DomainError("identity of a non-square matrix");
  return identity(field_, rows_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch in sum");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-a.field_.one()) * b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(l, j).is_zero()) r(i, j) += x * b(l, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x = c * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace abp
