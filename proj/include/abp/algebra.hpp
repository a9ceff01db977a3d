#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "abp/matrix.hpp"
#include "abp/scalar.hpp"

namespace abp {

/// Finite-dimensional associative algebra with unit, given by structure
/// constants: e_a * e_b = sum_c product(a, b)[c] e_c.
class Algebra {
 public:
  /// Validates bilinear associativity on every basis triple and the unit.
  Algebra(Field field, std::size_t dim, std::vector<std::vector<std::vector<Scalar>>> product,
          std::vector<Scalar> unit);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Scalar>& basis_product(std::size_t a, std::size_t b) const { return product_[a][b]; }
  const std::vector<Scalar>& unit() const { return unit_; }

  /// Coordinates of x * y.
  std::vector<Scalar> multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<std::vector<Scalar>>> product_;
  std::vector<Scalar> unit_;
};

/// Element of a shared Algebra, stored by coordinates.
class AlgebraElement {
 public:
  AlgebraElement(std::shared_ptr<const Algebra> algebra, std::vector<Scalar> coords);

  static AlgebraElement basis(std::shared_ptr<const Algebra> algebra, std::size_t index);

  const std::shared_ptr<const Algebra>& algebra() const { return algebra_; }
  const std::vector<Scalar>& coords() const { return coords_; }

  AlgebraElement zero_like() const;
  AlgebraElement one_like() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  std::shared_ptr<const Algebra> algebra_;
  std::vector<Scalar> coords_;
};

/// M_r(F) with basis E_{ab} at index a*r + b and E_{ab} E_{cd} = [b = c] E_{ad}.
std::shared_ptr<const Algebra> matrix_algebra(std::size_t r, Field field = Field::rationals());

/// Square matrix <-> element of matrix_algebra(m.rows()).
AlgebraElement to_algebra_element(const std::shared_ptr<const Algebra>& mr, const Matrix& m);
Matrix to_matrix(const AlgebraElement& e);

/// k x n grid of scalars, row-major.
class RectScalarMatrix {
 public:
  RectScalarMatrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rectangular permanent by a column sweep over row subsets: O(2^k k n).
Scalar rper_dp(const RectScalarMatrix& a);
/// Rectangular determinant by the same sweep with insertion signs.
Scalar rdet_dp(const RectScalarMatrix& a);

/// rper (signed = false) or rdet (signed = true) of a k x n grid of algebra
/// elements with rows multiplied in order: decompose every entry in the
/// basis, solve one scalar problem per tuple t in [dim]^k and accumulate it
/// times e_{t_1} ... e_{t_k}.
AlgebraElement rper_algebra(std::span<const AlgebraElement> grid, std::size_t k, std::size_t n, bool signed_sum);

/// Upper bound on dim^k for rper_algebra.
inline constexpr std::size_t kMaxAlgebraTuples = 10'000'000;

}  // namespace abp
