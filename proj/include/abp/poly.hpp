#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abp/scalar.hpp"

namespace abp {

using Var = std::uint32_t;

/// A noncommutative monomial: the sequence of variable ids, left to right.
using Word = std::vector<Var>;

/// Upper bound on the number of terms any brute-force routine will produce.
inline constexpr std::size_t kMaxTerms = 10'000'000;

/// Variables of a k x n symbolic matrix, numbered row-major from 0.
class RectMatrixVars {
 public:
  RectMatrixVars(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  /// 1-based (row, col) -> variable id.
  Var id(std::size_t row, std::size_t col) const;
  std::size_t row_of(Var v) const { return v / cols_ + 1; }
  std::size_t col_of(Var v) const { return v % cols_ + 1; }

 private:
  std::size_t rows_;
  std::size_t cols_;
};

/// Renders a variable id for text output.
using VarNamer = std::function<std::string(Var)>;

/// "y_{i}" with 1-based index.
VarNamer plain_namer(std::string_view symbol = "y");
/// "y_{i,j}" for the variables of a matrix with `cols` columns.
VarNamer matrix_namer(std::size_t cols, std::string_view symbol = "y");

/// Sparse polynomial: map from words to nonzero coefficients. In commutative
/// mode every word is stored sorted, so one class covers both F[x] and F<y>.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(Field field, std::size_t nvars, bool commutative = false);

  static NCPoly constant(Field field, std::size_t nvars, const Scalar& c, bool commutative = false);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool commutative() const { return commutative_; }

  void add_term(Word w, const Scalar& c);
  Scalar coeff(Word w) const;
  const std::map<Word, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Degree shared by every term, or nullopt when the polynomial is zero or
  /// mixes degrees.
  std::optional<std::size_t> homogeneous_degree() const;

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, const NCPoly& a);
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// Canonical dump: one term per line, "coef  y_{i1} y_{i2} ...", words in
  /// lexicographic order. The zero polynomial prints as "0".
  std::string to_text(const VarNamer& namer = plain_namer()) const;

 private:
  void check_compatible(const NCPoly& other) const;

  Field field_ = Field::rationals();
  std::size_t nvars_ = 0;
  bool commutative_ = false;
  std::map<Word, Scalar> terms_;
};

/// Positional symmetrization: sum over all sigma in S_k of f^sigma.
NCPoly symmetrize(const NCPoly& f);
/// Coefficient-wise product.
NCPoly hadamard(const NCPoly& f, const NCPoly& g);
/// Reverses every word.
NCPoly reverse(const NCPoly& f);
/// Replaces y_i at position j by y_{j,i} in a k x n variable grid.
NCPoly set_multilinearize(const NCPoly& f, const RectMatrixVars& grid);
/// Reinterprets a noncommutative polynomial commutatively (sorts words).
NCPoly commutative_image(const NCPoly& f);
/// Value of f at the point (variables commute once substituted).
Scalar substitute(const NCPoly& f, std::span<const Scalar> point);

}  // namespace abp
