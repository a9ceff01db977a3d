#include "abp/algebra.hpp"

#include <algorithm>
#include <bit>

namespace abp {

namespace {

std::vector<Scalar> zeros(Field f, std::size_t n) { return std::vector<Scalar>(n, f.zero()); }

}  // namespace

Algebra::Algebra(Field field, std::size_t dim, std::vector<std::vector<std::vector<Scalar>>> product,
                 std::vector<Scalar> unit)
    : field_(field), dim_(dim), product_(std::move(product)), unit_(std::move(unit)) {
  if (dim_ == 0) throw DomainError("algebra dimension must be positive");
  if (product_.size() != dim_ || unit_.size() != dim_) throw DomainError("structure constants have the wrong shape");
  for (const auto& row : product_) {
    if (row.size() != dim_) throw DomainError("structure constants have the wrong shape");
    for (const auto& v : row) {
      if (v.size() != dim_) throw DomainError("structure constants have the wrong shape");
    }
  }
  std::vector<Scalar> ea = zeros(field_, dim_), ec = ea;
  for (std::size_t a = 0; a < dim_; ++a) {
    ea.assign(dim_, field_.zero());
    ea[a] = field_.one();
    if (multiply(unit_, ea) != ea || multiply(ea, unit_) != ea) throw DomainError("unit element is not a unit");
    for (std::size_t b = 0; b < dim_; ++b) {
      for (std::size_t c = 0; c < dim_; ++c) {
        // (e_a e_b) e_c == e_a (e_b e_c)
        ec.assign(dim_, field_.zero());
        ec[c] = field_.one();
        if (multiply(product_[a][b], ec) != multiply(ea, product_[b][c])) {
          throw DomainError("structure constants are not associative");
        }
      }
    }
  }
}

std::vector<Scalar> Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  std::vector<Scalar> out = zeros(field_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      const Scalar xy = x[a] * y[b];
      const auto& p = product_[a][b];
      for (std::size_t c = 0; c < dim_; ++c) {
        if (!p[c].is_zero()) out[c] += xy * p[c];
      }
    }
  }
  return out;
}

AlgebraElement::AlgebraElement(std::shared_ptr<const Algebra> algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw DomainError("algebra element without an algebra");
  if (coords_.size() != algebra_->dim()) throw DomainError("coordinate vector length differs from the dimension");
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const Algebra> algebra, std::size_t index) {
  auto c = zeros(algebra->field(), algebra->dim());
  c.at(index) = algebra->field().one();
  return {std::move(algebra), std::move(c)};
}

AlgebraElement AlgebraElement::zero_like() const { return {algebra_, zeros(algebra_->field(), algebra_->dim())}; }
AlgebraElement AlgebraElement::one_like() const { return {algebra_, algebra_->unit()}; }

namespace {

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw DomainError("algebra elements from different algebras");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  std::vector<Scalar> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return {a.algebra_, std::move(c)};
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return {a.algebra_, a.algebra_->multiply(a.coords_, b.coords_)};
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  std::vector<Scalar> out = a.coords_;
  for (auto& x : out) x = c * x;
  return {a.algebra_, std::move(out)};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

std::shared_ptr<const Algebra> matrix_algebra(std::size_t r, Field field) {
  if (r == 0) throw DomainError("matrix algebra needs r >= 1");
  const std::size_t dim = r * r;
  std::vector<std::vector<std::vector<Scalar>>> product(dim, std::vector<std::vector<Scalar>>(dim, zeros(field, dim)));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t d = 0; d < r; ++d) product[a * r + b][b * r + d][a * r + d] = field.one();
    }
  }
  std::vector<Scalar> unit = zeros(field, dim);
  for (std::size_t a = 0; a < r; ++a) unit[a * r + a] = field.one();
  return std::make_shared<const Algebra>(field, dim, std::move(product), std::move(unit));
}

AlgebraElement to_algebra_element(const std::shared_ptr<const Algebra>& mr, const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() * m.rows() != mr->dim()) throw DomainError("matrix does not fit the algebra");
  std::vector<Scalar> c;
  c.reserve(mr->dim());
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) c.push_back(m(a, b));
  }
  return {mr, std::move(c)};
}

Matrix to_matrix(const AlgebraElement& e) {
  const std::size_t dim = e.algebra()->dim();
  std::size_t r = 0;
  while (r * r < dim) ++r;
  if (r * r != dim) throw DomainError("algebra dimension is not a perfect square");
  Matrix m(e.algebra()->field(), r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) m(a, b) = e.coords()[a * r + b];
  }
  return m;
}

RectScalarMatrix::RectScalarMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

namespace {

// dp[S] = signed/unsigned sum over injective assignments of the rows in S to
// the columns seen so far. Each new column either stays unused or takes one
// row i in S; in column order the chosen rows form a sequence whose insertion
// signs multiply to its parity, and det(M) = det(M^T) makes that the minor's
// sign.
Scalar subset_sweep(const RectScalarMatrix& a, bool with_sign) {
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  if (k > n) throw DomainError("need k <= n");
  if (k > 30) throw DomainError("too many rows for the subset sweep");
  const Field f = a.field();
  const std::size_t full = std::size_t{1} << k;
  std::vector<Scalar> dp(full, f.zero());
  dp[0] = f.one();
  for (std::size_t j = 0; j < n; ++j) {
    // Larger sets first so dp[S \ i] still holds the previous column's value.
    for (std::size_t s = full; s-- > 1;) {
      Scalar add = f.zero();
      for (std::size_t i = 0; i < k; ++i) {
        if (!((s >> i) & 1)) continue;
        const std::size_t rest = s & ~(std::size_t{1} << i);
        if (dp[rest].is_zero() || a(i, j).is_zero()) continue;
        Scalar term = a(i, j) * dp[rest];
        if (with_sign && std::popcount(rest >> (i + 1)) % 2) term = -term;
        add += term;
      }
      dp[s] += add;
    }
  }
  return dp[full - 1];
}

}  // namespace

Scalar rper_dp(const RectScalarMatrix& a) { return subset_sweep(a, false); }
Scalar rdet_dp(const RectScalarMatrix& a) { return subset_sweep(a, true); }

AlgebraElement rper_algebra(std::span<const AlgebraElement> grid, std::size_t k, std::size_t n, bool signed_sum) {
  if (k > n) throw DomainError("need k <= n");
  if (grid.size() != k * n || grid.empty()) throw DomainError("grid size differs from k * n");
  const auto& alg = grid.front().algebra();
  for (const auto& e : grid) {
    if (e.algebra() != alg) throw DomainError("grid entries from different algebras");
  }
  const std::size_t r = alg->dim();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    tuples *= r;
    if (tuples > kMaxAlgebraTuples) throw GuardExceeded("dim^k exceeds the tuple guard");
  }
  const Field f = alg->field();
  AlgebraElement total = grid.front().zero_like();
  std::vector<Scalar> acc(r, f.zero());

  // Walk [r]^k depth-first so the ordered basis product of each prefix is
  // shared: prefix[d] = e_{t_1} ... e_{t_d}.
  std::vector<std::size_t> t(k, 0);
  std::vector<std::vector<Scalar>> prefix(k + 1);
  prefix[0] = alg->unit();
  RectScalarMatrix slice(f, k, n);
  auto rec = [&](auto& self, std::size_t d) -> void {
    if (prefix[d].end() == std::find_if(prefix[d].begin(), prefix[d].end(), [](const Scalar& x) { return !x.is_zero(); })) {
      return;  // basis product already zero
    }
    if (d == k) {
      const Scalar value = signed_sum ? rdet_dp(slice) : rper_dp(slice);
      if (value.is_zero()) return;
      for (std::size_t c = 0; c < r; ++c) acc[c] += value * prefix[k][c];
      return;
    }
    for (std::size_t l = 0; l < r; ++l) {
      t[d] = l;
      std::vector<Scalar> el(r, f.zero());
      el[l] = f.one();
      prefix[d + 1] = alg->multiply(prefix[d], el);
      for (std::size_t j = 0; j < n; ++j) slice(d, j) = grid[d * n + j].coords()[l];
      self(self, d + 1);
    }
  };
  rec(rec, 0);
  return {alg, std::move(acc)};
}

}  // namespace abp
