#include "abp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace abp {

RectMatrixVars::RectMatrixVars(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw DomainError("matrix variable grid must be non-empty");
}

Var RectMatrixVars::id(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw DomainError("matrix index out of range");
  return static_cast<Var>((row - 1) * cols_ + (col - 1));
}

VarNamer plain_namer(std::string_view symbol) {
  return [s = std::string(symbol)](Var v) { return s + "_{" + std::to_string(v + 1) + "}"; };
}

VarNamer matrix_namer(std::size_t cols, std::string_view symbol) {
  return [s = std::string(symbol), cols](Var v) {
    return s + "_{" + std::to_string(v / cols + 1) + "," + std::to_string(v % cols + 1) + "}";
  };
}

NCPoly::NCPoly(Field field, std::size_t nvars, bool commutative)
    : field_(field), nvars_(nvars), commutative_(commutative) {}

NCPoly NCPoly::constant(Field field, std::size_t nvars, const Scalar& c, bool commutative) {
  NCPoly p(field, nvars, commutative);
  p.add_term({}, c);
  return p;
}

void NCPoly::add_term(Word w, const Scalar& c) {
  if (!(c.field() == field_)) throw DomainError("coefficient from " + c.field().name() + " in a " + field_.name() + " polynomial");
  if (c.is_zero()) return;
  for (Var v : w) {
    if (v >= nvars_) throw DomainError("variable id " + std::to_string(v) + " out of range");
  }
  if (commutative_) std::sort(w.begin(), w.end());
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar NCPoly::coeff(Word w) const {
  if (commutative_) std::sort(w.begin(), w.end());
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::optional<std::size_t> NCPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != d) return std::nullopt;
  }
  return d;
}

void NCPoly::check_compatible(const NCPoly& other) const {
  if (!(field_ == other.field_)) throw DomainError("polynomials over different fields");
  if (commutative_ != other.commutative_) throw DomainError("mixing commutative and noncommutative polynomials");
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  a.check_compatible(b);
  NCPoly r = a;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check_compatible(b);
  if (a.size() * b.size() > kMaxTerms) throw GuardExceeded("polynomial product exceeds term guard");
  NCPoly r(a.field_, std::max(a.nvars_, b.nvars_), a.commutative_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& a) {
  NCPoly r(a.field_, a.nvars_, a.commutative_);
  for (const auto& [w, x] : a.terms_) r.add_term(w, c * x);
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  return a.field_ == b.field_ && a.commutative_ == b.commutative_ && a.terms_ == b.terms_;
}

std::string NCPoly::to_text(const VarNamer& namer) const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, c] : terms_) {
    os << c.to_string() << " ";
    for (Var v : w) os << " " << namer(v);
    os << "\n";
  }
  return os.str();
}

NCPoly symmetrize(const NCPoly& f) {
  NCPoly r(f.field(), f.nvars(), f.commutative());
  if (f.is_zero()) return r;
  auto k = f.homogeneous_degree();
  if (!k) throw DomainError("symmetrize requires a homogeneous polynomial");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= *k; ++i) fact *= i;
  if (fact * f.size() > kMaxTerms) throw GuardExceeded("symmetrization exceeds term guard");
  std::vector<std::size_t> perm(*k);
  for (const auto& [w, c] : f.terms()) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Word image(*k);
      for (std::size_t i = 0; i < *k; ++i) image[i] = w[perm[i]];
      r.add_term(std::move(image), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

NCPoly hadamard(const NCPoly& f, const NCPoly& g) {
  if (!(f.field() == g.field())) throw DomainError("polynomials over different fields");
  NCPoly r(f.field(), std::max(f.nvars(), g.nvars()), f.commutative() && g.commutative());
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) r.add_term(w, c * it->second);
  }
  return r;
}

NCPoly reverse(const NCPoly& f) {
  NCPoly r(f.field(), f.nvars(), f.commutative());
  for (const auto& [w, c] : f.terms()) r.add_term(Word(w.rbegin(), w.rend()), c);
  return r;
}

NCPoly set_multilinearize(const NCPoly& f, const RectMatrixVars& grid) {
  NCPoly r(f.field(), grid.size(), false);
  if (f.is_zero()) return r;
  auto k = f.homogeneous_degree();
  if (!k) throw DomainError("set_multilinearize requires a homogeneous polynomial");
  if (*k != grid.rows()) throw DomainError("degree does not match the number of grid rows");
  for (const auto& [w, c] : f.terms()) {
    Word image(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] >= grid.cols()) throw DomainError("variable exceeds grid columns");
      image[j] = grid.id(j + 1, w[j] + 1);
    }
    r.add_term(std::move(image), c);
  }
  return r;
}

NCPoly commutative_image(const NCPoly& f) {
  NCPoly r(f.field(), f.nvars(), true);
  for (const auto& [w, c] : f.terms()) r.add_term(w, c);
  return r;
}

Scalar substitute(const NCPoly& f, std::span<const Scalar> point) {
  Scalar total = f.field().zero();
  for (const auto& [w, c] : f.terms()) {
    Scalar term = c;
    for (Var v : w) {
      if (v >= point.size()) throw DomainError("missing assignment for variable " + std::to_string(v));
      term *= point[v];
    }
    total += term;
  }
  return total;
}

}  // namespace abp
