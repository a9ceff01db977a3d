#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "abp/errors.hpp"

namespace abp {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long num) : q_(static_cast<long>(num)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(mpq_class q);

  /// Parses "a" or "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational inv() const;
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string to_string() const;

 private:
  mpq_class q_;
};

/// Residue modulo a prime p < 2^62.
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElem operator-() const;
  PrimeFieldElem inv() const;
  friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b);
  friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b);
  friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b);
  friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b);
  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b);

  std::string to_string() const;

 private:
  PrimeFieldElem(std::uint64_t value, std::uint64_t modulus, std::nullptr_t) : value_(value), modulus_(modulus) {}
  std::uint64_t value_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t p);

class Scalar;

/// Names a coefficient field: the rationals or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// "rational" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Parses "a", "a/b" (rationals) or "v" / "v mod p" (prime field).
  Scalar parse_scalar(std::string_view text) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_ = 0;
};

/// Element of one of the supported exact fields. All ABP and polynomial code
/// is written against this type; mixing elements of different fields throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : v_(std::move(r)) {}        // NOLINT
  Scalar(PrimeFieldElem e) : v_(std::move(e)) {}  // NOLINT

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& as_rational() const;
  const PrimeFieldElem& as_prime() const;

  Scalar operator-() const;
  Scalar inv() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" (den omitted when 1) or "v mod p".
  std::string to_string() const;
  /// Like to_string but without the " mod p" suffix.
  std::string value_string() const;

 private:
  std::variant<Rational, PrimeFieldElem> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace abp
