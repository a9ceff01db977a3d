#include "abp/scalar.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace abp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw DomainError("empty integer literal");
  std::string_view digits = s;
  if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("malformed integer literal '" + std::string(s) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("malformed integer literal '" + std::string(s) + "'");
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(buf, 10);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

void check_same_modulus(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("mixed prime-field moduli " + std::to_string(a.modulus()) + " and " +
                      std::to_string(b.modulus()));
  }
}

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::inv() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::to_string() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------- PrimeFieldElem

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p % small == 0) return p == small;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit inputs with these witnesses.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFieldElem::PrimeFieldElem(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= kMaxModulus) throw DomainError("prime modulus out of range");
  auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

PrimeFieldElem PrimeFieldElem::operator-() const {
  return {value_ == 0 ? 0 : modulus_ - value_, modulus_, nullptr};
}

PrimeFieldElem PrimeFieldElem::inv() const {
  if (value_ == 0) throw DomainError("division by zero");
  return {powmod(value_, modulus_ - 2, modulus_), modulus_, nullptr};
}

PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  check_same_modulus(a, b);
  std::uint64_t s = a.value_ + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return {s, a.modulus_, nullptr};
}

PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) { return a + (-b); }

PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  check_same_modulus(a, b);
  return {mulmod(a.value_, b.value_, a.modulus_), a.modulus_, nullptr};
}

PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  check_same_modulus(a, b);
  return a * b.inv();
}

bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  check_same_modulus(a, b);
  return a.value_ == b.value_;
}

std::string PrimeFieldElem::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

// ------------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw DomainError("prime modulus must be below 2^62");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw DomainError("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw DomainError("unknown field '" + std::string(text) + "' (expected rational or fp:<p>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Rational(v);
  return PrimeFieldElem(v, modulus_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (is_rational()) return Rational::parse(text);
  auto mod = text.find("mod");
  if (mod != std::string_view::npos) {
    mpz_class p = parse_integer(text.substr(mod + 3));
    if (p != mpz_class(std::to_string(modulus_))) {
      throw DomainError("scalar '" + std::string(text) + "' belongs to a different prime field than " + name());
    }
    text = text.substr(0, mod);
  }
  auto slash = text.find('/');
  auto reduce = [&](std::string_view part) {
    mpz_class v = parse_integer(part);
    mpz_class r = v % mpz_class(std::to_string(modulus_));
    if (r < 0) r += mpz_class(std::to_string(modulus_));
    return PrimeFieldElem(static_cast<std::int64_t>(std::stoll(r.get_str())), modulus_);
  };
  if (slash == std::string_view::npos) return reduce(text);
  return Scalar(reduce(text.substr(0, slash))) / Scalar(reduce(text.substr(slash + 1)));
}

std::string Field::name() const { return is_rational() ? "rational" : "fp:" + std::to_string(modulus_); }

// ------------------------------------------------------------------ Scalar

Field Scalar::field() const {
  if (auto* p = std::get_if<PrimeFieldElem>(&v_)) return Field::prime(p->modulus());
  return Field::rationals();
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->value() == 1;
  return std::get<PrimeFieldElem>(v_).value() == 1;
}

const Rational& Scalar::as_rational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  throw DomainError("scalar is not rational");
}

const PrimeFieldElem& Scalar::as_prime() const {
  if (auto* p = std::get_if<PrimeFieldElem>(&v_)) return *p;
  throw DomainError("scalar is not a prime-field element");
}

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_rational() != b.is_rational()) throw DomainError("mixed rational and prime-field operands");
  if (a.is_rational()) return op(a.as_rational(), b.as_rational());
  return op(a.as_prime(), b.as_prime());
}

}  // namespace

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar Scalar::inv() const {
  return std::visit([](const auto& x) { return Scalar(x.inv()); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return Scalar(x + y); });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return Scalar(x - y); });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return Scalar(x * y); });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return Scalar(x / y); });
}
bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) throw DomainError("mixed rational and prime-field operands");
  if (a.is_rational()) return a.as_rational() == b.as_rational();
  return a.as_prime() == b.as_prime();
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

std::string Scalar::value_string() const {
  if (is_rational()) return as_rational().to_string();
  return std::to_string(as_prime().value());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace abp
