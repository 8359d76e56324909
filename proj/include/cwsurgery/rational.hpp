#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace cwsurgery {

using Integer = mpz_class;

/// Exact fraction, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Integer-valued gmpxx expressions such as p * q.
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& value)  // NOLINT(google-explicit-constructor)
      : value_(Integer(value)) {}

  /// Parses "num/den" or a bare integer. Throws DomainError on malformed
  /// text or a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }

  /// Largest integer not exceeding the value.
  Integer floor() const;

  /// "num/den", with "n/1" for integers.
  std::string str() const;

  /// Decimal rendering for human display only; never fed back into
  /// computation.
  std::string approx(int digits = 12) const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  friend Rational make_rational(const Integer& num, const Integer& den);

  mpq_class value_;
};

/// num/den reduced with the sign carried by the numerator.
/// Throws DomainError("degenerate fraction") when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a decimal integer (optional leading sign). Throws DomainError.
Integer parse_integer(std::string_view text);

}  // namespace cwsurgery
