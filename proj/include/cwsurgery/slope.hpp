#pragma once

#include <string>
#include <string_view>

#include "cwsurgery/rational.hpp"

namespace cwsurgery {

/// A reduced surgery coefficient p/q with q >= 1. The meridian 1/0 is not a
/// Slope; constructing one throws.
class Slope {
 public:
  /// Normalizes the sign onto p. Throws DomainError when q == 0 or when
  /// gcd(p, q) != 1.
  Slope(const Integer& p, const Integer& q);

  /// "P/Q" or a bare integer P (meaning P/1).
  static Slope parse(std::string_view text);
  static Slope from_rational(const Rational& r);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  Rational value() const { return make_rational(p_, q_); }
  std::string str() const { return p_.get_str() + "/" + q_.get_str(); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Integer p_;
  Integer q_;
};

}  // namespace cwsurgery
