#include "cwsurgery/rational.hpp"

#include <cctype>
#include <ostream>

#include "cwsurgery/error.hpp"

namespace cwsurgery {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError("degenerate fraction: " + num.get_str() + "/0");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("malformed integer '" + std::string(text) + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DomainError("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string clean(text);
  if (clean.front() == '+') clean.erase(0, 1);
  return Integer(clean, 10);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx(int digits) const {
  // Scale to a fixed number of decimals and round half away from zero.
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer n = abs(value_.get_num()) * scale * 2 + value_.get_den();
  Integer d = value_.get_den() * 2;
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (sign() < 0) s.insert(0, "-");
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cwsurgery
