#include "cwsurgery/slope.hpp"

#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"

namespace cwsurgery {

Slope::Slope(const Integer& p, const Integer& q) : p_(p), q_(q) {
  if (q_ == 0) {
    throw DomainError("degenerate fraction: slope " + p.get_str() + "/0");
  }
  if (gcd_pair(p_, q_) != 1) {
    throw DomainError("slope " + p.get_str() + "/" + q.get_str() + " is not reduced");
  }
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope Slope::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_integer(text), 1);
  return Slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Slope Slope::from_rational(const Rational& r) { return Slope(r.num(), r.den()); }

}  // namespace cwsurgery
