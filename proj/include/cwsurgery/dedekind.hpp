#pragma once

#include "cwsurgery/rational.hpp"
#include "cwsurgery/slope.hpp"

namespace cwsurgery {

/// ((x)) = x - floor(x) - 1/2 for non-integral x, and 0 at integers.
Rational sawtooth(const Rational& x);

/// Coprime pair (p, q) with q != 0, the argument of s(p, q).
class DedekindArgs {
 public:
  /// Throws DomainError if q == 0 or gcd(p, q) != 1.
  DedekindArgs(Integer p, Integer q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

 private:
  Integer p_;
  Integer q_;
};

/// s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((kp/q)), summed term by term.
/// O(|q|); kept as the audit path for dedekind_sum.
Rational dedekind_sum_naive(const DedekindArgs& args);

/// Same value as dedekind_sum_naive in O(log |q|) steps, by reducing p mod q
/// and applying reciprocity
///   s(p,q) + s(q,p) = -1/4 + (p/q + q/p + 1/(pq)) / 12   (p, q > 0).
Rational dedekind_sum(const DedekindArgs& args);

/// S(p/q) = 12 sign(q) s(p, q).
Rational dedekind_symbol(const DedekindArgs& args);
Rational dedekind_symbol(const Slope& slope);
Rational dedekind_symbol(const Rational& x);

}  // namespace cwsurgery
