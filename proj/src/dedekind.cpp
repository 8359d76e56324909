#include "cwsurgery/dedekind.hpp"

#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"

namespace cwsurgery {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - make_rational(1, 2);
}

DedekindArgs::DedekindArgs(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ == 0) throw DomainError("degenerate fraction: Dedekind sum with q = 0");
  if (gcd_pair(p_, q_) != 1) {
    throw DomainError("Dedekind sum arguments (" + p_.get_str() + ", " + q_.get_str() +
                      ") are not coprime");
  }
}

Rational dedekind_sum_naive(const DedekindArgs& args) {
  // ((k/q)) and ((kp/q)) are odd under q -> -q, so their product only sees |q|.
  const Integer q = abs(args.q());
  // With 0 < k < q and r = kp mod q (never 0 for coprime args):
  //   ((k/q)) ((kp/q)) = (2k - q)(2r - q) / (4 q^2).
  Integer numerator = 0;
  Integer r;
  for (Integer k = 1; k < q; ++k) {
    r = k * args.p();
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
    numerator += (2 * k - q) * (2 * r - q);
  }
  return make_rational(numerator, 4 * q * q);
}

Rational dedekind_sum(const DedekindArgs& args) {
  Integer q = abs(args.q());
  Integer p = mod_floor(args.p(), q);
  Rational total;
  bool negate = false;
  // Invariant: s(original) = total + (negate ? -1 : 1) * s(p, q), 0 <= p < q.
  while (q > 1) {
    // Reciprocity step; p is a unit mod q so p >= 1 here.
    const Integer pq = p * q;
    Rational step = make_rational(p * p + q * q + 1, 12 * pq) - make_rational(1, 4);
    total += negate ? -step : step;
    negate = !negate;
    Integer next = mod_floor(q, p);
    q = p;
    p = next;
  }
  return total;
}

Rational dedekind_symbol(const DedekindArgs& args) {
  Rational s = dedekind_sum(args) * Rational(12);
  return args.q() < 0 ? -s : s;
}

Rational dedekind_symbol(const Slope& slope) {
  return dedekind_symbol(DedekindArgs(slope.p(), slope.q()));
}

Rational dedekind_symbol(const Rational& x) {
  return dedekind_symbol(DedekindArgs(x.num(), x.den()));
}

}  // namespace cwsurgery
