#include "cwsurgery/number_theory.hpp"

#include "cwsurgery/error.hpp"

namespace cwsurgery {

Integer gcd_pair(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

SquareFreeDecomposition squarefree_decompose(const Integer& n) {
  if (n <= 0) {
    throw DomainError("squarefree_decompose needs a positive integer, got " + n.get_str());
  }
  Integer rest = n;
  Integer d = 1;
  Integer p_prime = 1;
  for (Integer f = 2; f * f <= rest; ++f) {
    unsigned exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
      rest /= f;
      ++exponent;
    }
    for (unsigned k = 0; k < exponent / 2; ++k) d *= f;
    if (exponent % 2 == 1) p_prime *= f;
  }
  // Whatever remains is 1 or a prime appearing once.
  p_prime *= rest;
  return {d, p_prime};
}

bool is_squarefree(const Integer& n) { return squarefree_decompose(n).d == 1; }

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace cwsurgery
