#pragma once

// Dedekind sums straight from the definition with plain mpq_class, sharing
// no code with the library.

#include <gmpxx.h>

namespace oracle {

inline mpq_class sawtooth(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class frac = x - fl;
  if (frac == 0) return 0;
  return frac - mpq_class(1, 2);
}

/// s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((kp/q)).
inline mpq_class dedekind_sum(long p, long q) {
  const long aq = q < 0 ? -q : q;
  mpq_class total = 0;
  for (long k = 1; k < aq; ++k) {
    mpq_class a(k, aq);
    mpq_class b(mpz_class(k) * p, mpz_class(aq));
    a.canonicalize();
    b.canonicalize();
    total += sawtooth(a) * sawtooth(b);
  }
  return total;
}

/// S(p/q) = 12 sign(q) s(p, q).
inline mpq_class dedekind_symbol(long p, long q) {
  return (q < 0 ? -12 : 12) * dedekind_sum(p, q);
}

}  // namespace oracle
