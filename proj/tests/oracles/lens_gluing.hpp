#pragma once

// Surgery on the Hopf link with framings px/qx and py/qy glues two solid
// tori along T^2 x I, giving the lens space with |H1| = |px py - qx qy|.
// Choosing u, v with u px - v qx = 1, the result is P/beta surgery on the
// unknot with P = px py - qx qy and beta = qy u - py v. The expected
// lambda_w is that of the unknot surgery, or 0 when beta = 0 (then |P| = 1
// and the manifold is S^3).

#include <gmpxx.h>

#include "cwsurgery/casson_walker.hpp"

namespace oracle {

struct GluedLens {
  mpz_class P;
  mpz_class beta;
};

inline GluedLens glue_hopf(long px, long qx, long py, long qy) {
  mpz_class g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), mpz_class(px).get_mpz_t(),
             mpz_class(qx).get_mpz_t());
  // u px + v qx = 1, so take v -> -v.
  v = -v;
  return {mpz_class(px) * py - mpz_class(qx) * qy, mpz_class(qy) * u - mpz_class(py) * v};
}

inline cwsurgery::Rational hopf_lambda(long px, long qx, long py, long qy) {
  const GluedLens lens = glue_hopf(px, qx, py, qy);
  if (lens.beta == 0) return 0;
  return cwsurgery::lambda_knot({0, cwsurgery::Slope(lens.P, lens.beta)});
}

}  // namespace oracle
