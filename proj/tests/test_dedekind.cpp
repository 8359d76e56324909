#include <doctest.h>

#include <numeric>

#include "cwsurgery/dedekind.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"
#include "generators.hpp"
#include "sawtooth_dedekind.hpp"

using namespace cwsurgery;

namespace {
Rational frac(long a, long b) { return make_rational(a, b); }
Rational S(long p, long q) { return dedekind_symbol(DedekindArgs(p, q)); }
long inverse_mod(long a, long m) {
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(a).get_mpz_t(), Integer(m).get_mpz_t());
  return inv.get_si();
}
}  // namespace

TEST_CASE("sawtooth") {
  CHECK(sawtooth(frac(1, 2)) == 0);
  CHECK(sawtooth(frac(1, 3)) == frac(-1, 6));
  CHECK(sawtooth(frac(7, 3)) == frac(-1, 6));
  CHECK(sawtooth(frac(-1, 3)) == frac(1, 6));
  CHECK(sawtooth(Rational(5)) == 0);
}

TEST_CASE("DedekindArgs validates") {
  CHECK_THROWS_AS(DedekindArgs(1, 0), DomainError);
  CHECK_THROWS_AS(DedekindArgs(2, 4), DomainError);
  CHECK_NOTHROW(DedekindArgs(-3, 7));
}

TEST_CASE("naive sum examples") {
  CHECK(dedekind_sum_naive(DedekindArgs(1, 1)) == 0);
  CHECK(dedekind_sum_naive(DedekindArgs(1, 3)) == frac(1, 18));
  CHECK(dedekind_sum_naive(DedekindArgs(2, 3)) == frac(-1, 18));
}

TEST_CASE("fast sum examples") {
  CHECK(dedekind_sum(DedekindArgs(1, 5)) == frac(1, 5));
  CHECK(dedekind_sum(DedekindArgs(3, 5)) == 0);
  CHECK(dedekind_sum(DedekindArgs(5, 3)) == frac(-1, 18));
  CHECK(dedekind_sum(DedekindArgs(0, 1)) == 0);
}

TEST_CASE("symbol examples") {
  for (long p : {-9L, 0L, 1L, 4L, 100L}) CHECK(dedekind_symbol(Slope(p, 1)) == 0);
  CHECK(dedekind_symbol(Slope(1, 3)) == frac(2, 3));
  CHECK(dedekind_symbol(Slope(2, 3)) == frac(-2, 3));
  CHECK(dedekind_symbol(frac(4, 6)) == frac(-2, 3));
  // sign(q) enters the symbol; the sum itself only sees |q|.
  CHECK(S(1, -3) == frac(-2, 3));
  CHECK(dedekind_symbol(Slope(1, -3)) == dedekind_symbol(Slope(-1, 3)));
}

TEST_CASE("fast sum matches an independent sawtooth oracle") {
  for (long q = 1; q <= 80; ++q)
    for (long p = -2 * q; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const mpq_class expected = oracle::dedekind_sum(p, q);
      CHECK(dedekind_sum(DedekindArgs(p, q)).raw() == expected);
      CHECK(dedekind_sum(DedekindArgs(p, -q)).raw() == expected);
      CHECK(S(p, -q).raw() == oracle::dedekind_symbol(p, -q));
    }
}

TEST_CASE("reciprocity, periodicity, oddness and inverse symmetry") {
  oracle::Gen gen(21);
  for (int i = 0; i < 1000; ++i) {
    const long q = gen.range(1, 3000);
    const long p = gen.coprime_to(q, 1, 3000);
    const Rational P(p), Q(q);
    CHECK(S(p, q) - P / Q == -S(q, p) + Q / P + Rational(1) / (P * Q) - 3);
    CHECK(S(p + q, q) == S(p, q));
    CHECK(dedekind_sum(DedekindArgs(-p, q)) == -dedekind_sum(DedekindArgs(p, q)));
    if (q > 1) {
      const long p_star = inverse_mod(p % q, q);
      CHECK(dedekind_sum(DedekindArgs(p_star, q)) == dedekind_sum(DedekindArgs(p, q)));
    }
  }
}

TEST_CASE("large arguments stay exact") {
  const Integer q("1000000000000000000000000000057");
  const Integer p("123456789123456789");
  REQUIRE(gcd_pair(p, q) == 1);
  const Rational fast = dedekind_sum(DedekindArgs(p, q));
  const Rational back = dedekind_sum(DedekindArgs(q, p));
  // Reciprocity with arbitrary-precision p and q.
  CHECK(fast + back == Rational(-1) / 4 + (Rational(Integer(p * p)) + Rational(Integer(q * q)) + 1) /
                                              (Rational(12) * Rational(p) * Rational(q)));
}

TEST_CASE("mod-3 constants 3 S(m/3) = +-2") {
  for (long m = -30; m <= 100; ++m) {
    if (m % 3 == 0) continue;
    CHECK(3 * S(m, 3) == (mod_floor(m, 3) == 1 ? 2 : -2));
  }
}
