#include <doctest.h>

#include <numeric>

#include "cwsurgery/error.hpp"
#include "cwsurgery/json_io.hpp"
#include "cwsurgery/number_theory.hpp"
#include "cwsurgery/rational.hpp"
#include "cwsurgery/slope.hpp"
#include "generators.hpp"

using namespace cwsurgery;

TEST_CASE("make_rational reduces and moves the sign to the numerator") {
  CHECK(make_rational(6, 4).str() == "3/2");
  CHECK(make_rational(3, -6).str() == "-1/2");
  CHECK(make_rational(0, 7).str() == "0/1");
  CHECK(make_rational(-4, -2).str() == "2/1");
  CHECK_THROWS_WITH_AS(make_rational(1, 0), doctest::Contains("degenerate fraction"), DomainError);
}

TEST_CASE("make_rational is invariant under scaling") {
  oracle::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const long a = gen.range(-1000, 1000), b = gen.nonzero(1000), k = gen.nonzero(50);
    const Rational r = make_rational(a, b);
    CHECK(r == make_rational(Integer(a) * k, Integer(b) * k));
    CHECK(r.den() >= 1);
    CHECK(gcd_pair(r.num(), r.den()) == 1);
  }
}

TEST_CASE("Rational arithmetic is exact") {
  const Rational third = make_rational(1, 3);
  CHECK(third + third + third == 1);
  CHECK((third * 3).is_integer());
  CHECK(Rational(1) / make_rational(-2, 5) == make_rational(-5, 2));
  CHECK_THROWS_AS(third / Rational(0), DomainError);
  CHECK(make_rational(-7, 2).floor() == -4);
  CHECK(make_rational(7, 2).floor() == 3);
  CHECK(make_rational(-1, 3) < make_rational(-1, 4));
  // Far beyond 64 bits.
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= make_rational(1000003, 7);
  CHECK(big / big == 1);
  CHECK(big.num().get_str().size() > 200);
}

TEST_CASE("Rational parse and render round-trip") {
  CHECK(Rational::parse("-23/90") == make_rational(-23, 90));
  CHECK(Rational::parse("12") == 12);
  CHECK(Rational::parse("4/1") == 4);
  CHECK(Rational::parse("6/-4").str() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("3/"), DomainError);
  oracle::Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    const Rational r = make_rational(gen.range(-100000, 100000), gen.nonzero(100000));
    CHECK(Rational::parse(r.str()) == r);
    CHECK(rational_from_json(Json::parse(rational_json(r).dump())) == r);
  }
}

TEST_CASE("approx is a display rendering rounded half away from zero") {
  CHECK(make_rational(1, 3).approx(4) == "0.3333");
  CHECK(make_rational(2, 3).approx(4) == "0.6667");
  CHECK(make_rational(-23, 90).approx(6) == "-0.255556");
  CHECK(Rational(5).approx(2) == "5.00");
}

TEST_CASE("integers serialize as numbers when small and strings when huge") {
  CHECK(integer_json(Integer(42)).dump() == "42");
  const Integer huge("123456789012345678901234567890");
  CHECK(integer_json(huge).dump() == "\"123456789012345678901234567890\"");
  CHECK(integer_from_json(integer_json(huge)) == huge);
  CHECK(integer_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), DomainError);
}

TEST_CASE("gcd_pair") {
  CHECK(gcd_pair(6, 4) == 2);
  CHECK(gcd_pair(0, 5) == 5);
  CHECK(gcd_pair(9, 63) == 9);
  CHECK(gcd_pair(0, 0) == 0);
  CHECK(gcd_pair(-6, 4) == 2);
  oracle::Gen gen(13);
  for (int i = 0; i < 500; ++i) {
    const long a = gen.range(-5000, 5000), b = gen.range(-5000, 5000), c = gen.range(-5000, 5000);
    const Integer g = gcd_pair(a, b);
    CHECK(g == gcd_pair(b, a));
    CHECK(gcd_pair(gcd_pair(a, b), c) == gcd_pair(a, gcd_pair(b, c)));
    CHECK(g == std::gcd(a, b));
    if (g != 0) CHECK((divides(g, a) && divides(g, b)));
  }
}

TEST_CASE("squarefree_decompose examples") {
  auto d = squarefree_decompose(1);
  CHECK((d.d == 1 && d.p_prime == 1));
  d = squarefree_decompose(12);
  CHECK((d.d == 2 && d.p_prime == 3));
  d = squarefree_decompose(63);
  CHECK((d.d == 3 && d.p_prime == 7));
  CHECK_THROWS_AS(squarefree_decompose(0), DomainError);
  CHECK_THROWS_AS(squarefree_decompose(-4), DomainError);
}

TEST_CASE("squarefree_decompose against trial division") {
  for (long n = 1; n <= 5000; ++n) {
    const auto dec = squarefree_decompose(n);
    CHECK(dec.d * dec.d * dec.p_prime == n);
    for (long k = 2; k * k <= dec.p_prime.get_si(); ++k) CHECK(dec.p_prime.get_si() % (k * k) != 0);
    long largest = 1;
    for (long k = 1; k * k <= n; ++k)
      if (n % (k * k) == 0) largest = k;
    CHECK(dec.d == largest);
    CHECK(is_squarefree(n) == (largest == 1));
  }
}

TEST_CASE("mod_floor lands in [0, |m|)") {
  CHECK(mod_floor(-1, 3) == 2);
  CHECK(mod_floor(7, -3) == 1);
  CHECK(mod_floor(0, 5) == 0);
}

TEST_CASE("Slope normalizes and rejects bad input") {
  const Slope s(3, -4);
  CHECK(s.p() == -3);
  CHECK(s.q() == 4);
  CHECK(Slope::parse("7").str() == "7/1");
  CHECK(Slope::parse("-5/3") == Slope(5, -3));
  CHECK_THROWS_WITH_AS(Slope(1, 0), doctest::Contains("degenerate fraction"), DomainError);
  CHECK_THROWS_WITH_AS(Slope::parse("4/6"), doctest::Contains("not reduced"), DomainError);
  CHECK(Slope::from_rational(make_rational(4, 6)) == Slope(2, 3));
}
