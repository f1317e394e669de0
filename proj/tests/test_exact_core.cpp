#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetaforms/cyclo.hpp"
#include "zetaforms/numtheory.hpp"
#include "zetaforms/poly.hpp"
#include "zetaforms/rational.hpp"

using namespace zetaforms;

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-8, 4)) == "-2");
  CHECK(rational_from_string("22/7") == Rational(22, 7));
  CHECK(rational_from_string("-5") == Rational(-5));
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  for (long p = -7; p <= 7; ++p)
    for (long q = 1; q <= 5; ++q) {
      Rational v(p, q);
      v.canonicalize();
      CHECK(rational_from_string(to_string(v)) == v);
    }
}

TEST_CASE("integer and rational powers") {
  CHECK(pow_int(Integer(3), 5) == 243);
  CHECK(pow_int(Integer(-2), 3) == -8);
  CHECK(pow_rat(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_rat(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_rat(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow_rat(Rational(0), -1), std::domain_error);
  Rational six_thirds(6, 3);
  six_thirds.canonicalize();
  CHECK(is_integer(six_thirds));
  CHECK(!is_integer(Rational(1, 3)));
}

TEST_CASE("lcm, factorial, binomial, pochhammer") {
  CHECK(lcm_upto(0) == 1);
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(6) == 60);
  CHECK(lcm_upto(10) == 2520);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  // rising factorial vs factorial quotient
  CHECK(pochhammer(Rational(1), 5) == Rational(factorial(5)));
  CHECK(pochhammer(Rational(3), 4) ==
        Rational(factorial(6)) / Rational(factorial(2)));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-2), 4) == 0);
}

TEST_CASE("primes and Euler phi") {
  CHECK(primes_upto(1).empty());
  CHECK(primes_upto(10) == std::vector<long>{2, 3, 5, 7});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("Bernoulli table") {
  const auto& b = bernoulli_even();
  REQUIRE(b.size() == 20);
  CHECK(b[0] == Rational(1, 6));     // B_2
  CHECK(b[1] == Rational(-1, 30));   // B_4
  CHECK(b[2] == Rational(1, 42));    // B_6
  CHECK(b[5] == Rational(-691, 2730));  // B_12
}

TEST_CASE("dense polynomial arithmetic") {
  DensePoly x = DensePoly::monomial(Rational(1), 1);
  DensePoly p = x * x - DensePoly(Rational(1));          // x^2 - 1
  DensePoly q = (x - DensePoly(Rational(1))) * (x - DensePoly(Rational(1)));
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == 8);
  CHECK(p.eval_at_one() == 0);
  CHECK(DensePoly().degree() == DensePoly::kNegInf);

  DensePoly g = DensePoly::gcd(p, q);
  CHECK(g == x - DensePoly(Rational(1)));  // monic gcd

  DensePoly quo, rem;
  DensePoly::divmod(p * q + x, q, quo, rem);
  CHECK(quo * q + rem == p * q + x);
  CHECK(rem.degree() < q.degree());
  CHECK(DensePoly::divexact(p * q, q) == p);
  CHECK_THROWS_AS(DensePoly::divexact(p * q + x, q), std::domain_error);
  CHECK_THROWS_AS(DensePoly::divmod(p, DensePoly(), quo, rem),
                  std::domain_error);

  CHECK(p.derivative() == x * Rational(2));
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly z(DensePoly::monomial(Rational(1), 1));
  LaurentPoly w = z.mul_z_power(-3);  // z^{-2}
  CHECK(w.min_degree() == -2);
  CHECK(w.eval(Rational(2)) == Rational(1, 4));
  LaurentPoly s = w + z;
  CHECK(s.coeff(-2) == 1);
  CHECK(s.coeff(1) == 1);
  CHECK(s.coeff(0) == 0);
  CHECK((s - s).is_zero());

  // exact division by (1-z)
  LaurentPoly one(DensePoly(Rational(1)));
  LaurentPoly f = (one - z) * s;
  CHECK(f.div_one_minus_z() == s);
  CHECK_THROWS_AS((s + one).div_one_minus_z(), std::domain_error);

  // derivative of c z^e is c e z^{e-1}, including negative e
  LaurentPoly d = w.derivative();
  CHECK(d.min_degree() == -3);
  CHECK(d.coeff(-3) == -2);
}

TEST_CASE("truncated series, log and shifted evaluation") {
  TruncatedSeries lg = series_log_at_one(5);
  CHECK(lg.coeff(0) == 0);
  CHECK(lg.coeff(1) == 1);
  CHECK(lg.coeff(2) == Rational(-1, 2));
  CHECK(lg.coeff(3) == Rational(1, 3));
  CHECK(lg.coeff(4) == Rational(-1, 4));

  DensePoly p = DensePoly::monomial(Rational(1), 2);  // z^2
  TruncatedSeries sh = poly_at_one_plus(p, 4);        // (1+w)^2
  CHECK(sh.coeff(0) == 1);
  CHECK(sh.coeff(1) == 2);
  CHECK(sh.coeff(2) == 1);
  CHECK(sh.coeff(3) == 0);
}

TEST_CASE("cyclotomic minimal polynomials") {
  CHECK(cyclotomic_min_poly(1) == DensePoly({Rational(-1), Rational(1)}));
  CHECK(cyclotomic_min_poly(4) ==
        DensePoly({Rational(1), Rational(0), Rational(1)}));
  CHECK(cyclotomic_min_poly(6) ==
        DensePoly({Rational(1), Rational(-1), Rational(1)}));
  CHECK(cyclotomic_min_poly(12).degree() == 4);
  CHECK(cyclotomic_min_poly(7).degree() == 6);
  CHECK_THROWS_AS(cyclotomic_min_poly(0), std::domain_error);
}

TEST_CASE("cyclotomic field arithmetic") {
  CycloNumber i = CycloNumber::root_of_unity(4, 1);
  CHECK(i * i == CycloNumber(-1));
  CHECK(CycloNumber::root_of_unity(4, 4) == CycloNumber(1));
  CHECK(CycloNumber::root_of_unity(4, -1) == i * i * i);

  // inverse round trip for 1 + omega_4
  CycloNumber v = CycloNumber(1) + i;
  CHECK(v * v.inverse() == CycloNumber(1));
  CHECK(v.inverse() == (CycloNumber(1) - i) * CycloNumber(Rational(1, 2)));
  CHECK_THROWS_AS(CycloNumber(0).inverse(), std::domain_error);

  // mixed-order arithmetic embeds into the lcm order
  CycloNumber m1 = CycloNumber::root_of_unity(2, 1);
  CHECK(m1 == CycloNumber(-1));
  CHECK(i * i == m1.embed(4));

  // sum over all N-th roots of unity vanishes
  for (long N : {3L, 4L, 5L, 6L}) {
    CycloNumber s(0);
    for (long k = 0; k < N; ++k) s = s + CycloNumber::root_of_unity(N, k);
    CHECK(s.is_zero());
  }

  CHECK(CycloNumber(Rational(2, 3)).is_rational());
  CHECK(CycloNumber(Rational(2, 3)).rational_value() == Rational(2, 3));
  CHECK(!i.is_rational());
  CHECK_THROWS_AS(i.rational_value(), std::domain_error);
}
