#pragma once

#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// d_m = lcm(1,...,m); d_0 = 1 (empty lcm).
inline Integer lcm_upto(long m) {
  if (m < 0) throw std::domain_error("lcm_upto: m must be >= 0");
  Integer d(1);
  for (long i = 2; i <= m; ++i) mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), i);
  return d;
}

inline Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// (x)_p = x (x+1) ... (x+p-1)
inline Rational pochhammer(const Rational& x, unsigned long p) {
  Rational r(1);
  for (unsigned long i = 0; i < p; ++i) r *= x + long(i);
  r.canonicalize();
  return r;
}

inline std::vector<long> primes_upto(long bound) {
  std::vector<long> primes;
  if (bound < 2) return primes;
  std::vector<bool> sieve(size_t(bound) + 1, true);
  for (long p = 2; p <= bound; ++p) {
    if (!sieve[size_t(p)]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= bound; q += p) sieve[size_t(q)] = false;
  }
  return primes;
}

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// B_2, B_4, ..., B_40 (even-index Bernoulli numbers)
inline const std::vector<Rational>& bernoulli_even() {
  static const std::vector<Rational> table = {
      Rational(1, 6),
      Rational(-1, 30),
      Rational(1, 42),
      Rational(-1, 30),
      Rational(5, 66),
      Rational(-691, 2730),
      Rational(7, 6),
      Rational(-3617, 510),
      Rational(43867, 798),
      Rational(-174611, 330),
      Rational(854513, 138),
      Rational(Integer("-236364091"), Integer(2730)),
      Rational(Integer("8553103"), Integer(6)),
      Rational(Integer("-23749461029"), Integer(870)),
      Rational(Integer("8615841276005"), Integer(14322)),
      Rational(Integer("-7709321041217"), Integer(510)),
      Rational(Integer("2577687858367"), Integer(6)),
      Rational(Integer("-26315271553053477373"), Integer(1919190)),
      Rational(Integer("2929993913841559"), Integer(6)),
      Rational(Integer("-261082718496449122051"), Integer(13530))};
  return table;
}

}  // namespace zetaforms
