#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace zetaforms {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, plain "p" when q = 1.
inline std::string to_string(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for signed e (exact; base != 0 when e < 0)
inline Rational pow_rat(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to negative power");
    b = 1 / b;
  }
  Rational r(1);
  Rational p = b;
  while (k) {
    if (k & 1) r *= p;
    p *= p;
    k >>= 1;
  }
  r.canonicalize();
  return r;
}

}  // namespace zetaforms
