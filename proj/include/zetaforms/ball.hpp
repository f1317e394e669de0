#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>

#include "zetaforms/rational.hpp"

namespace zetaforms {

struct Ctx {
  long bits = 256;
  double target = 1e-30;

  Ctx() = default;
  Ctx(long b, double t) : bits(b), target(t) {
    if (bits < 64) throw std::invalid_argument("precision must be >= 64 bits");
  }

  // rounding slack per operation
  double eps() const {
    long e = bits - 4;
    if (e > 1020) e = 1020;
    return std::ldexp(1.0, -int(e));
  }
};

// RAII wrapper around mpfr_t at a fixed precision.
class Real {
 public:
  explicit Real(long prec = 256) : prec_(prec) { mpfr_init2(x_, prec_); mpfr_set_zero(x_, 1); }
  Real(const Real& o) : prec_(o.prec_) {
    mpfr_init2(x_, prec_);
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(x_, prec_);
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, o.prec_);
      prec_ = o.prec_;
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    std::swap(prec_, o.prec_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  long prec() const { return prec_; }
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

  static Real of(long v, long prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
  }
  static Real of(double v, long prec) {
    Real r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
  }
  static Real of(const Rational& v, long prec) {
    Real r(prec);
    mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Real of(const Integer& v, long prec) {
    Real r(prec);
    mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
  }

#define ZF_REAL_BINOP(op, fn)                              \
  friend Real operator op(const Real& a, const Real& b) {  \
    Real r(std::max(a.prec_, b.prec_));                    \
    fn(r.x_, a.x_, b.x_, MPFR_RNDN);                       \
    return r;                                              \
  }
  ZF_REAL_BINOP(+, mpfr_add)
  ZF_REAL_BINOP(-, mpfr_sub)
  ZF_REAL_BINOP(*, mpfr_mul)
  ZF_REAL_BINOP(/, mpfr_div)
#undef ZF_REAL_BINOP

  Real operator-() const {
    Real r(prec_);
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real abs() const {
    Real r(prec_);
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real log() const {
    Real r(prec_);
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real exp() const {
    Real r(prec_);
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real sin() const {
    Real r(prec_);
    mpfr_sin(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real cos() const {
    Real r(prec_);
    mpfr_cos(r.x_, x_, MPFR_RNDN);
    return r;
  }
  // x^e for integer e (handles negative exponents)
  Real pow_si(long e) const {
    Real r(prec_);
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }

  std::string str(int digits = 40) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  long prec_;
  mpfr_t x_;
};

// Complex midpoint with a scalar radius bound; every operation adds
// rounding slack eps*(1 + magnitude) on top of propagated radii.
struct CBall {
  Real re, im;
  double rad = 0.0;

  explicit CBall(long prec = 256) : re(prec), im(prec) {}
  CBall(Real r, Real i, double rd) : re(std::move(r)), im(std::move(i)), rad(rd) {}

  static CBall zero(const Ctx& ctx) { return CBall(ctx.bits); }
  static CBall exact(const Rational& v, const Ctx& ctx) {
    return CBall(Real::of(v, ctx.bits), Real(ctx.bits), ctx.eps());
  }
  static CBall real_ball(Real v, double rd) {
    long p = v.prec();
    return CBall(std::move(v), Real(p), rd);
  }

  long prec() const { return re.prec(); }
  // upper bound on the midpoint modulus
  double mag() const {
    return std::abs(re.to_double()) + std::abs(im.to_double());
  }
  double abs_upper() const { return mag() * (1 + 1e-12) + rad; }
  // lower bound on the modulus of anything in the ball
  double abs_lower() const {
    double m = std::hypot(re.to_double(), im.to_double()) * (1 - 1e-12) - rad;
    return m > 0 ? m : 0.0;
  }

  static double slack(const CBall& v) {
    Ctx c;
    c.bits = v.prec();
    return c.eps() * (1.0 + v.mag());
  }

  friend CBall operator+(const CBall& a, const CBall& b) {
    CBall r(a.re + b.re, a.im + b.im, a.rad + b.rad);
    r.rad += slack(r);
    return r;
  }
  friend CBall operator-(const CBall& a, const CBall& b) {
    CBall r(a.re - b.re, a.im - b.im, a.rad + b.rad);
    r.rad += slack(r);
    return r;
  }
  friend CBall operator*(const CBall& a, const CBall& b) {
    CBall r(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re,
            a.abs_upper() * b.rad + b.abs_upper() * a.rad + a.rad * b.rad);
    r.rad += slack(r);
    return r;
  }
  CBall operator-() const { return CBall(-re, -im, rad); }

  CBall scaled(const Rational& s) const {
    Real f = Real::of(s, prec());
    CBall r(re * f, im * f, rad * (std::abs(f.to_double()) * (1 + 1e-12)));
    r.rad += slack(r);
    return r;
  }
};

inline std::string serialize(const CBall& v) {
  char buf[32];
  snprintf(buf, sizeof buf, "%.6e", v.rad);
  return "{\"mid_re\": \"" + v.re.str() + "\", \"mid_im\": \"" + v.im.str() +
         "\", \"rad\": \"" + buf + "\"}";
}

}  // namespace zetaforms
