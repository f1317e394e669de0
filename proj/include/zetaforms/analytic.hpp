#pragma once

#include <cmath>
#include <vector>

#include "zetaforms/ball.hpp"
#include "zetaforms/hyper.hpp"

namespace zetaforms {

// e^{2 pi i k / N}
inline CBall root_ball(long N, long k, const Ctx& ctx) {
  k = ((k % N) + N) % N;
  Real theta = Real::pi(ctx.bits) * Real::of(2L * k, ctx.bits) / Real::of(N, ctx.bits);
  return CBall(theta.cos(), theta.sin(), 4 * ctx.eps());
}

inline CBall cyclo_ball(const CycloNumber& v, const Ctx& ctx) {
  CBall acc = CBall::zero(ctx);
  const auto& c = v.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      acc = acc + root_ball(v.order(), long(i), ctx).scaled(c[i]);
  return acc;
}

// zeta(s, x) for integer s >= 2 and rational 0 < x <= 1, by direct summation
// to a cutoff plus an Euler-Maclaurin tail whose error is bounded by the
// first omitted Bernoulli term (doubled for safety).
inline CBall hurwitz_zeta(long s, const Rational& x, const Ctx& ctx) {
  if (s <= 1) throw std::domain_error("divergent");
  if (x <= 0 || x > 1) throw std::domain_error("hurwitz_zeta: need 0 < x <= 1");
  const auto& bern = bernoulli_even();
  const size_t V = bern.size() - 1;  // terms used; last entry bounds the error
  double tiny = std::ldexp(1.0, -int(std::min(ctx.bits, 1000L)));
  double tail_target = std::min(ctx.target, tiny);

  long M = 64;
  auto error_at = [&](long m) {
    // |B_{2(V+1)} / (2(V+1))! * (s)_{2V+1} * (m+x)^{-s-2V-1}|
    Rational c = bern.back() / Rational(factorial(2 * (unsigned long)(V + 1)));
    c *= pochhammer(Rational(s), 2 * (unsigned long)V + 1);
    double logc = std::log(std::abs(c.get_d()) + 1e-300);
    double logm = std::log(double(m) + x.get_d());
    return 2.0 * std::exp(logc - double(s + 2 * long(V) + 1) * logm);
  };
  while (error_at(M) > tail_target && M < (1L << 16)) M *= 2;
  double em_err = error_at(M);

  Real sum(ctx.bits);
  for (long m = 0; m < M; ++m)
    sum = sum + (Real::of(m, ctx.bits) + Real::of(x, ctx.bits)).pow_si(-s);
  Real Mx = Real::of(M, ctx.bits) + Real::of(x, ctx.bits);
  sum = sum + Mx.pow_si(1 - s) / Real::of(s - 1, ctx.bits);
  sum = sum + Mx.pow_si(-s) / Real::of(2L, ctx.bits);
  for (size_t v = 1; v <= V; ++v) {
    Rational c = bern[v - 1] / Rational(factorial(2 * (unsigned long)v));
    c *= pochhammer(Rational(s), 2 * (unsigned long)v - 1);
    sum = sum + Real::of(c, ctx.bits) * Mx.pow_si(-s - 2 * long(v) + 1);
  }
  double rad = em_err + double(M + V + 4) * ctx.eps() * (1.0 + std::abs(sum.to_double()));
  return CBall::real_ball(sum, rad);
}

// L(f, s) = sum_u f(u) T^{-s} zeta(s, u/T)
inline CBall L_value(const PeriodicFunction& f, long s, const Ctx& ctx) {
  if (s <= 1) throw std::domain_error("divergent");
  long T = f.period();
  CBall acc = CBall::zero(ctx);
  Rational scale = pow_rat(Rational(T), -s);
  for (long u = 1; u <= T; ++u) {
    CycloNumber fu = f.at_cyclo(u);
    if (fu.is_zero()) continue;
    CBall z = hurwitz_zeta(s, Rational(u, T), ctx);
    acc = acc + (cyclo_ball(fu, ctx) * z).scaled(scale);
  }
  return acc;
}

// Li_j(omega_N^l); j = 1 uses -log(1 - z) in closed form, j >= 2 the
// Hurwitz decomposition Li_j(omega^l) = N^{-j} sum_u omega^{lu} zeta(j, u/N).
inline CBall eval_polylog(long j, long N, long l, const Ctx& ctx) {
  long lam = ((l % N) + N) % N;
  if (j <= 0) throw std::domain_error("eval_polylog: j must be >= 1");
  if (j == 1) {
    if (lam == 0) throw std::domain_error("divergent");
    // 1 - e^{i theta} has modulus 2 sin(theta/2), argument (theta - pi)/2
    Real pi = Real::pi(ctx.bits);
    Real theta = pi * Real::of(2L * lam, ctx.bits) / Real::of(N, ctx.bits);
    Real half = theta / Real::of(2L, ctx.bits);
    Real re = -(Real::of(2L, ctx.bits) * half.sin()).log();
    Real im = (pi - theta) / Real::of(2L, ctx.bits);
    return CBall(re, im, 8 * ctx.eps() * (1 + std::abs(re.to_double()) +
                                          std::abs(im.to_double())));
  }
  CBall acc = CBall::zero(ctx);
  for (long u = 1; u <= N; ++u)
    acc = acc + root_ball(N, lam * u, ctx) * hurwitz_zeta(j, Rational(u, N), ctx);
  return acc.scaled(pow_rat(Rational(N), -j));
}

// Direct-summation oracle for Li_j(omega_N^l): partial sums with a plain
// integral tail for j >= 2 and an Abel-summation tail for j = 1.
inline CBall polylog_direct(long j, long N, long l, const Ctx& ctx,
                            long budget = (1L << 20)) {
  long lam = ((l % N) + N) % N;
  if (j == 1 && lam == 0) throw std::domain_error("divergent");
  std::vector<CBall> omega_pow;
  for (long m = 0; m < N; ++m) omega_pow.push_back(root_ball(N, m, ctx));
  double dist_one = 2.0 * std::sin(M_PI * double(lam) / double(N));  // |1 - z|
  auto tail_at = [&](long M) {
    if (j == 1) return 2.0 / (dist_one * double(M));
    return std::pow(double(M), 1.0 - double(j)) / double(j - 1);
  };
  long M = 1024;
  while (tail_at(M) > ctx.target && M < budget) M *= 2;
  CBall acc = CBall::zero(ctx);
  for (long m = 1; m <= M; ++m) {
    Rational c = pow_rat(Rational(m), -j);
    acc = acc + omega_pow[size_t((lam * m) % N)].scaled(c);
  }
  acc.rad += tail_at(M);
  return acc;
}

// (k-1)-th derivative of S_0 at omega^l (side 0) or of S_infty at omega^{-l}
// (side infty), by termwise differentiation of the defining series; the tail
// uses |F(+-t)| <= C t^{-d_0} with C sampled at the cutoff times a safety
// margin of 2, and the cutoff doubles until the bound meets the target.
enum class Side { zero, infinity };

inline CBall eval_S_derivative(const FormFamily& fam, Side side, long k, long l,
                               const Ctx& ctx, long budget = (1L << 17)) {
  const Params& par = fam.par;
  const long d0 = par.d0();
  if (k > fam.K) throw std::invalid_argument("k exceeds built levels");
  if (d0 < k + 2) throw std::domain_error("insufficient decay for termwise differentiation");
  FactoredF F(par);
  std::vector<CBall> omega_pow;
  for (long m = 0; m < par.N; ++m) omega_pow.push_back(root_ball(par.N, m, ctx));
  auto omega_at = [&](long e) -> const CBall& {
    return omega_pow[size_t(((e % par.N) + par.N) % par.N)];
  };

  long t0 = (side == Side::zero) ? par.n + 1 : 1;
  auto tail_at = [&](long M) {
    Rational fm = F.eval(side == Side::zero ? Rational(-M) : Rational(M));
    double C = 2.0 * std::abs(fm.get_d()) * std::pow(double(M), double(d0));
    return C * std::pow(double(M), double(k - d0)) / double(d0 - k);
  };
  long M = std::max<long>(4 * par.n + 64, 256);
  while (tail_at(M) > ctx.target && M < budget) M *= 2;

  CBall acc = CBall::zero(ctx);
  for (long t = t0; t <= M; ++t) {
    Rational term = (side == Side::zero) ? F.eval(Rational(-t)) : F.eval(Rational(t));
    if (term == 0) continue;
    if (side == Side::zero) {
      // d^{k-1}/dz^{k-1} z^t = t(t-1)...(t-k+2) z^{t-k+1}
      for (long i = 0; i < k - 1; ++i) term *= Rational(t - i);
      acc = acc + omega_at(l * (t - k + 1)).scaled(term);
    } else {
      // d^{k-1}/dz^{k-1} z^{-t} = (-1)^{k-1} t(t+1)...(t+k-2) z^{-t-k+1};
      // evaluated at z = omega^{-l}
      for (long i = 0; i < k - 1; ++i) term *= Rational(t + i);
      if ((k - 1) % 2 != 0) term = -term;
      acc = acc + omega_at(l * (t + k - 1)).scaled(term);
    }
  }
  acc.rad += tail_at(M);
  return acc;
}

// Same quantities through the exact expansion
// S_0^{(k-1)}(z) = U_k(z) + sum_j P_{k,j}(z) (-1)^j Li_j(z) and
// S_infty^{(k-1)}(z) = V_k(z) + sum_j P_{k,j}(z) Li_j(1/z);
// at z = 1 the polylog sum starts at j = 2 (and P_{k,1}(1) = 0).
inline CBall S_derivative_expansion(const FormFamily& fam, Side side, long k,
                                    long l, const Ctx& ctx) {
  const Params& par = fam.par;
  if (k > fam.K) throw std::invalid_argument("k exceeds built levels");
  const auto& lvl = fam.level(k);
  long lam = ((l % par.N) + par.N) % par.N;
  bool at_one = (lam == 0);
  long arg = (side == Side::zero) ? lam : -lam;  // point of evaluation
  CBall acc = cyclo_ball(
      laurent_value_at_root(side == Side::zero ? lvl.U : lvl.V, par.N, arg),
      ctx);
  for (long j = at_one ? 2 : 1; j <= par.a; ++j) {
    CycloNumber pv = laurent_value_at_root(lvl.P[size_t(j - 1)], par.N, arg);
    if (pv.is_zero()) continue;
    // Li_j(omega^lam) in both cases: side 0 evaluates Li_j(z) at z=omega^lam,
    // side infty evaluates Li_j(1/z) at z=omega^{-lam}
    CBall li = eval_polylog(j, par.N, lam, ctx);
    CBall coeff = cyclo_ball(pv, ctx);
    if (side == Side::zero && j % 2 != 0) coeff = -coeff;
    acc = acc + coeff * li;
  }
  return acc;
}

struct LinearFormValue {
  long k = 0;
  CBall lhs;
  CBall rhs;
  bool verdict = false;
  double gap = 0.0;     // |mid(lhs - rhs)|
  double bound = 0.0;   // combined radius

  LinearFormValue() : lhs(64), rhs(64) {}
};

// Lemma identity: delta_n sum_l fhat(l) [omega^{l(k-1)} S_0^{(k-1)}(omega^l)
// + (-1)^p omega^{l(1-k)} S_infty^{(k-1)}(omega^{-l})]
//   = 2(-1)^p sum_{i = p mod 2} s_{k,i} L(f,i) + sum_lambda s_{k,a+1+lambda} f(lambda).
inline LinearFormValue lambda_check(const FormFamily& fam,
                                    const PeriodicFunction& f, long k,
                                    const Ctx& ctx) {
  const Params& par = fam.par;
  // guard digits sized to the integer coefficients, so that the final
  // enclosure meets the nominal precision despite the large magnitudes
  long guard = long(mpz_sizeinbase(fam.delta.get_mpz_t(), 2));
  for (long i = 2; i <= par.a + par.N; ++i) {
    const Integer& s = fam.ski(k, i);
    if (s != 0)
      guard = std::max(guard, long(mpz_sizeinbase(s.get_mpz_t(), 2)));
  }
  Ctx work(ctx.bits + guard + 32, ctx.target);
  std::vector<CycloNumber> hat = fourier_hat(f, par.N);
  CBall lhs = CBall::zero(work);
  for (long l = 1; l <= par.N; ++l) {
    if (hat[size_t(l - 1)].is_zero()) continue;
    CBall s0 = S_derivative_expansion(fam, Side::zero, k, l, work);
    CBall si = S_derivative_expansion(fam, Side::infinity, k, l, work);
    CBall term = root_ball(par.N, l * (k - 1), work) * s0;
    CBall infpart = root_ball(par.N, l * (1 - k), work) * si;
    if (par.p % 2 != 0) infpart = -infpart;
    lhs = lhs + cyclo_ball(hat[size_t(l - 1)], work) * (term + infpart);
  }
  lhs = lhs.scaled(Rational(fam.delta));

  CBall rhs = CBall::zero(ctx);
  for (long i = 2; i <= par.a; ++i) {
    if ((i - par.p) % 2 != 0) continue;
    if (fam.ski(k, i) == 0) continue;
    Rational c = Rational(2 * fam.ski(k, i));
    if (par.p % 2 != 0) c = -c;
    rhs = rhs + L_value(f, i, work).scaled(c);
  }
  for (long lam = 0; lam <= par.N - 1; ++lam) {
    const Integer& s = fam.ski(k, par.a + 1 + lam);
    if (s == 0) continue;
    rhs = rhs + cyclo_ball(f.at_cyclo(lam), work).scaled(Rational(s));
  }

  LinearFormValue out;
  out.k = k;
  out.lhs = lhs;
  out.rhs = rhs;
  CBall diff = lhs - rhs;
  out.gap = std::hypot(diff.re.to_double(), diff.im.to_double());
  out.bound = diff.rad;
  out.verdict = out.gap <= out.bound * (1 + 1e-9) + 1e-300;
  return out;
}

struct GrowthRow {
  long n = 0;
  double log_lambda_over_n = 0.0;
  double log_smax_over_n = 0.0;
};

// Empirical exponents log|Lambda_1|/n and max_i log|s_{1,i}|/n per n.
inline std::vector<GrowthRow> growth_study(Params templ,
                                           const PeriodicFunction& f,
                                           const std::vector<long>& n_grid,
                                           const Ctx& ctx) {
  std::vector<GrowthRow> rows;
  for (long n : n_grid) {
    Params par = templ;
    par.n = n;
    FormFamily fam = build_family(par);
    LinearFormValue v = lambda_check(fam, f, 1, ctx);
    double smax = 0.0;
    for (long i = 2; i <= par.a + par.N; ++i) {
      double x = std::abs(Rational(fam.ski(1, i)).get_d());
      smax = std::max(smax, x);
    }
    GrowthRow row;
    row.n = n;
    double lam = std::hypot(v.lhs.re.to_double(), v.lhs.im.to_double());
    row.log_lambda_over_n = std::log(std::max(lam, 1e-300)) / double(n);
    row.log_smax_over_n = std::log(std::max(smax, 1.0)) / double(n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zetaforms
