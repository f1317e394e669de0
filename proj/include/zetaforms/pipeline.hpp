#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetaforms/analytic.hpp"
#include "zetaforms/pade.hpp"

namespace zetaforms {

// alpha = (4e)^{(a+1)/N} (2N)^{2r+2} r^{-(a+1)/N + 4(r+1)},
// beta  = (2e)^{(a+1)/N} (r+1)^{2r+2} N^{2r+2}; computed through logarithms.
struct BoundParams {
  long a = 0, r = 0, N = 0;
  Real log_alpha, log_beta;
  double tau_siegel = 0.0;       // -log alpha / log beta
  double dimension_bound = 0.0;  // 1 + tau

  BoundParams() : log_alpha(64), log_beta(64) {}
};

inline BoundParams alpha_beta(long a, long r, long N, const Ctx& ctx = Ctx()) {
  if (a < 2 || r < 1 || N < 1)
    throw std::invalid_argument("alpha_beta: invalid parameters");
  const long bits = ctx.bits;
  Real one(bits);
  Real e = Real::of(1L, bits).exp();
  Real frac = Real::of(a + 1, bits) / Real::of(N, bits);
  BoundParams out;
  out.a = a;
  out.r = r;
  out.N = N;
  out.log_alpha = frac * (Real::of(4L, bits) * e).log() +
                  Real::of(2 * r + 2, bits) * Real::of(2 * N, bits).log() +
                  (Real::of(4 * (r + 1), bits) - frac) * Real::of(r, bits).log();
  out.log_beta = frac * (Real::of(2L, bits) * e).log() +
                 Real::of(2 * r + 2, bits) * Real::of(r + 1, bits).log() +
                 Real::of(2 * r + 2, bits) * Real::of(N, bits).log();
  out.tau_siegel = -out.log_alpha.to_double() / out.log_beta.to_double();
  out.dimension_bound = 1.0 + out.tau_siegel;
  return out;
}

// 1 - log alpha / log beta - N with r = floor(a / (log a)^2).
inline double theorem1_bound(long a, long N, const Ctx& ctx = Ctx()) {
  double la = std::log(double(a));
  long r = long(double(a) / (la * la));
  if (r < 1 || 3 * r * N >= a) throw std::invalid_argument("a too small for N");
  BoundParams b = alpha_beta(a, r, N, ctx);
  return 1.0 - b.log_alpha.to_double() / b.log_beta.to_double() - double(N);
}

// Heuristic Siegel fit: given per-n data (Q_n, max_i |l^(n)_i|, |form_n|)
// with identical column spaces, fit tau from |form| <= Q^{-tau} by a
// through-origin log regression and return tau + 1.
struct SiegelInput {
  std::vector<std::vector<Rational>> forms_matrix;  // columns of l^(n)
  double Q = 0.0;
  double form_abs = 0.0;
};

inline double siegel_lower_bound(const std::vector<SiegelInput>& data) {
  if (data.size() < 2)
    throw std::invalid_argument("siegel_lower_bound: need at least two n");
  auto basis0 = column_space_basis(data.front().forms_matrix);
  for (const auto& d : data)
    if (column_space_basis(d.forms_matrix) != basis0)
      throw std::invalid_argument("criterion hypotheses fail");
  double sxy = 0.0, sxx = 0.0;
  for (const auto& d : data) {
    double x = std::log(d.Q);
    double y = std::log(std::max(d.form_abs, 1e-300));
    sxy += x * y;
    sxx += x * x;
  }
  double tau = -sxy / sxx;
  return tau + 1.0;
}

struct EliminationPlan {
  Rational epsilon;
  long a = 0;
  Integer D;
  std::vector<Integer> divisors;
  long delta = 0;
  std::vector<long> exponents;
  std::vector<Integer> w;
  bool size_ok = false;        // D <= a^{1-2 eps}, exact big-integer check
  double log_delta = 0.0;
  double log_delta_target = 0.0;  // (1-4 eps) log 2 log a / log log a
};

inline EliminationPlan primorial_D(const Rational& eps, long a) {
  if (eps <= 0 || eps >= Rational(1, 4))
    throw std::invalid_argument("epsilon must lie in (0, 1/4)");
  EliminationPlan plan;
  plan.epsilon = eps;
  plan.a = a;
  double threshold = (1.0 - 3.0 * eps.get_d()) * std::log(double(a));
  std::vector<long> primes = primes_upto(long(std::floor(threshold)));
  plan.D = 1;
  for (long p : primes) plan.D *= p;
  // all divisors of a squarefree number: subsets of the prime set
  plan.divisors.push_back(Integer(1));
  for (long p : primes) {
    size_t sz = plan.divisors.size();
    for (size_t i = 0; i < sz; ++i)
      plan.divisors.push_back(plan.divisors[i] * p);
  }
  std::sort(plan.divisors.begin(), plan.divisors.end());
  plan.delta = long(plan.divisors.size());
  // D <= a^{1-2 eps}  <=>  D^q <= a^{q-2p} for eps = p/q
  Integer ep = eps.get_num(), eq = eps.get_den();
  Integer lhs = pow_int(plan.D, eq.get_ui());
  Integer exp_rhs = eq - 2 * ep;
  Integer rhs = pow_int(Integer(a), exp_rhs.get_ui());
  plan.size_ok = lhs <= rhs;
  plan.log_delta = double(primes.size()) * std::log(2.0);
  double la = std::log(double(a));
  plan.log_delta_target =
      (1.0 - 4.0 * eps.get_d()) * std::log(2.0) * la / std::log(la);
  return plan;
}

// Nonzero integer kernel vector of [d^{i_j}]_{j,d}: reduced echelon form,
// denominators cleared, content removed, first nonzero entry positive.
inline std::vector<Integer> solve_w(const std::vector<Integer>& divisors,
                                    const std::vector<long>& exponents) {
  const size_t cols = divisors.size();
  if (exponents.size() + 1 != cols)
    throw std::invalid_argument("solve_w: need exactly delta-1 exponents");
  if (cols == 1) return {Integer(1)};
  const size_t rows = exponents.size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols));
  for (size_t j = 0; j < rows; ++j)
    for (size_t d = 0; d < cols; ++d)
      A[j][d] = Rational(pow_int(divisors[d],
                                 static_cast<unsigned long>(exponents[j])));
  // reduced echelon form with pivot bookkeeping
  std::vector<long> pivot_col(rows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(A[rank], A[piv]);
    Rational inv = 1 / A[rank][c];
    for (size_t cc = 0; cc < cols; ++cc) A[rank][cc] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (size_t cc = 0; cc < cols; ++cc) A[r][cc] -= f * A[rank][cc];
    }
    pivot_col[rank] = long(c);
    ++rank;
  }
  if (rank == cols) throw std::logic_error("solve_w: kernel is trivial");
  // free variable: first non-pivot column
  std::vector<bool> is_pivot(cols, false);
  for (size_t r = 0; r < rank; ++r) is_pivot[size_t(pivot_col[r])] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (size_t r = 0; r < rank; ++r)
    x[size_t(pivot_col[r])] = -A[r][free_col];
  // clear denominators, divide by content, normalize sign
  Integer lcm(1);
  for (const auto& v : x)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> w;
  for (const auto& v : x) {
    Rational scaled = v * Rational(lcm);
    scaled.canonicalize();
    w.push_back(scaled.get_num());
  }
  Integer content(0);
  for (const auto& v : w) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : w) v /= content;
  for (const auto& v : w) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& u : w) u = -u;
    break;
  }
  return w;
}

// g = sum_{d|D} w_d g_{D/d} with g_d(m) = f(m/d) when d | m;
// the result has period N = D*T.
inline PeriodicFunction build_g(const PeriodicFunction& f, const Integer& D,
                                const std::vector<Integer>& divisors,
                                const std::vector<Integer>& w) {
  long Dl = long(D.get_si());
  long period = Dl * f.period();
  std::vector<PeriodicFunction::Value> vals;
  for (long m = 0; m < period; ++m) {
    CycloNumber acc(0);
    for (size_t idx = 0; idx < divisors.size(); ++idx) {
      long d = long(divisors[idx].get_si());
      long dd = Dl / d;  // g_{D/d} contributes when (D/d) | m
      if (m % dd != 0) continue;
      acc = acc + CycloNumber(Rational(w[idx])) * f.at_cyclo(m / dd);
    }
    if (acc.is_rational())
      vals.push_back(PeriodicFunction::Value(acc.rational_value()));
    else
      vals.push_back(PeriodicFunction::Value(acc));
  }
  return PeriodicFunction(period, std::move(vals));
}

// Numeric check of L(g,i) = D^{-i} (sum_d w_d d^i) L(f,i).
inline bool check_g_L_identity(const PeriodicFunction& f,
                               const PeriodicFunction& g, const Integer& D,
                               const std::vector<Integer>& divisors,
                               const std::vector<Integer>& w, long i,
                               const Ctx& ctx) {
  CBall lg = L_value(g, i, ctx);
  Rational factor(0);
  for (size_t idx = 0; idx < divisors.size(); ++idx)
    factor += Rational(w[idx]) * Rational(pow_int(divisors[idx],
                                                  static_cast<unsigned long>(i)));
  factor /= Rational(pow_int(D, static_cast<unsigned long>(i)));
  CBall rhs = L_value(f, i, ctx).scaled(factor);
  CBall diff = lg - rhs;
  return std::hypot(diff.re.to_double(), diff.im.to_double()) <=
         diff.rad * (1 + 1e-9) + 1e-300;
}

struct FszResult {
  CBall lhs;
  CBall rhs;
  double gap = 0.0;
  double bound = 0.0;
  bool verdict = false;

  FszResult() : lhs(64), rhs(64) {}
};

// (-1)^p / (2 delta_n) Lambda_n = sum_{d|D} w_d sum_{j=1}^d sum_{m>=1} R(m + j/d)
// with R(t) = F(Dt), for N = D, f built from the constant function.
inline FszResult fsz_equivalence(const Params& par, const Integer& D,
                                 const std::vector<Integer>& divisors,
                                 const std::vector<Integer>& w, const Ctx& ctx,
                                 long budget = (1L << 17)) {
  if (Integer(par.N) != D)
    throw std::invalid_argument("fsz_equivalence requires N = D");
  if (par.n % (2 * par.N) != 0)
    throw std::invalid_argument("fsz_equivalence requires 2N | n");
  if ((par.p - par.a) % 2 != 0)
    throw std::invalid_argument("fsz_equivalence requires p == a (mod 2)");

  PeriodicFunction f = PeriodicFunction::constant_one();
  PeriodicFunction g = build_g(f, D, divisors, w);
  FormFamily fam = build_family(par);
  LinearFormValue lam = lambda_check(fam, g, 1, ctx);

  FszResult out;
  Rational norm = Rational(par.p % 2 == 0 ? 1 : -1, 2) / Rational(fam.delta);
  out.lhs = lam.lhs.scaled(norm);

  // right side: triple sum over divisors, offsets, and m; terms decay like
  // (Dm)^{-d_0}, tail bounded by a sampled constant with margin 2
  FactoredF F(par);
  long Dl = long(D.get_si());
  long d0 = par.d0();
  auto tail_at = [&](long M) {
    Rational fm = F.eval(Rational(Dl * M));
    double C = 2.0 * std::abs(fm.get_d()) *
               std::pow(double(Dl) * double(M), double(d0));
    double per_series =
        C * std::pow(double(Dl), -double(d0)) *
        std::pow(double(M), 1.0 - double(d0)) / (double(d0) - 1.0);
    double weight = 0.0;
    for (size_t i = 0; i < w.size(); ++i)
      weight += std::abs(w[i].get_d()) * divisors[i].get_d();
    return per_series * weight;
  };
  long M = 256;
  while (tail_at(M) > ctx.target && M < budget) M *= 2;

  CBall rhs = CBall::zero(ctx);
  Real acc(ctx.bits);
  for (size_t idx = 0; idx < divisors.size(); ++idx) {
    long d = long(divisors[idx].get_si());
    Real sub(ctx.bits);
    for (long j = 1; j <= d; ++j) {
      for (long m = 1; m <= M; ++m) {
        // R(m + j/d) = F(D m + j D/d)
        Rational t = Rational(Dl) * (Rational(m) + Rational(j, d));
        t.canonicalize();
        if (F.is_pole(t) || F.numerator_vanishes_at(t)) {
          if (F.numerator_vanishes_at(t)) continue;
          throw std::logic_error("fsz_equivalence: hit a pole");
        }
        sub = sub + Real::of(F.eval(t), ctx.bits);
      }
    }
    acc = acc + Real::of(Rational(w[idx]), ctx.bits) * sub;
  }
  double slack =
      double(M) * double(Dl + 1) * ctx.eps() * (1.0 + std::abs(acc.to_double()));
  out.rhs = CBall::real_ball(acc, tail_at(M) + slack);

  CBall diff = out.lhs - out.rhs;
  out.gap = std::hypot(diff.re.to_double(), diff.im.to_double());
  out.bound = diff.rad;
  out.verdict = out.gap <= out.bound * (1 + 1e-9) + 1e-300;
  return out;
}

}  // namespace zetaforms
