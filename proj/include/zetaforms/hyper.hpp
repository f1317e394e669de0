#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zetaforms/cyclo.hpp"
#include "zetaforms/numtheory.hpp"
#include "zetaforms/poly.hpp"

namespace zetaforms {

// One construction instance (a, r, N, n, p, T).
struct Params {
  long a = 0;
  long r = 0;
  long N = 0;
  long n = 0;
  long p = 0;
  long T = 0;

  long d0() const { return (a + 1) * (n / N + 1) - (2 * r + 1) * n - 1; }

  // Structural requirements without which the construction is undefined.
  std::vector<std::string> violations() const {
    std::vector<std::string> v;
    if (a < 2) v.push_back("a >= 2 violated");
    if (r < 1) v.push_back("r >= 1 violated");
    if (N < 1) v.push_back("N >= 1 violated");
    if (n < 1) v.push_back("n >= 1 violated");
    if (p != 0 && p != 1) v.push_back("p in {0,1} violated");
    if (T < 1) v.push_back("T >= 1 violated");
    if (N >= 1 && n >= 1 && n % N != 0) v.push_back("N divides n violated");
    if (T >= 1 && N >= 1 && N % T != 0) v.push_back("T divides N violated");
    if (v.empty() && d0() < 2) v.push_back("d0 >= 2 violated");
    return v;
  }

  // The asymptotic-regime inequality on top of the structural ones.
  std::vector<std::string> violations_strict() const {
    std::vector<std::string> v = violations();
    if (3 * r * N >= a) v.push_back("r < a/(3N) violated");
    return v;
  }

  void require_valid() const {
    auto v = violations();
    if (!v.empty()) throw std::invalid_argument(v.front());
  }
};

inline Integer delta_n(const Params& par) {
  Integer base = Integer(par.N) * lcm_upto(par.n / par.N);
  return pow_int(base, static_cast<unsigned long>(par.a + 1)) *
         pow_int(Integer(par.N),
                 static_cast<unsigned long>((par.a + 1) * (par.n / par.N)));
}

// F(t) = (n/N)!^{(a+1)-(2r+1)N} (t-rn)_{(2r+1)n+1} / prod_{h=0}^{n/N} (t+Nh)^{a+1}
// kept in factored form.
class FactoredF {
 public:
  explicit FactoredF(const Params& par) : par_(par) {
    par.require_valid();
    long e = (par.a + 1) - (2 * par.r + 1) * par.N;
    scalar_ = pow_rat(Rational(factorial(
                          static_cast<unsigned long>(par.n / par.N))),
                      e);
    num_len_ = (2 * par.r + 1) * par.n + 1;
  }

  const Params& params() const { return par_; }
  const Rational& scalar() const { return scalar_; }
  long d0() const { return par_.d0(); }

  // numerator roots are t = rn - i, i = 0..num_len-1, i.e. -(r+1)n <= t <= rn
  bool numerator_vanishes_at(const Rational& t) const {
    if (!is_integer(t)) return false;
    Integer v = t.get_num();
    return v >= -(par_.r + 1) * par_.n && v <= par_.r * par_.n;
  }

  bool is_pole(const Rational& t) const {
    if (!is_integer(t)) return false;
    Integer v = t.get_num();
    if (v > 0 || v < -par_.n) return false;
    return mpz_divisible_ui_p(v.get_mpz_t(),
                              static_cast<unsigned long>(par_.N)) != 0;
  }

  Rational eval(const Rational& t) const {
    if (is_pole(t)) throw std::domain_error("F evaluated at a pole");
    if (numerator_vanishes_at(t)) return Rational(0);
    Rational num = scalar_;
    Rational base = t - Rational(par_.r * par_.n);
    for (long i = 0; i < num_len_; ++i) num *= base + i;
    Rational den(1);
    for (long h = 0; h <= par_.n / par_.N; ++h)
      den *= pow_rat(t + par_.N * h, par_.a + 1);
    Rational v = num / den;
    v.canonicalize();
    return v;
  }

 private:
  Params par_;
  Rational scalar_;
  long num_len_ = 0;
};

// F(-n-t) = (-1)^p F(t); requires 2N | n and p == a (mod 2).
inline bool check_well_poised_symmetry(const FactoredF& F, const Params& par) {
  if (par.n % (2 * par.N) != 0)
    throw std::invalid_argument("well-poised check requires 2N | n");
  if ((par.p - par.a) % 2 != 0)
    throw std::invalid_argument("well-poised check requires p == a (mod 2)");
  long points = par.d0() + (2 * par.r + 1) * par.n + 2;
  Rational sign(par.p % 2 == 0 ? 1 : -1);
  for (long m = 0; m < points; ++m) {
    Rational t = Rational(1, 3) + m;
    if (F.eval(-Rational(par.n) - t) != sign * F.eval(t)) return false;
  }
  return true;
}

// Coefficients p_{j,h}: entry(j, h) for 1 <= j <= a, 0 <= h <= n/N.
struct PartialFractionTable {
  long a = 0;
  long H = 0;  // n/N
  long N = 1;
  std::vector<std::vector<Rational>> p;  // p[j-1][h]

  PartialFractionTable() = default;
  PartialFractionTable(long a_, long H_, long N_)
      : a(a_), H(H_), N(N_),
        p(size_t(a_), std::vector<Rational>(size_t(H_) + 1, Rational(0))) {}

  const Rational& entry(long j, long h) const { return p[size_t(j - 1)][size_t(h)]; }
  Rational& entry(long j, long h) { return p[size_t(j - 1)][size_t(h)]; }

  Rational eval(const Rational& t) const {
    Rational s(0);
    for (long j = 1; j <= a; ++j)
      for (long h = 0; h <= H; ++h)
        if (entry(j, h) != 0) s += entry(j, h) / pow_rat(t + N * h, j);
    s.canonicalize();
    return s;
  }

  friend bool operator==(const PartialFractionTable& x,
                         const PartialFractionTable& y) {
    return x.a == y.a && x.H == y.H && x.N == y.N && x.p == y.p;
  }
};

namespace detail {

// Working form: polynomial part + sum_{h,j} coef/(t+Nh)^j.
struct PfAccum {
  long N = 1;
  DensePoly poly;
  std::map<long, std::vector<Rational>> poles;  // h -> coeffs (index j-1)

  void add_pole(long h, long j, const Rational& c) {
    if (c == 0) return;
    auto& v = poles[h];
    if (long(v.size()) < j) v.resize(size_t(j), Rational(0));
    v[size_t(j - 1)] += c;
  }
};

// Multiply by 1/prod_{h=0}^{H}(t+Nh), distributed as simple poles.
// Pole products use 1/((t+Nh)(t+Nh')^l) =
//   1/((N(h'-h))^l (t+Nh)) - sum_{i=1}^l 1/((N(h'-h))^{l+1-i} (t+Nh')^i).
inline PfAccum mul_by_inverse_product(const PfAccum& acc, long H) {
  const long N = acc.N;
  // residues of 1/prod at t = -Nh
  std::vector<Rational> res(size_t(H) + 1);
  for (long h = 0; h <= H; ++h) {
    Rational d(1);
    for (long h2 = 0; h2 <= H; ++h2)
      if (h2 != h) d *= Rational(N * (h2 - h));
    res[size_t(h)] = 1 / d;
  }
  PfAccum out;
  out.N = N;
  // polynomial part times simple poles: poly/(t+Nh) = Q + poly(-Nh)/(t+Nh)
  if (!acc.poly.is_zero()) {
    for (long h = 0; h <= H; ++h) {
      DensePoly rem = acc.poly;
      // synthetic division by (t + Nh)
      std::vector<Rational> q(size_t(std::max(rem.degree(), 0)), Rational(0));
      Rational carry(0);
      for (int i = rem.degree(); i >= 1; --i) {
        carry = rem.coeff(i) + carry;
        q[size_t(i - 1)] = carry;
        carry *= Rational(-N * h);
      }
      Rational value = acc.poly.eval(Rational(-N * h));
      out.poly = out.poly + DensePoly(std::move(q)) * res[size_t(h)];
      out.add_pole(h, 1, value * res[size_t(h)]);
    }
  }
  for (const auto& [hp, coeffs] : acc.poles) {
    for (long l = 1; l <= long(coeffs.size()); ++l) {
      const Rational& c = coeffs[size_t(l - 1)];
      if (c == 0) continue;
      for (long h = 0; h <= H; ++h) {
        Rational cr = c * res[size_t(h)];
        if (h == hp) {
          out.add_pole(h, l + 1, cr);
        } else {
          Rational gap(N * (hp - h));
          out.add_pole(h, 1, cr / pow_rat(gap, l));
          for (long i = 1; i <= l; ++i)
            out.add_pole(hp, i, -cr / pow_rat(gap, l + 1 - i));
        }
      }
    }
  }
  return out;
}

// Multiply by the linear numerator factor (t - root):
// (t-c)/(t+Nh)^l = 1/(t+Nh)^{l-1} - (Nh+c)/(t+Nh)^l.
inline PfAccum mul_by_linear(const PfAccum& acc, const Rational& root) {
  PfAccum out;
  out.N = acc.N;
  if (!acc.poly.is_zero())
    out.poly = acc.poly * DensePoly({-root, Rational(1)});
  for (const auto& [h, coeffs] : acc.poles) {
    Rational shift = Rational(acc.N * h) + root;
    for (long l = 1; l <= long(coeffs.size()); ++l) {
      const Rational& c = coeffs[size_t(l - 1)];
      if (c == 0) continue;
      if (l == 1)
        out.poly = out.poly + DensePoly(c);
      else
        out.add_pole(h, l - 1, c);
      out.add_pole(h, l, -c * shift);
    }
  }
  return out;
}

}  // namespace detail

// Product method: repeated multiplication of partial fraction expansions.
inline PartialFractionTable partial_fractions_product(const FactoredF& F) {
  const Params& par = F.params();
  const long H = par.n / par.N;
  detail::PfAccum acc;
  acc.N = par.N;
  acc.poly = DensePoly(Rational(1));
  for (long rep = 0; rep < par.a + 1; ++rep)
    acc = detail::mul_by_inverse_product(acc, H);
  for (long i = 0; i < (2 * par.r + 1) * par.n + 1; ++i)
    acc = detail::mul_by_linear(acc, Rational(par.r * par.n - i));
  if (!acc.poly.is_zero())
    throw std::logic_error("partial fractions: nonzero polynomial part");
  PartialFractionTable table(par.a, H, par.N);
  for (const auto& [h, coeffs] : acc.poles) {
    for (long j = 1; j <= long(coeffs.size()); ++j) {
      Rational v = coeffs[size_t(j - 1)] * F.scalar();
      v.canonicalize();
      if (j > par.a) {
        if (v != 0)
          throw std::logic_error("partial fractions: pole order exceeds a");
        continue;
      }
      table.entry(j, h) = v;
    }
  }
  return table;
}

// Independent oracle: solve the linear system given by evaluations of F at
// distinct non-pole points (deterministic offset sequence on singularity).
inline PartialFractionTable partial_fractions_solve(const FactoredF& F) {
  const Params& par = F.params();
  const long H = par.n / par.N;
  const long U = par.a * (H + 1);
  const std::vector<Rational> offsets = {Rational(1, 2), Rational(1, 3),
                                         Rational(2, 5), Rational(3, 7)};
  for (const auto& off : offsets) {
    // rows: evaluation points; cols: unknowns (j,h) in order
    std::vector<std::vector<Rational>> Ab(
        size_t(U), std::vector<Rational>(size_t(U) + 1, Rational(0)));
    for (long m = 0; m < U; ++m) {
      Rational t = off + m;
      long col = 0;
      for (long j = 1; j <= par.a; ++j)
        for (long h = 0; h <= H; ++h)
          Ab[size_t(m)][size_t(col++)] = 1 / pow_rat(t + par.N * h, j);
      Ab[size_t(m)][size_t(U)] = F.eval(t);
    }
    // exact Gaussian elimination
    bool singular = false;
    for (long c = 0; c < U && !singular; ++c) {
      long piv = -1;
      for (long rr = c; rr < U; ++rr)
        if (Ab[size_t(rr)][size_t(c)] != 0) {
          piv = rr;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(Ab[size_t(c)], Ab[size_t(piv)]);
      Rational inv = 1 / Ab[size_t(c)][size_t(c)];
      for (long cc = c; cc <= U; ++cc) Ab[size_t(c)][size_t(cc)] *= inv;
      for (long rr = 0; rr < U; ++rr) {
        if (rr == c || Ab[size_t(rr)][size_t(c)] == 0) continue;
        Rational f = Ab[size_t(rr)][size_t(c)];
        for (long cc = c; cc <= U; ++cc)
          Ab[size_t(rr)][size_t(cc)] -= f * Ab[size_t(c)][size_t(cc)];
      }
    }
    if (singular) continue;
    PartialFractionTable table(par.a, H, par.N);
    long col = 0;
    for (long j = 1; j <= par.a; ++j)
      for (long h = 0; h <= H; ++h) {
        Rational v = Ab[size_t(col)][size_t(U)];
        v.canonicalize();
        table.entry(j, h) = v;
        ++col;
      }
    return table;
  }
  throw std::runtime_error("partial_fractions_solve: all point sets singular");
}

// (N d_{n/N})^{a+1-j} N^{(a+1)n/N} p_{j,h} must be an integer.
inline bool check_denominators(const PartialFractionTable& table,
                               const Params& par) {
  Integer base = Integer(par.N) * lcm_upto(par.n / par.N);
  Integer npow = pow_int(Integer(par.N),
                         static_cast<unsigned long>((par.a + 1) * (par.n / par.N)));
  for (long j = 1; j <= table.a; ++j) {
    Integer mult =
        pow_int(base, static_cast<unsigned long>(par.a + 1 - j)) * npow;
    for (long h = 0; h <= table.H; ++h) {
      Rational v = table.entry(j, h) * Rational(mult);
      v.canonicalize();
      if (!is_integer(v)) return false;
    }
  }
  return true;
}

// Base polynomials P_j(z) = sum_h p_{j,h} z^{Nh}.
inline std::vector<DensePoly> build_Pj(const PartialFractionTable& table) {
  std::vector<DensePoly> P;
  for (long j = 1; j <= table.a; ++j) {
    DensePoly q;
    for (long h = 0; h <= table.H; ++h)
      if (table.entry(j, h) != 0)
        q = q + DensePoly::monomial(table.entry(j, h), int(table.N * h));
    P.push_back(q);
  }
  return P;
}

// U_1, V_1 from the defining double sums.
inline std::pair<DensePoly, DensePoly> build_U1_V1(
    const PartialFractionTable& table, const Params& par) {
  DensePoly U, V;
  for (long t = 1; t <= par.n; ++t) {
    Rational c(0);
    for (long j = 1; j <= par.a; ++j)
      for (long h = 0; h <= (t - 1) / par.N; ++h)
        if (table.entry(j, h) != 0)
          c += table.entry(j, h) / pow_rat(Rational(par.N * h - t), j);
    if (c != 0) U = U + DensePoly::monomial(-c, int(t));
  }
  for (long t = 0; t <= par.n - 1; ++t) {
    Rational c(0);
    long h_lo = (t + par.N) / par.N;  // ceil((t+1)/N) for integer t >= 0
    for (long j = 1; j <= par.a; ++j)
      for (long h = h_lo; h <= table.H; ++h)
        if (table.entry(j, h) != 0)
          c += table.entry(j, h) / pow_rat(Rational(par.N * h - t), j);
    if (c != 0) V = V + DensePoly::monomial(-c, int(t));
  }
  return {U, V};
}

// Everything derived from one instance, level by level in k.
struct FormFamily {
  Params par;
  long K = 0;  // number of levels built
  Integer delta;
  PartialFractionTable table;
  std::vector<DensePoly> Pj;  // base P_j, j = 1..a

  struct Level {
    std::vector<LaurentPoly> P;       // P_{k,j}, j = 1..a
    LaurentPoly U, V;                 // U_k, V_k
    std::vector<LaurentPoly> Usplit;  // U_{k,lambda}, lambda = 0..N-1
    std::vector<LaurentPoly> Vsplit;
  };
  std::vector<Level> levels;                // index k-1
  std::vector<std::vector<Integer>> s;      // s[k-1][i-2], i = 2..a+N

  const Level& level(long k) const { return levels.at(size_t(k - 1)); }
  const Integer& ski(long k, long i) const {
    return s.at(size_t(k - 1)).at(size_t(i - 2));
  }
  long k_max() const { return K; }
};

// z^{k-1} W(z) = sum_lambda z^lambda W_{k,lambda}(z), pieces in Q[z^N, z^-N].
inline std::vector<LaurentPoly> split_by_residue(const LaurentPoly& W, long k,
                                                 long N) {
  std::vector<LaurentPoly> out{size_t(N)};
  LaurentPoly shifted = W.mul_z_power(int(k - 1));
  if (shifted.is_zero()) return out;
  for (long lam = 0; lam < N; ++lam) {
    DensePoly bucket;
    int base_min = 0;
    std::vector<std::pair<int, Rational>> terms;
    for (int e = shifted.min_degree(); e <= shifted.max_degree(); ++e) {
      if (((e % N) + N) % N != lam) continue;
      Rational c = shifted.coeff(e);
      if (c != 0) terms.push_back({e - int(lam), c});
    }
    if (terms.empty()) continue;
    base_min = terms.front().first;
    std::vector<Rational> coeffs(size_t(terms.back().first - base_min) + 1,
                                 Rational(0));
    for (auto& [e, c] : terms) coeffs[size_t(e - base_min)] = c;
    out[size_t(lam)] = LaurentPoly(base_min, DensePoly(std::move(coeffs)));
  }
  return out;
}

// Extends the family from level k-1 to level k (k >= 2).
inline FormFamily::Level recurrence_step(const FormFamily& fam, long k) {
  const auto& prev = fam.level(k - 1);
  FormFamily::Level next;
  for (long j = 1; j <= fam.par.a; ++j) {
    LaurentPoly t = prev.P[size_t(j - 1)].derivative();
    if (j < fam.par.a)
      t = t - prev.P[size_t(j)].mul_z_power(-1);  // P_{k-1,a+1} = 0
    next.P.push_back(t);
  }
  LaurentPoly ratio;  // P_{k-1,1} / (1-z)
  try {
    ratio = prev.P[0].div_one_minus_z();
  } catch (const std::domain_error&) {
    throw std::domain_error("P_{k-1,1}(1) != 0 at k = " + std::to_string(k));
  }
  next.U = prev.U.derivative() - ratio;
  next.V = prev.V.derivative() + ratio.mul_z_power(-1);
  next.Usplit = split_by_residue(next.U, k, fam.par.N);
  next.Vsplit = split_by_residue(next.V, k, fam.par.N);
  return next;
}

// s_{k,i} for one level; throws when an entry fails to be an integer.
inline std::vector<Integer> compute_ski_level(const FormFamily& fam, long k) {
  const auto& lvl = fam.level(k);
  const Params& par = fam.par;
  Rational d(fam.delta);
  std::vector<Integer> row;
  auto certify = [&](Rational v, long i) {
    v.canonicalize();
    if (!is_integer(v))
      throw std::logic_error("s[" + std::to_string(k) + "][" +
                             std::to_string(i) + "] = " + to_string(v) +
                             " is not an integer");
    return v.get_num();
  };
  for (long i = 2; i <= par.a; ++i)
    row.push_back(certify(d * lvl.P[size_t(i - 1)].eval_at_one(), i));
  Rational sign(par.p % 2 == 0 ? 1 : -1);
  for (long lam = 0; lam < par.N; ++lam) {
    long vlam = (par.N - lam) % par.N;  // V_{k,N} = V_{k,0}
    Rational u = lvl.Usplit[size_t(lam)].eval_at_one();
    Rational v = lvl.Vsplit[size_t(vlam)].eval_at_one();
    row.push_back(certify(d * (u + sign * v), par.a + 1 + lam));
  }
  return row;
}

inline long default_k_cap(const Params& par) { return 3 * (par.a + par.N); }

inline FormFamily build_family(const Params& par, long k_cap = 0) {
  par.require_valid();
  FormFamily fam;
  fam.par = par;
  fam.delta = delta_n(par);
  FactoredF F(par);
  fam.table = partial_fractions_product(F);
  PartialFractionTable check = partial_fractions_solve(F);
  if (!(fam.table == check))
    throw std::logic_error("partial fraction methods disagree");
  fam.Pj = build_Pj(fam.table);
  auto [U1, V1] = build_U1_V1(fam.table, par);
  FormFamily::Level base;
  for (const auto& p : fam.Pj) base.P.push_back(LaurentPoly(p));
  base.U = LaurentPoly(U1);
  base.V = LaurentPoly(V1);
  base.Usplit = split_by_residue(base.U, 1, par.N);
  base.Vsplit = split_by_residue(base.V, 1, par.N);
  fam.levels.push_back(std::move(base));
  fam.K = 1;
  long cap = k_cap > 0 ? k_cap : default_k_cap(par);
  long kmax = std::min(par.d0() - 1, cap);
  for (long k = 2; k <= kmax; ++k) {
    fam.levels.push_back(recurrence_step(fam, k));
    fam.K = k;
  }
  for (long k = 1; k <= fam.K; ++k) fam.s.push_back(compute_ski_level(fam, k));
  return fam;
}

// W(omega^l z) for a Laurent polynomial W with rational coefficients.
inline Laurent<CycloNumber> laurent_at_scaled_arg(const LaurentPoly& W, long N,
                                                  long l) {
  std::vector<CycloNumber> powers;
  for (long m = 0; m < N; ++m)
    powers.push_back(CycloNumber::root_of_unity(N, l * m));
  return W.compose_scale(powers, int(N));
}

// W(omega^l) as a cyclotomic number.
inline CycloNumber laurent_value_at_root(const LaurentPoly& W, long N, long l) {
  CycloNumber s(0);
  if (W.is_zero()) return s;
  for (int e = W.min_degree(); e <= W.max_degree(); ++e) {
    Rational c = W.coeff(e);
    if (c != 0)
      s = s + CycloNumber(c) * CycloNumber::root_of_unity(N, l * e);
  }
  return s;
}

// T-periodic coefficient function with rational or cyclotomic values.
class PeriodicFunction {
 public:
  using Value = std::variant<Rational, CycloNumber>;

  PeriodicFunction(long period, std::vector<Value> values)
      : T_(period), values_(std::move(values)) {
    if (T_ < 1 || long(values_.size()) != T_)
      throw std::invalid_argument("PeriodicFunction: need exactly T values");
    bool all_zero = true;
    for (const auto& v : values_)
      if (!value_is_zero(v)) all_zero = false;
    if (all_zero)
      throw std::invalid_argument("PeriodicFunction: all values zero");
  }

  static PeriodicFunction constant_one() {
    return PeriodicFunction(1, {Value(Rational(1))});
  }

  long period() const { return T_; }

  const Value& at(long m) const {
    long i = ((m % T_) + T_) % T_;
    return values_[size_t(i)];
  }

  CycloNumber at_cyclo(long m) const {
    const Value& v = at(m);
    if (std::holds_alternative<Rational>(v))
      return CycloNumber(std::get<Rational>(v));
    return std::get<CycloNumber>(v);
  }

  bool is_rational_valued() const {
    for (const auto& v : values_)
      if (!std::holds_alternative<Rational>(v)) return false;
    return true;
  }

 private:
  static bool value_is_zero(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v) == 0;
    return std::get<CycloNumber>(v).is_zero();
  }

  long T_;
  std::vector<Value> values_;
};

// hat f(l) = (1/N) sum_{lambda=1}^{N} f(lambda) omega^{-l lambda};
// returned vector is indexed l-1 for l = 1..N.
inline std::vector<CycloNumber> fourier_hat(const PeriodicFunction& f, long N) {
  if (N % f.period() != 0)
    throw std::invalid_argument("fourier_hat: T must divide N");
  std::vector<CycloNumber> hat;
  Rational invN(1, N);
  for (long l = 1; l <= N; ++l) {
    CycloNumber s(0);
    for (long lam = 1; lam <= N; ++lam)
      s = s + f.at_cyclo(lam) * CycloNumber::root_of_unity(N, -l * lam);
    hat.push_back(s * CycloNumber(invN));
  }
  return hat;
}

}  // namespace zetaforms
