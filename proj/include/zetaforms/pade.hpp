#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "zetaforms/hyper.hpp"
#include "zetaforms/ratfun.hpp"

namespace zetaforms {

// S_0 order: R_{0,l} = O(z^{(r+1)n+1}) <=> F(-t) = 0 for n+1 <= t <= (r+1)n.
inline bool check_order_at_zero(const FormFamily& fam) {
  FactoredF F(fam.par);
  for (long t = fam.par.n + 1; t <= (fam.par.r + 1) * fam.par.n; ++t)
    if (F.eval(Rational(-t)) != 0) return false;
  return true;
}

// S_infty order: R_{infty,l} = O(z^{-rn-1}) <=> F(t) = 0 for 1 <= t <= rn.
inline bool check_order_at_infinity(const FormFamily& fam) {
  FactoredF F(fam.par);
  for (long t = 1; t <= fam.par.r * fam.par.n; ++t)
    if (F.eval(Rational(t)) != 0) return false;
  return true;
}

// Order d_0 - 1 at roots of unity: substitute z = 1+w and verify that
// sum_j P_j(1+w) (-1)^{j-1} (log(1+w))^{j-1} / (j-1)! vanishes through
// w^{d_0-2}.  Since P_j lies in Q[z^N], one point certifies all N roots.
inline bool check_order_at_unity(const FormFamily& fam) {
  const int order = int(fam.par.d0());
  TruncatedSeries logw = series_log_at_one(order);
  TruncatedSeries acc(order);
  TruncatedSeries logpow(order, {Rational(1)});  // (log(1+w))^{j-1}
  Integer fact(1);
  for (long j = 1; j <= fam.par.a; ++j) {
    if (j > 1) {
      logpow = logpow * logw;
      fact *= j - 1;
    }
    Rational c(((j - 1) % 2 == 0) ? 1 : -1);
    c /= Rational(fact);
    acc = acc + poly_at_one_plus(fam.Pj[size_t(j - 1)], order) * logpow * c;
  }
  for (int i = 0; i <= order - 2; ++i)
    if (acc.coeff(i) != 0) return false;
  return true;
}

using CycloRatFun = RatFun<CycloNumber>;
using CycloPoly = Poly<CycloNumber>;

// The sparse matrix A of the differential system Y' = AY:
// A_{i,i-1} = -1/z (2 <= i <= a), A_{1,a+1} = 1/z,
// A_{1,a+1+l} = 1/(z(1 - omega^l z)); all other entries zero.
struct SystemMatrix {
  long a = 0;
  long N = 0;
  long q() const { return a + N + 1; }

  // One application of (d/dz + A^T) to a length-q vector.
  std::vector<CycloRatFun> step(const std::vector<CycloRatFun>& P) const {
    CycloPoly z = CycloPoly::monomial(CycloNumber(1), 1);
    CycloRatFun inv_z(CycloPoly(CycloNumber(1)), z);
    std::vector<CycloRatFun> out;
    for (long i = 1; i <= q(); ++i) {
      CycloRatFun v = P[size_t(i - 1)].derivative();
      if (i <= a - 1) v = v - P[size_t(i)] * inv_z;  // from A_{i+1,i} = -1/z
      if (i == a + 1) v = v + P[0] * inv_z;
      if (i > a + 1) {
        long l = i - a - 1;
        CycloPoly den =
            z - CycloPoly::monomial(CycloNumber::root_of_unity(N, l), 2);
        v = v + CycloRatFun(CycloPoly(CycloNumber(1)), den) * P[0];
      }
      out.push_back(v);
    }
    return out;
  }
};

inline CycloRatFun laurent_to_ratfun(const Laurent<CycloNumber>& W) {
  CycloPoly body = W.body();
  int m = W.min_degree();
  if (m >= 0) return CycloRatFun(body * CycloPoly::monomial(CycloNumber(1), m));
  return CycloRatFun(body, CycloPoly::monomial(CycloNumber(1), -m));
}

inline Laurent<CycloNumber> lift_laurent(const LaurentPoly& W) {
  return W.map([](const Rational& c) { return CycloNumber(c); });
}

// Initial vector (P_1, ..., P_q):
// P_{a+1}(z) = (U_1+V_1)(z), P_{a+1+l}(z) = V_1(omega^l z).
inline std::vector<CycloRatFun> transfer_initial_vector(const FormFamily& fam) {
  std::vector<CycloRatFun> P;
  auto lift = [](const DensePoly& p) {
    return CycloRatFun(p.map([](const Rational& c) { return CycloNumber(c); }));
  };
  for (long j = 1; j <= fam.par.a; ++j) P.push_back(lift(fam.Pj[size_t(j - 1)]));
  const auto& base = fam.level(1);
  P.push_back(laurent_to_ratfun(lift_laurent(base.U + base.V)));
  for (long l = 1; l <= fam.par.N; ++l)
    P.push_back(
        laurent_to_ratfun(laurent_at_scaled_arg(base.V, fam.par.N, l)));
  return P;
}

// (d/dz + A^T)^{k-1} applied to the initial vector.
inline std::vector<CycloRatFun> transfer_operator_apply(
    const SystemMatrix& sys, std::vector<CycloRatFun> P, long k) {
  for (long step = 1; step < k; ++step) P = sys.step(P);
  return P;
}

// Checks that the transfer operator reproduces the recurrence-built levels:
// components 1..a directly, components a+1 and a+1+l through
// P_{k,a+1}(z) = omega^{l(k-1)} (U_k + V_k)(omega^l z) and
// P_{k,a+1+l}(z) = omega^{l(k-1)} V_k(omega^l z).
inline bool transfer_agrees(const FormFamily& fam, long k_limit = 3) {
  SystemMatrix sys{fam.par.a, fam.par.N};
  std::vector<CycloRatFun> P = transfer_initial_vector(fam);
  long kmax = std::min(k_limit, fam.K);
  auto as_ratfun = [](const LaurentPoly& W) {
    return laurent_to_ratfun(lift_laurent(W));
  };
  for (long k = 1; k <= kmax; ++k) {
    if (k > 1) P = sys.step(P);
    const auto& lvl = fam.level(k);
    for (long j = 1; j <= fam.par.a; ++j)
      if (!(P[size_t(j - 1)] == as_ratfun(lvl.P[size_t(j - 1)])))
        return false;
    // l = N gives omega^{l(k-1)} = 1 and the argument unchanged
    if (!(P[size_t(fam.par.a)] == as_ratfun(lvl.U + lvl.V))) return false;
    for (long l = 1; l <= fam.par.N; ++l) {
      Laurent<CycloNumber> Vl = laurent_at_scaled_arg(lvl.V, fam.par.N, l);
      CycloNumber scale = CycloNumber::root_of_unity(fam.par.N, l * (k - 1));
      if (!(P[size_t(fam.par.a + l)] == laurent_to_ratfun(Vl) * CycloRatFun(CycloPoly(scale))))
        return false;
    }
  }
  return true;
}

// M: rows i = 2..a+N, columns j = 2..q.
struct MMatrix {
  long a = 0;
  long N = 0;
  std::vector<std::vector<CycloNumber>> m;  // m[i-2][j-2]

  const CycloNumber& at(long i, long j) const {
    return m[size_t(i - 2)][size_t(j - 2)];
  }
};

inline MMatrix build_M(const Params& par, const Integer& delta) {
  const long a = par.a, N = par.N;
  MMatrix M{a, N,
            std::vector<std::vector<CycloNumber>>(
                size_t(a + N - 1),
                std::vector<CycloNumber>(size_t(a + N), CycloNumber(0)))};
  Rational d(delta);
  Rational dN = d / N;
  Rational sign(par.p % 2 == 0 ? 1 : -1);
  auto entry = [&](long i, long j) -> CycloNumber& {
    return M.m[size_t(i - 2)][size_t(j - 2)];
  };
  for (long i = 2; i <= a + 1; ++i) entry(i, i) = CycloNumber(d);
  for (long l = 1; l <= N; ++l)
    entry(a + 1, a + 1 + l) = CycloNumber(dN * (sign - 1));
  for (long lam = 1; lam <= N - 1; ++lam)
    for (long l = 1; l <= N; ++l)
      entry(a + 1 + lam, a + 1 + l) =
          CycloNumber(dN) * (CycloNumber(sign) *
                                 CycloNumber::root_of_unity(N, lam * l) -
                             CycloNumber::root_of_unity(N, -lam * l));
  return M;
}

// P: rows j = 2..q, columns k = 1..K.
struct PMatrix {
  long a = 0;
  long N = 0;
  long K = 0;
  std::vector<std::vector<CycloNumber>> p;  // p[j-2][k-1]

  const CycloNumber& at(long j, long k) const {
    return p[size_t(j - 2)][size_t(k - 1)];
  }
};

inline PMatrix build_P_matrix(const FormFamily& fam) {
  const long a = fam.par.a, N = fam.par.N, K = fam.K;
  PMatrix P{a, N, K,
            std::vector<std::vector<CycloNumber>>(
                size_t(a + N), std::vector<CycloNumber>(size_t(K)))};
  for (long k = 1; k <= K; ++k) {
    const auto& lvl = fam.level(k);
    for (long j = 2; j <= a; ++j)
      P.p[size_t(j - 2)][size_t(k - 1)] =
          CycloNumber(lvl.P[size_t(j - 1)].eval_at_one());
    LaurentPoly UV = lvl.U + lvl.V;
    P.p[size_t(a - 1)][size_t(k - 1)] = CycloNumber(UV.eval_at_one());
    for (long l = 1; l <= N; ++l)
      P.p[size_t(a - 1 + l)][size_t(k - 1)] =
          CycloNumber::root_of_unity(N, l * (k - 1)) *
          laurent_value_at_root(lvl.V, N, l);
  }
  return P;
}

// [s_{k,i}] = M P with every product entry reducing to a rational integer.
inline bool verify_product(const MMatrix& M, const PMatrix& P,
                           const FormFamily& fam) {
  const long a = M.a, N = M.N;
  for (long i = 2; i <= a + N; ++i) {
    for (long k = 1; k <= P.K; ++k) {
      CycloNumber acc(0);
      for (long j = 2; j <= a + N + 1; ++j) acc = acc + M.at(i, j) * P.at(j, k);
      if (!acc.is_rational())
        throw std::logic_error("M*P entry is not rational at (i=" +
                               std::to_string(i) + ", k=" + std::to_string(k) +
                               ")");
      if (acc.rational_value() != Rational(fam.ski(k, i))) return false;
    }
  }
  return true;
}

// Exact rank over Q(omega); first-nonzero pivot in column order.
inline long rank_over_cyclotomic(std::vector<std::vector<CycloNumber>> A) {
  if (A.empty()) return 0;
  const size_t rows = A.size(), cols = A[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (!A[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(A[rank], A[piv]);
    CycloNumber inv = A[rank][c].inverse();
    for (size_t cc = c; cc < cols; ++cc) A[rank][cc] = A[rank][cc] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c].is_zero()) continue;
      CycloNumber f = A[r][c];
      for (size_t cc = c; cc < cols; ++cc)
        A[r][cc] = A[r][cc] - f * A[rank][cc];
    }
    ++rank;
  }
  return long(rank);
}

inline long rank_of_P(const PMatrix& P) {
  return rank_over_cyclotomic(P.p);
}

// Canonical basis of the column span of an integer/rational matrix
// (reduced row echelon form of the transpose).
inline std::vector<std::vector<Rational>> column_space_basis(
    const std::vector<std::vector<Rational>>& mat) {
  if (mat.empty()) return {};
  const size_t rows = mat.size(), cols = mat[0].size();
  // transpose: each original column becomes a row vector in Q^rows
  std::vector<std::vector<Rational>> T(cols, std::vector<Rational>(rows));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) T[c][r] = mat[r][c];
  size_t rank = 0;
  for (size_t c = 0; c < rows && rank < T.size(); ++c) {
    size_t piv = T.size();
    for (size_t r = rank; r < T.size(); ++r)
      if (T[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == T.size()) continue;
    std::swap(T[rank], T[piv]);
    Rational inv = 1 / T[rank][c];
    for (size_t cc = 0; cc < rows; ++cc) T[rank][cc] *= inv;
    for (size_t r = 0; r < T.size(); ++r) {
      if (r == rank || T[r][c] == 0) continue;
      Rational f = T[r][c];
      for (size_t cc = 0; cc < rows; ++cc) T[r][cc] -= f * T[rank][cc];
    }
    ++rank;
  }
  T.resize(rank);
  for (auto& row : T)
    for (auto& v : row) v.canonicalize();
  return T;
}

inline std::vector<std::vector<Rational>> s_matrix_rows(const FormFamily& fam) {
  // rows i = 2..a+N, columns k = 1..K
  std::vector<std::vector<Rational>> rows;
  for (long i = 2; i <= fam.par.a + fam.par.N; ++i) {
    std::vector<Rational> row;
    for (long k = 1; k <= fam.K; ++k) row.push_back(Rational(fam.ski(k, i)));
    rows.push_back(row);
  }
  return rows;
}

// FNV-1a over the canonical serialization of a basis.
inline std::string basis_hash(const std::vector<std::vector<Rational>>& basis) {
  uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& row : basis) {
    for (const auto& v : row) {
      feed(to_string(v));
      feed(",");
    }
    feed(";");
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

struct PadeReport {
  bool order_zero = false;
  bool order_infinity = false;
  bool order_unity = false;
  bool transfer_ok = false;
  bool product_ok = false;
  long rank = 0;
  long rank_target = 0;
  std::string hash;
  bool zero_row = false;

  bool all_ok() const {
    return order_zero && order_infinity && order_unity && transfer_ok &&
           product_ok && rank == rank_target;
  }
};

inline bool has_expected_zero_row(const FormFamily& fam) {
  if (fam.par.p % 2 != 0 || fam.par.N % 2 != 0) return false;
  long i = fam.par.a + 1 + fam.par.N / 2;
  for (long k = 1; k <= fam.K; ++k)
    if (fam.ski(k, i) != 0) return false;
  return true;
}

inline PadeReport run_pade_checks(const FormFamily& fam, long transfer_k = 3) {
  PadeReport rep;
  rep.order_zero = check_order_at_zero(fam);
  rep.order_infinity = check_order_at_infinity(fam);
  rep.order_unity = check_order_at_unity(fam);
  rep.transfer_ok = transfer_agrees(fam, transfer_k);
  MMatrix M = build_M(fam.par, fam.delta);
  PMatrix P = build_P_matrix(fam);
  rep.product_ok = verify_product(M, P, fam);
  rep.rank = rank_of_P(P);
  rep.rank_target = fam.par.a + fam.par.N;  // q - 1
  rep.hash = basis_hash(column_space_basis(s_matrix_rows(fam)));
  rep.zero_row = has_expected_zero_row(fam);
  return rep;
}

// Integer identity balancing equations against unknowns:
// N((r+1)n+1) + N(d_0-1) + N((r+1)n+1) = (a+N+1)(n+1) - tau, tau = a+1-aN.
inline bool check_count_balance(const Params& par) {
  long lhs = par.N * ((par.r + 1) * par.n + 1) + par.N * (par.d0() - 1) +
             par.N * ((par.r + 1) * par.n + 1);
  long tau = par.a + 1 - par.a * par.N;
  return lhs == (par.a + par.N + 1) * (par.n + 1) - tau;
}

}  // namespace zetaforms
