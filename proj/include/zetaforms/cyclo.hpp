#pragma once

#include <map>
#include <mutex>
#include <numeric>

#include "zetaforms/numtheory.hpp"
#include "zetaforms/poly.hpp"

namespace zetaforms {

// Phi_N via the recursion Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline DensePoly cyclotomic_min_poly(long N) {
  if (N < 1) throw std::domain_error("cyclotomic_min_poly: N must be >= 1");
  static std::map<long, DensePoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [&](auto&& self, long m) -> const DensePoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xm(size_t(m) + 1, Rational(0));
    xm[0] = -1;
    xm[size_t(m)] = 1;
    DensePoly num{DensePoly(std::move(xm))};
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = DensePoly::divexact(num, self(self, d));
    return cache.emplace(m, std::move(num)).first->second;
  };
  return compute(compute, N);
}

// Element of Q[x]/Phi_N(x); coeffs has length phi(N) = deg Phi_N.
class CycloNumber {
 public:
  CycloNumber() : N_(1), c_(1, Rational(0)) {}
  CycloNumber(long v) : N_(1), c_(1, Rational(v)) {}          // NOLINT
  CycloNumber(const Rational& v) : N_(1), c_(1, v) {}         // NOLINT
  CycloNumber(long N, std::vector<Rational> coeffs) : N_(N), c_(std::move(coeffs)) {
    size_t deg = size_t(cyclotomic_min_poly(N).degree());
    if (c_.size() != deg)
      throw std::invalid_argument("CycloNumber: coefficient length != phi(N)");
  }

  // omega_N^k, omega_N = primitive N-th root of unity
  static CycloNumber root_of_unity(long N, long k) {
    k = ((k % N) + N) % N;
    return from_poly(N, DensePoly::monomial(Rational(1), int(k)));
  }

  static CycloNumber from_poly(long N, const DensePoly& p) {
    const DensePoly phi = cyclotomic_min_poly(N);
    DensePoly q, r;
    DensePoly::divmod(p, phi, q, r);
    std::vector<Rational> c(size_t(phi.degree()), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c[size_t(i)] = r.coeff(i);
    return CycloNumber(N, std::move(c));
  }

  long order() const { return N_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational())
      throw std::domain_error("cyclotomic number is not rational");
    return c_[0];
  }

  // Image in Q[x]/Phi_M for N | M (omega_N = omega_M^{M/N}).
  CycloNumber embed(long M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) throw std::domain_error("embed: order must be a multiple");
    DensePoly p;
    long step = M / N_;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0)
        p = p + DensePoly::monomial(c_[i], int(long(i) * step));
    return from_poly(M, p);
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    auto [x, y] = align(a, b);
    DensePoly p = DensePoly(x.c_) * DensePoly(y.c_);
    return from_poly(x.N_, p);
  }

  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
    return a * b.inverse();
  }

  // Extended Euclid against Phi_N.
  CycloNumber inverse() const {
    if (is_zero())
      throw std::domain_error("division by zero in cyclotomic field");
    const DensePoly phi = cyclotomic_min_poly(N_);
    DensePoly r0 = phi, r1 = DensePoly(c_);
    DensePoly s0, s1{DensePoly(Rational(1))};
    while (!r1.is_zero()) {
      DensePoly q, r;
      DensePoly::divmod(r0, r1, q, r);
      DensePoly s2 = s0 - q * s1;
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
    }
    // r0 = gcd = nonzero constant (Phi_N irreducible, element nonzero)
    if (r0.degree() != 0)
      throw std::logic_error("cyclotomic inverse: gcd not constant");
    return from_poly(N_, s0 * (Rational(1) / r0.coeff(0)));
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) {
    return !(a == b);
  }

 private:
  static std::pair<CycloNumber, CycloNumber> align(const CycloNumber& a,
                                                   const CycloNumber& b) {
    if (a.N_ == b.N_) return {a, b};
    if (a.N_ % b.N_ == 0) return {a, b.embed(a.N_)};
    if (b.N_ % a.N_ == 0) return {a.embed(b.N_), b};
    long m = std::lcm(a.N_, b.N_);
    return {a.embed(m), b.embed(m)};
  }

  long N_;
  std::vector<Rational> c_;
};

}  // namespace zetaforms
