#pragma once

#include <algorithm>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Dense univariate polynomial over a field K (K = Rational or CycloNumber).
// Zero polynomial <-> empty coefficient list; degree() of zero is the
// minus-infinity sentinel kNegInf.
template <class K>
class Poly {
 public:
  using value_type = K;
  static constexpr int kNegInf = -0x40000000;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const K& c0) : c_{c0} { trim(); }

  static Poly monomial(const K& coeff, int deg) {
    std::vector<K> c(size_t(deg) + 1, K(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInf : int(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K coeff(int i) const {
    if (i < 0 || i >= int(c_.size())) return K(0);
    return c_[size_t(i)];
  }

  void set_coeff(int i, const K& v) {
    if (i >= int(c_.size())) c_.resize(size_t(i) + 1, K(0));
    c_[size_t(i)] = v;
    trim();
  }

  K eval(const K& x) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Sum of coefficients = value at 1.
  K eval_at_one() const {
    K r(0);
    for (const auto& v : c_) r = r + v;
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(long(i));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
      if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<K> c(c_);
    for (auto& v : c) v = K(0) - v;
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const K& s) {
    std::vector<K> c(a.c_);
    for (auto& v : c) v = v * s;
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem(a.c_);
    std::vector<K> quo;
    int db = b.degree();
    K lead = b.c_.back();
    int dr = int(rem.size()) - 1;
    while (dr >= db) {
      if (int(quo.size()) < dr - db + 1) quo.resize(size_t(dr - db) + 1, K(0));
      K f = rem[size_t(dr)] / lead;
      quo[size_t(dr - db)] = f;
      for (int i = 0; i <= db; ++i)
        rem[size_t(dr - db + i)] = rem[size_t(dr - db + i)] - f * b.c_[size_t(i)];
      rem.pop_back();
      dr = int(rem.size()) - 1;
      while (dr >= 0 && rem[size_t(dr)] == K(0)) {
        rem.pop_back();
        --dr;
      }
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
  }

  // Exact division; throws when a remainder is left over.
  static Poly divexact(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    if (!a.is_zero()) a = a * (K(1) / a.c_.back());  // monic normalization
    return a;
  }

  template <class F>
  auto map(F&& f) const {
    using K2 = decltype(f(std::declval<K>()));
    std::vector<K2> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(f(v));
    return Poly<K2>(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }

  std::vector<K> c_;
};

using DensePoly = Poly<Rational>;

// Laurent polynomial: body * z^min_deg with nonzero first/last body
// coefficient (unless zero).
template <class K>
class Laurent {
 public:
  Laurent() : min_(0) {}
  Laurent(int min_deg, Poly<K> body) : min_(min_deg), body_(std::move(body)) {
    normalize();
  }
  explicit Laurent(const Poly<K>& p) : min_(0), body_(p) { normalize(); }

  bool is_zero() const { return body_.is_zero(); }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + body_.degree(); }
  const Poly<K>& body() const { return body_; }

  K coeff(int e) const { return body_.coeff(e - min_); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int m = std::min(a.min_, b.min_);
    return Laurent(m, shift_body(a, m) + shift_body(b, m));
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    return a + (-b);
  }

  Laurent operator-() const { return Laurent(min_, -body_); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    return Laurent(a.min_ + b.min_, a.body_ * b.body_);
  }

  friend Laurent operator*(const Laurent& a, const K& s) {
    return Laurent(a.min_, a.body_ * s);
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return (a.is_zero() && b.is_zero()) ||
           (a.min_ == b.min_ && a.body_ == b.body_);
  }

  Laurent derivative() const {
    std::vector<K> c;
    int lo = min_, hi = max_degree();
    if (is_zero()) return Laurent();
    for (int e = lo; e <= hi; ++e) c.push_back(coeff(e) * K(long(e)));
    return Laurent(lo - 1, Poly<K>(std::move(c)));
  }

  Laurent mul_z_power(int e) const { return Laurent(min_ + e, body_); }

  K eval_at_one() const { return body_.eval_at_one(); }

  // Evaluation at an invertible point (negative exponents use division).
  K eval(const K& x) const {
    K v = body_.eval(x);
    if (min_ == 0) return v;
    K p(1);
    int e = min_ < 0 ? -min_ : min_;
    for (int i = 0; i < e; ++i) p = p * x;
    return min_ > 0 ? K(v * p) : K(v / p);
  }

  // Exact division by (1 - z); requires value 0 at z = 1.
  Laurent div_one_minus_z() const {
    if (is_zero()) return Laurent();
    if (!(eval_at_one() == K(0)))
      throw std::domain_error("division by (1-z) leaves a remainder");
    // body = (1-z) * q  with q_i = sum_{m<=i} body_m
    std::vector<K> q(size_t(body_.degree()), K(0));
    K acc(0);
    for (int i = 0; i < body_.degree(); ++i) {
      acc = acc + body_.coeff(i);
      q[size_t(i)] = acc;
    }
    return Laurent(min_, Poly<K>(std::move(q)));
  }

  // Coefficient substitution z -> s*z (multiplies coeff of z^e by s^e).
  template <class K2>
  Laurent<K2> compose_scale(const std::vector<K2>& powers_mod_cycle,
                            int cycle) const {
    // powers_mod_cycle[m] = s^m for 0 <= m < cycle, with s^cycle = 1
    std::vector<K2> c;
    if (is_zero()) return Laurent<K2>();
    for (int e = min_; e <= max_degree(); ++e) {
      int m = ((e % cycle) + cycle) % cycle;
      c.push_back(powers_mod_cycle[size_t(m)] * K2(coeff(e)));
    }
    return Laurent<K2>(min_, Poly<K2>(std::move(c)));
  }

  template <class F>
  auto map(F&& f) const {
    auto b = body_.map(f);
    using K2 = typename std::decay_t<decltype(b)>::value_type;
    return Laurent<K2>(min_, std::move(b));
  }

  using value_type = K;

 private:
  static Poly<K> shift_body(const Laurent& a, int new_min) {
    int s = a.min_ - new_min;
    if (s == 0) return a.body_;
    std::vector<K> c(size_t(a.body_.degree() + 1 + s), K(0));
    for (int i = 0; i <= a.body_.degree(); ++i)
      c[size_t(i + s)] = a.body_.coeff(i);
    return Poly<K>(std::move(c));
  }

  void normalize() {
    if (body_.is_zero()) {
      min_ = 0;
      return;
    }
    int shift = 0;
    while (body_.coeff(shift) == K(0)) ++shift;
    if (shift > 0) {
      std::vector<K> c;
      for (int i = shift; i <= body_.degree(); ++i) c.push_back(body_.coeff(i));
      body_ = Poly<K>(std::move(c));
      min_ += shift;
    }
  }

  int min_;
  Poly<K> body_;
};

using LaurentPoly = Laurent<Rational>;

// Formal power series truncated at a stated order (coefficients of
// w^0 .. w^{order-1}).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(size_t(order), Rational(0)) {
    if (order < 1) throw std::domain_error("series order must be >= 1");
  }
  TruncatedSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(size_t(order), Rational(0));
  }

  int order() const { return int(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < order()) ? c_[size_t(i)] : Rational(0);
  }
  void set_coeff(int i, const Rational& v) { c_.at(size_t(i)) = v; }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i) r.c_[size_t(i)] = a.coeff(i) + b.coeff(i);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i)
      for (int j = 0; i + j < r.order() && j < b.order(); ++j)
        r.c_[size_t(i + j)] += a.coeff(i) * b.coeff(j);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
    TruncatedSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

 private:
  std::vector<Rational> c_;
};

// log(1+w) = sum_{m>=1} (-1)^{m+1} w^m / m, truncated.
inline TruncatedSeries series_log_at_one(int order) {
  TruncatedSeries s(order);
  for (int m = 1; m < order; ++m)
    s.set_coeff(m, Rational((m % 2 == 1) ? 1 : -1, m));
  return s;
}

// Polynomial evaluated at z = 1 + w as a truncated series (Horner).
inline TruncatedSeries poly_at_one_plus(const DensePoly& p, int order) {
  TruncatedSeries one_plus_w(order, {Rational(1), Rational(1)});
  TruncatedSeries acc(order);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * one_plus_w;
    acc.set_coeff(0, acc.coeff(0) + p.coeff(i));
  }
  return acc;
}

}  // namespace zetaforms
