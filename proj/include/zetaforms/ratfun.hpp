#pragma once

#include "zetaforms/poly.hpp"

namespace zetaforms {

// Reduced rational function num/den over a field K; den is monic and
// coprime to num.
template <class K>
class RatFun {
 public:
  RatFun() : num_(), den_(Poly<K>(K(1))) {}
  explicit RatFun(Poly<K> num) : num_(std::move(num)), den_(Poly<K>(K(1))) {}
  RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Poly<K> as_polynomial() const {
    if (!is_polynomial())
      throw std::domain_error("rational function has a nontrivial denominator");
    return num_ * (K(1) / den_.coeff(0));
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                  den_ * den_);
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    Poly<K> g = Poly<K>::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly<K>::divexact(num_, g);
      den_ = Poly<K>::divexact(den_, g);
    }
    K lead = den_.coeff(den_.degree());
    if (!(lead == K(1))) {
      K inv = K(1) / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

}  // namespace zetaforms
