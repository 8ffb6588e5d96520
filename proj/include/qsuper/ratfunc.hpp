#pragma once

#include <complex>
#include <cstdlib>
#include <string>
#include <utility>

#include "qsuper/poly.hpp"

namespace qsuper {

/// Rational function in t over Q(i) in canonical form
///
///     t^shift * num(t) / den(t)
///
/// with num(0) != 0 (or num == 0), den monic, den(0) != 0 and
/// gcd(num, den) = 1. Two values are equal iff their fields are equal.
class RatFunc {
 public:
  RatFunc() : den_(Poly::one()) {}
  RatFunc(long v) : num_(GaussRat(v)), den_(Poly::one()) {}  // NOLINT
  RatFunc(GaussRat v) : num_(std::move(v)), den_(Poly::one()) {}  // NOLINT

  /// General constructor: t^shift * num / den, any form.
  static RatFunc fraction(Poly num, Poly den, int shift = 0) {
    if (den.is_zero()) throw DivisionByZero();
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.shift_ = shift;
    r.canonicalize();
    return r;
  }
  /// c * t^k.
  static RatFunc monomial(GaussRat c, int k) {
    RatFunc r(std::move(c));
    if (!r.is_zero()) r.shift_ = k;
    return r;
  }
  static RatFunc t_power(int k) { return monomial(GaussRat(1), k); }
  /// Laurent polynomial from (exponent, coefficient) pairs.
  static RatFunc laurent(std::initializer_list<std::pair<int, long>> terms) {
    RatFunc r;
    for (auto& [e, v] : terms) r += monomial(GaussRat(v), e);
    return r;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_real() const { return num_.is_real() && den_.is_real(); }
  /// Single-term Laurent polynomial c*t^k.
  bool is_monomial() const { return den_.is_one() && num_.c.size() == 1; }

  int shift() const { return shift_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RatFunc& operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int m = std::min(shift_, o.shift_);
    if (den_.is_one() && o.den_.is_one()) {
      Poly sum = num_.shifted(shift_ - m) + o.num_.shifted(o.shift_ - m);
      num_ = std::move(sum);
      shift_ = m;
      strip_t();
      return *this;
    }
    if (den_ == o.den_) {
      num_ = num_.shifted(shift_ - m) + o.num_.shifted(o.shift_ - m);
      shift_ = m;
      canonicalize();
      return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly d1 = g.is_one() ? den_ : exact_div(den_, g);
    Poly d2 = g.is_one() ? o.den_ : exact_div(o.den_, g);
    num_ = num_.shifted(shift_ - m) * d2 + o.num_.shifted(o.shift_ - m) * d1;
    den_ = den_ * d2;
    shift_ = m;
    canonicalize();
    return *this;
  }
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }

  RatFunc& operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
      num_ = num_ * o.num_;
      return *this;
    }
    // Cross-cancel so that the product stays reduced.
    Poly g1 = o.den_.is_one() ? Poly::one() : gcd(num_, o.den_);
    Poly g2 = den_.is_one() ? Poly::one() : gcd(o.num_, den_);
    Poly n1 = g1.is_one() ? num_ : exact_div(num_, g1);
    Poly n2 = g2.is_one() ? o.num_ : exact_div(o.num_, g2);
    Poly e1 = g2.is_one() ? den_ : exact_div(den_, g2);
    Poly e2 = g1.is_one() ? o.den_ : exact_div(o.den_, g1);
    num_ = n1 * n2;
    den_ = e1 * e2;
    normalize_lead();
    return *this;
  }

  RatFunc inv() const {
    if (is_zero()) throw DivisionByZero();
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.shift_ = -shift_;
    r.normalize_lead();
    return r;
  }
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inv(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(long e) const {
    RatFunc base = e < 0 ? inv() : *this;
    e = std::labs(e);
    RatFunc r(1);
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  /// Complex conjugation of coefficients (t fixed).
  RatFunc conj() const {
    RatFunc r = *this;
    for (auto& v : r.num_.c) v = v.conj();
    for (auto& v : r.den_.c) v = v.conj();
    return r;
  }

  /// Substitute a numeric value for t.
  std::complex<double> eval(std::complex<double> t) const {
    std::complex<double> d = den_.eval(t);
    if (std::abs(d) < 1e-300) throw PoleError("pole of rational function at the chosen t");
    return num_.eval(t) * std::pow(t, shift_) / d;
  }
  /// Exact substitution t -> value in Q(i).
  GaussRat eval(const GaussRat& t) const {
    GaussRat d = den_.eval(t);
    if (d.is_zero()) throw PoleError("pole of rational function at the chosen t");
    return num_.eval(t) * gauss_pow(t, shift_) / d;
  }

  /// Exact square root, if one exists in Q(i)(t).
  bool sqrt(RatFunc& out) const {
    if (is_zero()) {
      out = RatFunc();
      return true;
    }
    if (shift_ % 2 != 0) return false;
    Poly rn, rd;
    if (!poly_sqrt(num_, rn) || !poly_sqrt(den_, rd)) return false;
    out = RatFunc::fraction(rn, rd, shift_ / 2);
    return true;
  }

  /// Total size, used as a pivoting heuristic.
  std::size_t weight() const { return num_.c.size() + den_.c.size(); }

  /// Leading coefficient of the numerator (after ordering by ascending
  /// powers of t, the first nonzero one) - used for sign extraction.
  const GaussRat& first_coeff() const { return num_.c.front(); }

 private:
  void strip_t() {
    if (num_.is_zero()) {
      shift_ = 0;
      return;
    }
    int low = num_.low_order();
    if (low > 0) {
      num_ = num_.unshifted(low);
      shift_ += low;
    }
  }
  void normalize_lead() {
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = Poly::one();
      return;
    }
    if (!den_.lc().is_one()) {
      GaussRat f = den_.lc().inv();
      den_ = den_.scaled(f);
      num_ = num_.scaled(f);
    }
  }
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly::one();
      shift_ = 0;
      return;
    }
    strip_t();
    int dlow = den_.low_order();
    if (dlow > 0) {
      den_ = den_.unshifted(dlow);
      shift_ -= dlow;
    }
    if (den_.degree() > 0) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    normalize_lead();
  }

  Poly num_;
  Poly den_;
  int shift_ = 0;
};

}  // namespace qsuper
