#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "qsuper/errors.hpp"

namespace qsuper {

/// Element of Q(i): re + im*i with arbitrary precision rationals.
struct GaussRat {
  mpq_class re{0};
  mpq_class im{0};

  GaussRat() = default;
  GaussRat(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static GaussRat unit_i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRat conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }

  GaussRat inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_real()) return {1 / re, 0};
    mpq_class n = norm();
    return {re / n, -im / n};
  }

  GaussRat operator-() const { return {-re, -im}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (is_real() && o.is_real()) {
      re *= o.re;
    } else {
      mpq_class r = re * o.re - im * o.im;
      mpq_class i = re * o.im + im * o.re;
      re = std::move(r);
      im = std::move(i);
    }
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inv(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  /// "Negative" for sign extraction when printing: real part < 0, or purely
  /// imaginary with negative imaginary part.
  bool looks_negative() const {
    int s = sgn(re);
    return s < 0 || (s == 0 && sgn(im) < 0);
  }
};

inline GaussRat gauss_pow(GaussRat base, long e) {
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  GaussRat r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Exact square root in Q(i) if one exists.
inline bool gauss_sqrt(const GaussRat& z, GaussRat& out) {
  auto rat_sqrt = [](const mpq_class& v, mpq_class& r) {
    if (sgn(v) < 0) return false;
    mpz_class n = v.get_num(), d = v.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    r = mpq_class(sn, sd);
    r.canonicalize();
    return true;
  };
  if (z.is_zero()) {
    out = GaussRat(0);
    return true;
  }
  if (z.is_real()) {
    mpq_class r;
    if (rat_sqrt(z.re, r)) {
      out = GaussRat(r, 0);
      return true;
    }
    if (rat_sqrt(-z.re, r)) {
      out = GaussRat(0, r);
      return true;
    }
    return false;
  }
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |z|)/2, y = b/(2x).
  mpq_class modulus;
  if (!rat_sqrt(z.norm(), modulus)) return false;
  mpq_class x2 = (z.re + modulus) / 2, x;
  if (!rat_sqrt(x2, x) || sgn(x) == 0) return false;
  out = GaussRat(x, z.im / (2 * x));
  return true;
}

inline std::string rat_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace qsuper
