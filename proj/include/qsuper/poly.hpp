#pragma once

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include "qsuper/gaussian.hpp"

namespace qsuper {

/// Dense univariate polynomial in t over Q(i); c[k] is the coefficient of t^k.
/// The coefficient vector never has a trailing zero.
struct Poly {
  std::vector<GaussRat> c;

  Poly() = default;
  explicit Poly(GaussRat v) {
    if (!v.is_zero()) c.push_back(std::move(v));
  }
  explicit Poly(std::vector<GaussRat> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly one() { return Poly(GaussRat(1)); }
  static Poly monomial(GaussRat v, int deg) {
    Poly p;
    if (v.is_zero()) return p;
    p.c.assign(deg + 1, GaussRat{});
    p.c[deg] = std::move(v);
    return p;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0].is_one(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const GaussRat& lc() const { return c.back(); }
  bool is_real() const {
    return std::all_of(c.begin(), c.end(), [](const GaussRat& g) { return g.is_real(); });
  }
  int low_order() const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) return static_cast<int>(k);
    return 0;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, GaussRat{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        if (b.c[j].is_zero()) continue;
        r.c[i + j] += a.c[i] * b.c[j];
      }
    }
    r.trim();
    return r;
  }
  Poly scaled(const GaussRat& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  /// Multiply by t^k (k >= 0).
  Poly shifted(int k) const {
    Poly r;
    if (is_zero()) return r;
    r.c.assign(k, GaussRat{});
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
  }
  /// Divide by t^k; the low k coefficients must vanish.
  Poly unshifted(int k) const {
    Poly r;
    if (static_cast<int>(c.size()) <= k) return r;
    r.c.assign(c.begin() + k, c.end());
    return r;
  }

  Poly monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inv());
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::complex<double> eval(std::complex<double> t) const {
    std::complex<double> r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + it->to_complex();
    return r;
  }
  GaussRat eval(const GaussRat& t) const {
    GaussRat r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
  }
};

/// Quotient and remainder of a / b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly rem = a;
  Poly quo;
  if (a.degree() < b.degree()) return {quo, rem};
  quo.c.assign(a.degree() - b.degree() + 1, GaussRat{});
  GaussRat lead_inv = b.lc().inv();
  bool monic = b.lc().is_one();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    GaussRat f = monic ? rem.lc() : rem.lc() * lead_inv;
    for (std::size_t k = 0; k < b.c.size(); ++k) {
      if (b.c[k].is_zero()) continue;
      rem.c[k + shift] -= f * b.c[k];
    }
    rem.c.back() = GaussRat{};  // exact cancellation of the leading term
    rem.trim();
    quo.c[shift] = std::move(f);
  }
  quo.trim();
  return {quo, rem};
}

inline Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

/// Monic gcd over Q(i).
inline Poly gcd(Poly a, Poly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly::one();
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Exact square root of a polynomial, if it is a perfect square.
inline bool poly_sqrt(const Poly& p, Poly& out) {
  if (p.is_zero()) {
    out = Poly();
    return true;
  }
  if (p.degree() % 2 != 0) return false;
  int low = p.low_order();
  if (low % 2 != 0) return false;
  Poly q = p.unshifted(low);
  GaussRat lead_root;
  if (!gauss_sqrt(q.lc(), lead_root)) return false;
  int n = q.degree() / 2;
  // Determine root coefficients from the top down.
  std::vector<GaussRat> r(n + 1);
  r[n] = lead_root;
  GaussRat two_lead_inv = (GaussRat(2) * lead_root).inv();
  for (int k = n - 1; k >= 0; --k) {
    GaussRat acc = q.c[n + k];
    for (int j = k + 1; j < n; ++j) {
      int other = n + k - j;
      if (other > j || other < 0) continue;
      GaussRat prod = r[j] * r[other];
      acc -= (other == j) ? prod : GaussRat(2) * prod;
    }
    r[k] = acc * two_lead_inv;
  }
  Poly root(std::move(r));
  if (root * root != q) return false;
  out = root.shifted(low / 2);
  return true;
}

}  // namespace qsuper
