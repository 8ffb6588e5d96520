#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>

#include "qsuper/ratfunc.hpp"

namespace qsuper {

/// Formal square roots adjoined to Q(i)(t).
///
/// Three radicands are supported: 1 + t^2, 1 + t^-2 and
/// (t + t^-1)/(t - t^-1). Since (1 + t^2) = t^2 (1 + t^-2), the first is
/// not independent; it is rewritten as sqrt(1 + t^2) = t * sqrt(1 + t^-2).
/// That is the branch under which the 3x3 sphere corepresentation matrix
/// satisfies Delta(M) = M (x) M. The remaining two generators, rho and kappa,
/// give a degree-4 field extension, so a Scalar is stored as
///
///     r0 + r1*rho + r2*kappa + r3*rho*kappa,   rho^2 = 1 + t^-2,
///                                              kappa^2 = (t^2 + 1)/(t^2 - 1).
enum class Radical : int { OnePlusT2 = 0, OnePlusTm2 = 1, Kappa = 2 };

inline const RatFunc& rho_squared() {
  static const RatFunc v = RatFunc::laurent({{0, 1}, {-2, 1}});
  return v;
}
inline const RatFunc& kappa_squared() {
  static const RatFunc v = RatFunc::fraction(Poly({1, 0, 1}), Poly({-1, 0, 1}));
  return v;
}

class Scalar {
 public:
  static constexpr int kRho = 1;
  static constexpr int kKappa = 2;

  Scalar() = default;
  Scalar(long v) { parts_[0] = RatFunc(v); }  // NOLINT
  Scalar(GaussRat v) { parts_[0] = RatFunc(std::move(v)); }  // NOLINT
  Scalar(RatFunc v) { parts_[0] = std::move(v); }  // NOLINT

  static Scalar t() { return RatFunc::t_power(1); }
  static Scalar t_pow(int k) { return RatFunc::t_power(k); }
  static Scalar i() { return GaussRat::unit_i(); }
  /// q = -t^2.
  static Scalar q() { return RatFunc::monomial(GaussRat(-1), 2); }
  static Scalar rho() {
    Scalar s;
    s.parts_[kRho] = RatFunc(1);
    return s;
  }
  static Scalar kappa() {
    Scalar s;
    s.parts_[kKappa] = RatFunc(1);
    return s;
  }
  static Scalar from_parts(std::array<RatFunc, 4> parts) {
    Scalar s;
    s.parts_ = std::move(parts);
    return s;
  }
  /// sqrt of one of the supported radicands; anything else is rejected.
  static Scalar sqrt_of(const Scalar& radicand) {
    if (!radicand.is_rational()) throw UnsupportedRadical("radicand must be radical-free");
    const RatFunc& r = radicand.parts_[0];
    if (r == rho_squared()) return rho();
    if (r == kappa_squared()) return kappa();
    if (r == RatFunc::laurent({{0, 1}, {2, 1}})) return Scalar::t() * rho();
    RatFunc root;
    if (r.sqrt(root)) return root;
    throw UnsupportedRadical("radicand not in {1+t^2, 1+t^-2, (t+t^-1)/(t-t^-1)}");
  }

  const RatFunc& part(int mask) const { return parts_[mask]; }
  const std::array<RatFunc, 4>& parts() const { return parts_; }

  bool is_zero() const {
    return parts_[0].is_zero() && parts_[1].is_zero() && parts_[2].is_zero() &&
           parts_[3].is_zero();
  }
  bool is_rational() const {
    return parts_[1].is_zero() && parts_[2].is_zero() && parts_[3].is_zero();
  }
  bool is_one() const { return is_rational() && parts_[0].is_one(); }
  /// The radical-free part, valid when is_rational().
  const RatFunc& rational() const { return parts_[0]; }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& p : r.parts_)
      if (!p.is_zero()) p = -p;
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    for (int m = 0; m < 4; ++m)
      if (!o.parts_[m].is_zero()) parts_[m] += o.parts_[m];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (int m = 0; m < 4; ++m)
      if (!o.parts_[m].is_zero()) parts_[m] -= o.parts_[m];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
      parts_[0] *= o.parts_[0];
      return *this;
    }
    std::array<RatFunc, 4> out;
    for (int m1 = 0; m1 < 4; ++m1) {
      if (parts_[m1].is_zero()) continue;
      for (int m2 = 0; m2 < 4; ++m2) {
        if (o.parts_[m2].is_zero()) continue;
        RatFunc term = parts_[m1] * o.parts_[m2];
        int common = m1 & m2;
        if (common & kRho) term *= rho_squared();
        if (common & kKappa) term *= kappa_squared();
        out[m1 ^ m2] += term;
      }
    }
    parts_ = std::move(out);
    return *this;
  }
  Scalar inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return parts_[0].inv();
    // x * conj_rho(x) lies in Q(i)(t)(kappa); multiply by its kappa-conjugate.
    Scalar xr = conj_radical(kRho);
    Scalar y = *this * xr;
    Scalar yk = y.conj_radical(kKappa);
    Scalar n = y * yk;
    return xr * yk * Scalar(n.parts_[0].inv());
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(long e) const {
    if (is_rational()) return parts_[0].pow(e);
    Scalar base = e < 0 ? inv() : *this;
    e = e < 0 ? -e : e;
    Scalar r(1);
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  /// Anti-linear conjugation: i -> -i, t and the (real) radicals fixed.
  Scalar conj() const {
    Scalar r;
    for (int m = 0; m < 4; ++m)
      if (!parts_[m].is_zero()) r.parts_[m] = parts_[m].conj();
    return r;
  }

  /// Field automorphism negating the given radical generator(s).
  Scalar conj_radical(int bit) const {
    Scalar r = *this;
    for (int m = 0; m < 4; ++m)
      if ((m & bit) && !r.parts_[m].is_zero()) r.parts_[m] = -r.parts_[m];
    return r;
  }

  /// Exact square root inside the field, if one exists (radical-free input).
  bool try_sqrt(Scalar& out) const {
    if (!is_rational()) return false;
    const RatFunc& r = parts_[0];
    RatFunc root;
    if (r.sqrt(root)) {
      out = root;
      return true;
    }
    if ((r / rho_squared()).sqrt(root)) {
      out = Scalar(root) * rho();
      return true;
    }
    if ((r / kappa_squared()).sqrt(root)) {
      out = Scalar(root) * kappa();
      return true;
    }
    if ((r / (rho_squared() * kappa_squared())).sqrt(root)) {
      out = Scalar(root) * rho() * kappa();
      return true;
    }
    return false;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto& p : parts_) w += p.is_zero() ? 0 : p.weight() + 1;
    return w;
  }

 private:
  std::array<RatFunc, 4> parts_;
};

/// The value of t for a numeric q: t = i * sqrt(q), principal branch.
/// For real q < 0 this is t = -sqrt(-q).
inline std::complex<double> t_from_q(std::complex<double> q) {
  return std::complex<double>(0, 1) * std::sqrt(q);
}

/// Numeric substitution. rho and kappa are evaluated on the principal
/// branch; sqrt(1 + t^2) is t * rho by construction.
inline std::complex<double> eval_numeric(const Scalar& x, std::complex<double> q_val) {
  if (std::abs(q_val) == 0.0) throw Error("q must be nonzero");
  std::complex<double> t = t_from_q(q_val);
  std::complex<double> rho = std::sqrt(1.0 + 1.0 / (t * t));
  std::complex<double> kappa = std::sqrt((t + 1.0 / t) / (t - 1.0 / t));
  std::complex<double> rad[4] = {1.0, rho, kappa, rho * kappa};
  std::complex<double> r = 0;
  for (int m = 0; m < 4; ++m)
    if (!x.part(m).is_zero()) r += x.part(m).eval(t) * rad[m];
  return r;
}

}  // namespace qsuper
