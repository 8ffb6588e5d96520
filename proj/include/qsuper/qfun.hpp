#pragma once

#include <map>
#include <string>

#include "qsuper/hopf.hpp"

namespace qsuper {

/// Polynomial in one commuting variable z with Scalar coefficients.
class QPolynomial {
 public:
  using Terms = std::map<int, Scalar>;

  QPolynomial() = default;
  QPolynomial(Scalar c) { add_term(0, std::move(c)); }  // NOLINT
  static QPolynomial z_power(int k, Scalar c = Scalar(1)) {
    QPolynomial p;
    p.add_term(k, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Scalar coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(int k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (auto& [k1, c1] : a.terms_)
      for (auto& [k2, c2] : b.terms_) r.add_term(k1 + k2, c1 * c2);
    return r;
  }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  /// Substitute an element of a (possibly noncommutative) algebra for z.
  Element substitute(const Element& z) const {
    const Algebra& A = Algebra::standard(z.ring());
    Element r(z.ring());
    Element zp = A.one();
    int at = 0;
    for (auto& [k, c] : terms_) {
      while (at < k) {
        zp = A.multiply(zp, z);
        ++at;
      }
      r += zp * c;
    }
    return r;
  }

 private:
  Terms terms_;
};

inline std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : p.terms()) {
    std::string body;
    bool neg = false;
    if (k == 0) {
      auto [n, pre] = coefficient_prefix(c);
      neg = n;
      body = pre.empty() ? "1" : pre.substr(0, pre.size() - 1);
    } else {
      auto [n, pre] = coefficient_prefix(c);
      neg = n;
      body = pre + (k == 1 ? std::string("z") : "z^" + std::to_string(k));
    }
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

/// (u; v)_m = prod_{k<m} (1 - u v^k).
inline Scalar pochhammer(const Scalar& u, const Scalar& v, int m) {
  Scalar r(1), uv = u;
  for (int k = 0; k < m; ++k) {
    r *= Scalar(1) - uv;
    uv *= v;
  }
  return r;
}

/// (c z; v)_m as a polynomial in z.
inline QPolynomial pochhammer_z(const Scalar& c, const Scalar& v, int m) {
  QPolynomial r(Scalar(1));
  Scalar cv = c;
  for (int k = 0; k < m; ++k) {
    r = r * (QPolynomial(Scalar(1)) - QPolynomial::z_power(1, cv));
    cv *= v;
  }
  return r;
}

/// Gauss binomial (v;v)_m / ((v;v)_n (v;v)_{m-n}); zero when n < 0 or n > m.
inline Scalar gauss_binomial(int m, int n, const Scalar& v) {
  if (n < 0 || m < 0 || n > m) return Scalar();
  // Pascal recursion keeps every intermediate value polynomial in v.
  std::vector<Scalar> row{Scalar(1)};
  for (int r = 1; r <= m; ++r) {
    std::vector<Scalar> next(r + 1);
    next[0] = Scalar(1);
    next[r] = Scalar(1);
    for (int k = 1; k < r; ++k) next[k] = row[k - 1] * v.pow(r - k) + row[k];
    row = std::move(next);
  }
  return row[n];
}

/// Little q-Jacobi polynomial
///   P_n^{(alpha,beta)}(z; q) = sum_r (q^-n;q)_r (q^{alpha+beta+n+1};q)_r / ((q;q)_r (q^{alpha+1};q)_r) (q z)^r.
inline QPolynomial little_jacobi(int n, int alpha, int beta, const Scalar& q) {
  if (n < 0) throw Error("little_jacobi: degree must be nonnegative");
  QPolynomial r;
  Scalar qn = q.pow(-n), qab = q.pow(alpha + beta + n + 1), qa = q.pow(alpha + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar num = pochhammer(qn, q, k) * pochhammer(qab, q, k);
    Scalar den = pochhammer(q, q, k) * pochhammer(qa, q, k);
    if (den.is_zero()) throw DivisionByZero();
    r.add_term(k, num / den * q.pow(k));
  }
  return r;
}

/// Pascal rule binom(m+1, n+1) = binom(m, n) v^{m-n} + binom(m, n+1) for
/// 0 <= n < m <= max_m, with each binomial computed from the product formula.
inline Report pascal_check(int max_m, const Scalar& v) {
  Report rep;
  rep.name = "pascal";
  auto direct = [&](int m, int n) {
    if (n < 0 || n > m) return Scalar();
    return pochhammer(v, v, m) / (pochhammer(v, v, n) * pochhammer(v, v, m - n));
  };
  auto show = [](const Scalar& s) { return to_string(s); };
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= m; ++n) {
      std::string in = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      rep.expect_eq("product formula " + in, gauss_binomial(m, n, v), direct(m, n), show);
      if (n < m)
        rep.expect_eq("Pascal " + in,
                      direct(m + 1, n + 1), direct(m, n) * v.pow(m - n) + direct(m, n + 1), show);
      rep.expect_eq("symmetry " + in, gauss_binomial(m, n, v), gauss_binomial(m, m - n, v), show);
    }
  return rep;
}

/// The q-binomial theorem (x+y)^m = sum_k binom(m,k)_{v^-1} x^k y^{m-k} for
/// the two summands of Delta(a) and of Delta(c), which satisfy x y = t^2 y x.
/// Compared against the repeated product and against Delta(a^m), Delta(c^m).
inline Report qbinomial_theorem_check(int m) {
  Report rep;
  rep.name = "q-binomial theorem";
  const Algebra& A = Algebra::standard(Ring::Asigma);
  const HopfStructure& H = HopfStructure::standard(Ring::Asigma);
  Scalar vinv = Scalar::t_pow(-2);
  auto show = [](const Tensor& x) { return to_string(x); };
  struct Pair {
    const char* name;
    Monomial x1, x2, y1, y2, power;
  };
  const Pair pairs[] = {
      {"Delta(a)", {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}},
      {"Delta(c)", {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}},
  };
  for (const Pair& p : pairs) {
    Tensor x = Tensor::pure({&A, &A}, {p.x1, p.x2});
    Tensor y = Tensor::pure({&A, &A}, {p.y1, p.y2});
    rep.expect_eq(std::string(p.name) + ": x y = t^2 y x", x * y, (y * x) * Scalar::t_pow(2), show);
    Tensor one = Tensor::pure({&A, &A}, {Monomial{}, Monomial{}});
    std::vector<Tensor> xp{one}, yp{one};
    for (int k = 1; k <= m; ++k) {
      xp.push_back(xp.back() * x);
      yp.push_back(yp.back() * y);
    }
    Tensor sum = x + y, power_direct = one;
    for (int k = 0; k < m; ++k) power_direct = power_direct * sum;
    Tensor series({&A, &A});
    for (int k = 0; k <= m; ++k) series += (xp[k] * yp[m - k]) * gauss_binomial(m, k, vinv);
    std::string in = std::string(p.name) + ", m=" + std::to_string(m);
    rep.expect_eq("(x+y)^m " + in, power_direct, series, show);
    Monomial pm = p.power;
    for (int q = 0; q < 5; ++q) pm.e[q] *= m;
    rep.expect_eq("coproduct of the m-th power " + in, H.coproduct(pm), series, show);
  }
  return rep;
}

}  // namespace qsuper
