#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/superalg.hpp"

namespace qsuper {

// Text rendering. Laurent polynomials list their terms by increasing |exponent|,
// negative exponent first on ties, so "t^-1 - t" and "1 + t^-2" read naturally.
// A rational function t^s * num / den is printed as N/D with D = den * t^-deg(den),
// i.e. the denominator is a polynomial in t^-1 with constant term 1.

namespace detail {

inline std::string gauss_abs_string(const GaussRat& c) {
  // c is known not to "look negative"
  if (c.is_real()) return c.re.get_str();
  if (sgn(c.re) == 0) {
    if (c.im == 1) return "i";
    return c.im.get_str() + "*i";
  }
  std::string im = sgn(c.im) < 0 ? " - " : " + ";
  mpq_class a = abs(c.im);
  return "(" + c.re.get_str() + im + (a == 1 ? std::string("i") : a.get_str() + "*i") + ")";
}

inline std::string t_power_string(int e) {
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

/// One signed term c*t^e: returns (negative?, text of |term|).
inline std::pair<bool, std::string> term_string(const GaussRat& c, int e) {
  bool neg = c.looks_negative();
  GaussRat a = neg ? -c : c;
  if (e == 0) return {neg, gauss_abs_string(a)};
  if (a.is_one()) return {neg, t_power_string(e)};
  return {neg, gauss_abs_string(a) + "*" + t_power_string(e)};
}

inline std::vector<std::pair<int, GaussRat>> laurent_terms(const Poly& p, int shift) {
  std::vector<std::pair<int, GaussRat>> out;
  for (std::size_t k = 0; k < p.c.size(); ++k)
    if (!p.c[k].is_zero()) out.emplace_back(static_cast<int>(k) + shift, p.c[k]);
  std::stable_sort(out.begin(), out.end(), [](auto& x, auto& y) {
    int ax = std::abs(x.first), ay = std::abs(y.first);
    return ax != ay ? ax < ay : x.first < y.first;
  });
  return out;
}

inline std::string join_terms(const std::vector<std::pair<int, GaussRat>>& terms) {
  std::string s;
  bool first = true;
  for (auto& [e, c] : terms) {
    auto [neg, body] = term_string(c, e);
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s.empty() ? "0" : s;
}

}  // namespace detail

inline std::string to_string(const GaussRat& c) {
  auto [neg, body] = detail::term_string(c, 0);
  return neg ? "-" + body : body;
}

inline std::string laurent_string(const Poly& p, int shift) {
  return detail::join_terms(detail::laurent_terms(p, shift));
}

inline std::string to_string(const RatFunc& r) {
  if (r.is_zero()) return "0";
  if (r.is_laurent()) return laurent_string(r.num(), r.shift());
  int dd = r.den().degree();
  auto nt = detail::laurent_terms(r.num(), r.shift() - dd);
  auto dt = detail::laurent_terms(r.den(), -dd);
  std::string n = detail::join_terms(nt), d = detail::join_terms(dt);
  if (nt.size() > 1) n = "(" + n + ")";
  if (dt.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

inline const char* radical_string(int mask) {
  switch (mask) {
    case Scalar::kRho: return "sqrt(1 + t^-2)";
    case Scalar::kKappa: return "sqrt((t + t^-1)/(t - t^-1))";
    case Scalar::kRho | Scalar::kKappa: return "sqrt(1 + t^-2)*sqrt((t + t^-1)/(t - t^-1))";
  }
  return "";
}

/// True when the value prints as a single unsigned factor (after sign
/// extraction), so it can be juxtaposed with '*' without parentheses.
inline bool is_atomic(const RatFunc& r) {
  if (!r.is_monomial()) return false;
  const GaussRat& c = r.first_coeff();
  return c.is_real() || sgn(c.re) == 0;
}

inline std::string to_string(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational());
  std::string s;
  bool first = true;
  for (int m = 0; m < 4; ++m) {
    const RatFunc& p = x.part(m);
    if (p.is_zero()) continue;
    bool neg = false;
    std::string body;
    if (m == 0) {
      body = to_string(p);
      if (!is_atomic(p)) body = "(" + body + ")";
      else if (body[0] == '-') neg = true, body.erase(0, 1);
    } else if (p.is_one()) {
      body = radical_string(m);
    } else if (is_atomic(p) && (-p).is_one()) {
      neg = true;
      body = radical_string(m);
    } else {
      std::string c = to_string(p);
      if (is_atomic(p)) {
        if (c[0] == '-') neg = true, c.erase(0, 1);
      } else {
        c = "(" + c + ")";
      }
      body = c + "*" + radical_string(m);
    }
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

inline std::string monomial_string(const Monomial& m, Ring r) {
  static const char* names[] = {"a", "b", "c", "d", "s"};
  static const char* plane_names[] = {"x", "y"};
  std::string s;
  int count = is_plane(r) ? 2 : 5;
  for (int q = 0; q < count; ++q) {
    int e = m.e[q];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += is_plane(r) ? plane_names[q] : names[q];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// Coefficient followed by '*' (or nothing when the coefficient is 1), with
/// the sign separated out.
inline std::pair<bool, std::string> coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return {false, ""};
  if ((-c).is_one()) return {true, ""};
  if (c.is_rational() && is_atomic(c.rational())) {
    std::string s = to_string(c.rational());
    bool neg = s[0] == '-';
    if (neg) s.erase(0, 1);
    return {neg, s + "*"};
  }
  // Extract the sign of the leading printed term.
  bool neg = false;
  for (int m = 0; m < 4; ++m) {
    const RatFunc& p = c.part(m);
    if (p.is_zero()) continue;
    int dd = p.is_laurent() ? 0 : p.den().degree();
    auto terms = detail::laurent_terms(p.num(), p.shift() - dd);
    neg = terms.front().second.looks_negative();
    break;
  }
  Scalar shown = neg ? -c : c;
  return {neg, "(" + to_string(shown) + ")*"};
}

inline std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : x.terms()) {
    std::string body;
    bool neg;
    if (m.is_one()) {
      auto [n, pre] = coefficient_prefix(c);
      neg = n;
      body = pre.empty() ? "1" : pre.substr(0, pre.size() - 1);
      if (x.size() == 1 && body.front() == '(' && !neg) body = to_string(c);
    } else {
      auto [n, pre] = coefficient_prefix(c);
      neg = n;
      body = pre + monomial_string(m, x.ring());
    }
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

inline std::string to_string(const BiDegree& d) {
  if (d.mixed) return "mixed";
  return "(" + std::to_string(d.m) + ", " + std::to_string(d.n) + ")";
}

}  // namespace qsuper
