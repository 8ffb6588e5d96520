#pragma once

#include <cctype>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/dual.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/superalg.hpp"

namespace qsuper {

/// Syntax tree of the expression language.
///
///   expr    = term { ("+" | "-") term } ;
///   term    = "-" term | product ;
///   product = power { ("*" | "/") power } ;
///   power   = atom [ "^" [ "-" ] integer ] ;
///   atom    = integer | ident | ident "(" expr ")" | "(" expr ")" ;
///
/// `offset` is the byte offset of the node's first token and is ignored by
/// equality.
struct Expr {
  enum Kind { Num, Sym, Call, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Num;
  std::string text;  // digits for Num, name for Sym and Call
  long exponent = 0;  // Pow only
  std::vector<Expr> args;
  std::size_t offset = 0;

  static Expr num(std::string digits) { return {Num, std::move(digits), 0, {}, 0}; }
  static Expr sym(std::string name) { return {Sym, std::move(name), 0, {}, 0}; }
  static Expr call(std::string name, Expr arg) { return {Call, std::move(name), 0, {std::move(arg)}, 0}; }
  static Expr unary(Kind k, Expr x) { return {k, "", 0, {std::move(x)}, 0}; }
  static Expr binary(Kind k, Expr x, Expr y) { return {k, "", 0, {std::move(x), std::move(y)}, 0}; }
  static Expr pow(Expr base, long e) { return {Pow, "", e, {std::move(base)}, 0}; }

  friend bool operator==(const Expr& x, const Expr& y) {
    return x.kind == y.kind && x.text == y.text && x.exponent == y.exponent && x.args == y.args;
  }
  friend bool operator!=(const Expr& x, const Expr& y) { return !(x == y); }
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(pos_, pos_ >= s_.size() ? msg + " at end of input" : msg);
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      std::size_t at = (skip(), pos_);
      if (accept('+')) e = located(Expr::binary(Expr::Add, std::move(e), term()), at);
      else if (accept('-')) e = located(Expr::binary(Expr::Sub, std::move(e), term()), at);
      else return e;
    }
  }
  Expr term() {
    std::size_t at = (skip(), pos_);
    if (accept('-')) return located(Expr::unary(Expr::Neg, term()), at);
    return product();
  }
  Expr product() {
    Expr e = power();
    for (;;) {
      std::size_t at = (skip(), pos_);
      if (accept('*')) e = located(Expr::binary(Expr::Mul, std::move(e), power()), at);
      else if (accept('/')) e = located(Expr::binary(Expr::Div, std::move(e), power()), at);
      else return e;
    }
  }
  Expr power() {
    Expr base = atom();
    std::size_t at = (skip(), pos_);
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
    std::string digits = integer();
    if (digits.size() > 9) throw ParseError(at, "exponent too large");
    long e = std::stol(digits);
    return located(Expr::pow(std::move(base), neg ? -e : e), at);
  }
  Expr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("expected operand");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return located(Expr::num(integer()), at);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      if (accept('(')) {
        Expr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return located(Expr::call(std::move(name), std::move(arg)), at);
      }
      return located(Expr::sym(std::move(name)), at);
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }
  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  static Expr located(Expr e, std::size_t at) {
    e.offset = at;
    return e;
  }
};

// Binding strength used by the printer; operands print parenthesized when
// weaker than their slot requires.
inline int strength(const Expr& e) {
  switch (e.kind) {
    case Expr::Add:
    case Expr::Sub: return 1;
    case Expr::Neg: return 2;
    case Expr::Mul:
    case Expr::Div: return 3;
    case Expr::Pow: return 4;
    default: return 5;
  }
}

inline std::string print_at(const Expr& e, int need);

inline std::string print_node(const Expr& e) {
  switch (e.kind) {
    case Expr::Num:
    case Expr::Sym: return e.text;
    case Expr::Call: return e.text + "(" + print_at(e.args[0], 0) + ")";
    case Expr::Neg: return "-" + print_at(e.args[0], 2);
    case Expr::Add: return print_at(e.args[0], 1) + " + " + print_at(e.args[1], 2);
    case Expr::Sub: return print_at(e.args[0], 1) + " - " + print_at(e.args[1], 2);
    case Expr::Mul: return print_at(e.args[0], 3) + "*" + print_at(e.args[1], 4);
    case Expr::Div: return print_at(e.args[0], 3) + "/" + print_at(e.args[1], 4);
    case Expr::Pow: return print_at(e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return "";
}

inline std::string print_at(const Expr& e, int need) {
  std::string s = print_node(e);
  return strength(e) < need ? "(" + s + ")" : s;
}

}  // namespace detail

inline Expr parse(const std::string& text) { return detail::Parser(text).parse(); }

/// Canonical text with the fewest parentheses that parse back to the same tree.
inline std::string print(const Expr& e) { return detail::print_at(e, 0); }

/// Evaluation error at a position of the input.
struct EvalError : Error {
  EvalError(std::size_t offset, const std::string& msg)
      : Error("error at offset " + std::to_string(offset) + ": " + msg), offset(offset) {}
  std::size_t offset;
};

namespace detail {

// A value stays a plain scalar until a non-scalar symbol enters, so that
// division, negative powers and sqrt remain available for coefficients.
template <class T>
struct Value {
  std::optional<Scalar> scalar;
  std::optional<T> general;
};

template <class Domain>
Value<typename Domain::Type> evaluate(const Expr& e, const Domain& dom) {
  using T = typename Domain::Type;
  using V = Value<T>;
  auto lift = [&](const V& v) { return v.scalar ? dom.from_scalar(*v.scalar) : *v.general; };
  auto scalar_only = [&](const V& v, const Expr& at, const char* what) {
    if (!v.scalar) throw EvalError(at.offset, std::string(what) + " needs a scalar operand");
    return *v.scalar;
  };
  switch (e.kind) {
    case Expr::Num: return V{Scalar(GaussRat(mpq_class(mpz_class(e.text)))), std::nullopt};
    case Expr::Sym: {
      const std::string& n = e.text;
      if (n == "t") return V{Scalar::t(), std::nullopt};
      if (n == "q") return V{Scalar::q(), std::nullopt};
      if (n == "i") return V{Scalar::i(), std::nullopt};
      if (n == "rho") return V{Scalar::rho(), std::nullopt};
      if (n == "kappa") return V{Scalar::kappa(), std::nullopt};
      std::optional<T> g = dom.symbol(n);
      if (!g) throw EvalError(e.offset, "unknown symbol '" + n + "'");
      return V{std::nullopt, g};
    }
    case Expr::Call: {
      if (e.text != "sqrt") throw EvalError(e.offset, "unknown function '" + e.text + "'");
      V a = evaluate(e.args[0], dom);
      try {
        return V{Scalar::sqrt_of(scalar_only(a, e, "sqrt")), std::nullopt};
      } catch (const UnsupportedRadical& ex) {
        throw EvalError(e.offset, ex.what());
      }
    }
    case Expr::Neg: {
      V a = evaluate(e.args[0], dom);
      if (a.scalar) return V{-*a.scalar, std::nullopt};
      return V{std::nullopt, dom.scale(*a.general, Scalar(-1))};
    }
    case Expr::Add:
    case Expr::Sub: {
      V a = evaluate(e.args[0], dom), b = evaluate(e.args[1], dom);
      if (a.scalar && b.scalar) return V{e.kind == Expr::Add ? *a.scalar + *b.scalar : *a.scalar - *b.scalar, std::nullopt};
      T rhs = lift(b);
      if (e.kind == Expr::Sub) rhs = dom.scale(rhs, Scalar(-1));
      return V{std::nullopt, dom.add(lift(a), rhs)};
    }
    case Expr::Mul: {
      V a = evaluate(e.args[0], dom), b = evaluate(e.args[1], dom);
      if (a.scalar && b.scalar) return V{*a.scalar * *b.scalar, std::nullopt};
      if (a.scalar) return V{std::nullopt, dom.scale(*b.general, *a.scalar)};
      if (b.scalar) return V{std::nullopt, dom.scale(*a.general, *b.scalar)};
      return V{std::nullopt, dom.mul(*a.general, *b.general)};
    }
    case Expr::Div: {
      V a = evaluate(e.args[0], dom), b = evaluate(e.args[1], dom);
      Scalar d = scalar_only(b, e, "division");
      if (d.is_zero()) throw EvalError(e.offset, "division by zero");
      Scalar inv = d.inv();
      if (a.scalar) return V{*a.scalar * inv, std::nullopt};
      return V{std::nullopt, dom.scale(*a.general, inv)};
    }
    case Expr::Pow: {
      V a = evaluate(e.args[0], dom);
      long n = e.exponent;
      if (a.scalar) {
        if (a.scalar->is_zero() && n < 0) throw EvalError(e.offset, "division by zero");
        if (n > INT_MAX || n < -INT_MAX) throw EvalError(e.offset, "exponent out of range");
        return V{a.scalar->pow(static_cast<int>(n)), std::nullopt};
      }
      if (n < 0) {
        std::optional<T> inv = dom.inverse(*a.general);
        if (!inv) throw EvalError(e.offset, "negative power of a non-invertible element");
        a.general = inv;
        n = -n;
      }
      if (n > 4096) throw EvalError(e.offset, "exponent out of range");
      T r = dom.from_scalar(Scalar(1));
      for (long k = 0; k < n; ++k) r = dom.mul(r, *a.general);
      return V{std::nullopt, std::move(r)};
    }
  }
  throw EvalError(e.offset, "bad expression");
}

struct ElementDomain {
  using Type = Element;
  const Algebra& A;

  Element from_scalar(const Scalar& s) const { return A.scalar(s); }
  std::optional<Element> symbol(const std::string& n) const {
    Ring r = A.ring();
    if (is_plane(r)) {
      if (n == "x") return A.gen(Gen::X);
      if (n == "y") return A.gen(Gen::Y);
    } else {
      if (n == "a") return A.gen(Gen::A);
      if (n == "b") return A.gen(Gen::B);
      if (n == "c") return A.gen(Gen::C);
      if (n == "d") return A.gen(Gen::D);
      if ((n == "s" || n == "zeta") && !has_sigma(r))
        throw RingMismatch(n + " needs a ring with sigma (Bsigma or Asigma)");
      if (n == "s") return A.gen(Gen::Sigma);
      if (n == "zeta") return zeta(r);
    }
    return std::nullopt;
  }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element mul(const Element& x, const Element& y) const { return A.multiply(x, y); }
  Element scale(const Element& x, const Scalar& s) const { return x * s; }
  std::optional<Element> inverse(const Element& x) const {
    if (has_sigma(A.ring()) && x == A.gen(Gen::Sigma)) return x;
    return std::nullopt;
  }
};

struct FunctionalDomain {
  using Type = Functional;

  Functional from_scalar(const Scalar& s) const { return Functional::counit() * s; }
  std::optional<Functional> symbol(const std::string& n) const {
    if (n == "k") return Functional::k();
    if (n == "kinv") return Functional::k(-1);
    if (n == "e") return Functional::e();
    if (n == "f") return Functional::f();
    if (n == "eps") return Functional::counit();
    return std::nullopt;
  }
  Functional add(const Functional& x, const Functional& y) const { return x + y; }
  Functional mul(const Functional& x, const Functional& y) const { return x * y; }
  Functional scale(const Functional& x, const Scalar& s) const { return x * s; }
  std::optional<Functional> inverse(const Functional& x) const {
    if (x.terms().size() == 1) {
      auto& [w, c] = *x.terms().begin();
      if (w.size() == 1 && w[0].kind == Letter::K && c.is_one()) return Functional::k(-w[0].power);
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// Value of an expression in the algebra of the given ring.
inline Element evaluate(const Expr& e, Ring ring) {
  const Algebra& A = Algebra::standard(ring);
  detail::ElementDomain dom{A};
  auto v = detail::evaluate(e, dom);
  return v.scalar ? A.scalar(*v.scalar) : *v.general;
}

/// Value of an expression in the generators k, kinv, e, f of the dual algebra.
inline Functional evaluate_functional(const Expr& e) {
  detail::FunctionalDomain dom;
  auto v = detail::evaluate(e, dom);
  return v.scalar ? dom.from_scalar(*v.scalar) : *v.general;
}

/// Value of an expression that must be a scalar.
inline Scalar evaluate_scalar(const Expr& e) {
  Element x = evaluate(e, Ring::Asigma);
  if (x.is_zero()) return Scalar();
  if (x.size() != 1 || !x.terms().begin()->first.is_one()) throw EvalError(e.offset, "expected a scalar");
  return x.terms().begin()->second;
}

}  // namespace qsuper
