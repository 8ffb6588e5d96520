#include <gtest/gtest.h>

#include <random>

#include "qsuper/expr.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"

using namespace qsuper;

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
  static const char* names[] = {"a", "b", "c", "d", "s", "t", "q", "i", "zeta", "rho"};
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 8);
  switch (kind(rng)) {
    case 0: return Expr::num(std::to_string(std::uniform_int_distribution<int>(0, 999)(rng)));
    case 1: return Expr::sym(names[std::uniform_int_distribution<int>(0, 9)(rng)]);
    case 2: return Expr::call("sqrt", random_expr(rng, depth - 1));
    case 3: return Expr::unary(Expr::Neg, random_expr(rng, depth - 1));
    case 4: return Expr::binary(Expr::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return Expr::binary(Expr::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return Expr::binary(Expr::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::binary(Expr::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::pow(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(-3, 5)(rng));
  }
}

std::size_t error_offset(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.offset;
  }
  return std::string::npos;
}

Element eval(const std::string& s, Ring r = Ring::Asigma) { return evaluate(parse(s), r); }

}  // namespace

TEST(Expr, RoundTripOnRandomTrees) {
  std::mt19937 rng(31337);
  for (int n = 0; n < 1000; ++n) {
    Expr e = random_expr(rng, 5);
    std::string text = print(e);
    Expr back = parse(text);
    ASSERT_EQ(back, e) << text << " reprinted as " << print(back);
    ASSERT_EQ(parse(print(back)), back);
  }
}

TEST(Expr, PrintUsesFewestParentheses) {
  EXPECT_EQ(print(parse("((a*b))+(c)")), "a*b + c");
  EXPECT_EQ(print(parse("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(print(parse("(a - b) - c")), "a - b - c");
  EXPECT_EQ(print(parse("a*(-b)")), "a*(-b)");
  EXPECT_EQ(print(parse("-a*b")), "-a*b");
  EXPECT_EQ(print(parse("(-a)^2")), "(-a)^2");
  EXPECT_EQ(print(parse("a + -b")), "a + -b");
  EXPECT_EQ(print(parse("t^-2")), "t^-2");
}

TEST(Expr, Precedence) {
  // unary minus binds weaker than *, so -a*b is -(a*b)
  Expr e = parse("-a*b");
  EXPECT_EQ(e.kind, Expr::Neg);
  EXPECT_EQ(e.args[0].kind, Expr::Mul);
  // ^ binds tighter than unary minus
  EXPECT_EQ(parse("-t^2").kind, Expr::Neg);
  EXPECT_EQ(eval("-t^2"), eval("q"));
  // left associativity
  EXPECT_EQ(eval("a - b - c"), eval("a - (b + c)"));
  EXPECT_EQ(eval("12/3/2"), eval("2"));
}

TEST(Expr, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("a*("), 3u);
  EXPECT_EQ(error_offset("a b"), 2u);
  EXPECT_EQ(error_offset("a^x"), 2u);
  EXPECT_EQ(error_offset("(a + b"), 6u);
  EXPECT_EQ(error_offset("a + * b"), 4u);
  EXPECT_EQ(error_offset("a # b"), 2u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("a^2^3"), 3u);
}

TEST(Expr, Evaluation) {
  EXPECT_EQ(eval("a*d + t*b*c"), Algebra::standard(Ring::Asigma).gen(Gen::Sigma));
  EXPECT_EQ(eval("s^2"), Algebra::standard(Ring::Asigma).one());
  EXPECT_EQ(eval("s^-1"), eval("s"));
  EXPECT_EQ(eval("zeta"), zeta());
  EXPECT_EQ(eval("d*a", Ring::B), eval("a*d - (t^-1 - t)*b*c", Ring::B));
  EXPECT_EQ(evaluate_scalar(parse("sqrt(1 + t^-2)")), Scalar::rho());
  EXPECT_EQ(evaluate_scalar(parse("sqrt(1 + t^2)")), Scalar::t() * Scalar::rho());
  EXPECT_EQ(evaluate_scalar(parse("sqrt(4*t^2)")), Scalar(2) * Scalar::t());
  EXPECT_EQ(evaluate_scalar(parse("kappa^2")), evaluate_scalar(parse("(t + t^-1)/(t - t^-1)")));
}

TEST(Expr, EvaluationErrors) {
  EXPECT_THROW(eval("a/b"), EvalError);
  EXPECT_THROW(eval("a^-1"), EvalError);
  EXPECT_THROW(eval("1/(t - t)"), EvalError);
  EXPECT_THROW(eval("foo"), EvalError);
  EXPECT_THROW(eval("sqrt(a)"), EvalError);
  EXPECT_THROW(eval("sqrt(1 + t)"), EvalError);
  EXPECT_THROW(eval("s", Ring::B), RingMismatch);
  try {
    eval("a + foo");
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.offset, 4u);
  }
}

TEST(Expr, Functionals) {
  Functional phi = evaluate_functional(parse("k*e - 2*f*kinv"));
  EXPECT_EQ(phi.terms().size(), 2u);
  EXPECT_EQ(to_string(evaluate_functional(parse("k*kinv"))), to_string(Functional::counit()));
  EXPECT_THROW(evaluate_functional(parse("a")), EvalError);
}

TEST(Expr, PrintedElementsParseBack) {
  // The text form of any element is itself a valid expression for it.
  const HopfStructure& H = HopfStructure::standard(Ring::Asigma);
  std::vector<Element> xs;
  for (const Monomial& m : basis_monomials(Ring::Asigma, 3)) {
    Element x = Algebra::standard(Ring::Asigma).monomial(m);
    xs.push_back(x);
    xs.push_back(H.antipode(x));
    xs.push_back(H.star(x) * Scalar::rho());
    xs.push_back(x * Scalar::kappa() + H.antipode(x) * (Scalar(3) / Scalar(7) + Scalar::i() * Scalar::t_pow(-3)));
  }
  for (auto& x : xs) {
    std::string text = to_string(x);
    EXPECT_EQ(evaluate(parse(text), Ring::Asigma), x) << text;
  }
}
