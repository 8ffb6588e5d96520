#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "qsuper/format.hpp"
#include "qsuper/scalar.hpp"

using namespace qsuper;

namespace {

RatFunc random_laurent(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-3, 3);
  RatFunc r;
  for (int k = 0; k < terms; ++k) {
    GaussRat c(coef(rng), coef(rng) % 2);
    r += RatFunc::monomial(c, ex(rng));
  }
  return r;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  RatFunc n = random_laurent(rng, 3);
  RatFunc d = random_laurent(rng, 2);
  if (d.is_zero()) d = RatFunc(1);
  return n / d;
}

Scalar random_scalar(std::mt19937& rng) {
  std::array<RatFunc, 4> parts;
  std::uniform_int_distribution<int> on(0, 2);
  parts[0] = random_ratfunc(rng);
  for (int m = 1; m < 4; ++m)
    if (on(rng) == 0) parts[m] = random_laurent(rng, 2);
  return Scalar::from_parts(parts);
}

}  // namespace

TEST(Scalars, ImaginaryUnitSquares) { EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1)); }

TEST(Scalars, CanonicalFormReducesCommonFactors) {
  Scalar t = Scalar::t();
  Scalar x = (Scalar(1) - t.pow(-2)) / (Scalar(1) - t.pow(-4));
  Scalar y = Scalar(1) / (Scalar(1) + t.pow(-2));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.rational().num().degree(), 0);
  EXPECT_EQ(to_string(x), "1/(1 + t^-2)");
}

TEST(Scalars, RadicalSquaring) {
  Scalar u = Scalar(1) + Scalar::t().pow(2);
  Scalar r = Scalar::sqrt_of(u);
  EXPECT_EQ(r * r, u);
  Scalar k = Scalar::kappa();
  EXPECT_EQ(k * k, Scalar(kappa_squared()));
  Scalar rho = Scalar::rho();
  EXPECT_EQ(rho * rho, Scalar(1) + Scalar::t_pow(-2));
}

TEST(Scalars, UnsupportedRadicalIsRejected) {
  Scalar u = Scalar(2) + Scalar::t();
  EXPECT_THROW(Scalar::sqrt_of(u), UnsupportedRadical);
}

TEST(Scalars, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar().inv(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
}

TEST(Scalars, QIsMinusTSquared) { EXPECT_EQ(Scalar::q(), -(Scalar::t() * Scalar::t())); }

TEST(Scalars, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  for (int n = 0; n < 60; ++n) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inv(), Scalar(1));
    }
  }
}

TEST(Scalars, ConjugationIsAnInvolutiveHomomorphism) {
  std::mt19937 rng(11);
  for (int n = 0; n < 60; ++n) {
    Scalar x = random_scalar(rng), y = random_scalar(rng);
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
  }
  EXPECT_EQ(Scalar::i().conj(), -Scalar::i());
  EXPECT_EQ(Scalar::t().conj(), Scalar::t());
}

TEST(Scalars, NumericEvaluationBranch) {
  auto v = eval_numeric(Scalar::t(), -2.0);
  EXPECT_NEAR(v.real(), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-14);
  auto w = eval_numeric(Scalar(1) + Scalar::t().pow(2), -0.5);
  EXPECT_NEAR(w.real(), 1.5, 1e-14);
  auto z = eval_numeric(Scalar::i(), -2.0);
  EXPECT_NEAR(z.imag(), 1.0, 1e-14);
  EXPECT_NEAR(z.real(), 0.0, 1e-14);
}

TEST(Scalars, NumericEvaluationIsMultiplicative) {
  std::mt19937 rng(3);
  std::complex<double> qs[] = {-2.0, -0.5, {-1.3, 0.4}};
  for (int n = 0; n < 40; ++n) {
    Scalar x = random_scalar(rng), y = random_scalar(rng);
    for (auto q : qs) {
      std::complex<double> a, b, ab;
      try {
        a = eval_numeric(x, q);
        b = eval_numeric(y, q);
        ab = eval_numeric(x * y, q);
      } catch (const PoleError&) {
        continue;
      }
      EXPECT_LE(std::abs(ab - a * b), 1e-12 * std::max(1.0, std::abs(ab)));
    }
  }
}

TEST(Scalars, PoleIsReported) {
  Scalar x = Scalar(1) / (Scalar(1) + Scalar::t());
  EXPECT_THROW(eval_numeric(x, -1.0), PoleError);
}

TEST(Scalars, ExactSquareRoots) {
  Scalar t = Scalar::t();
  Scalar r;
  ASSERT_TRUE(((Scalar(1) + t) * (Scalar(1) + t)).try_sqrt(r));
  EXPECT_EQ(r * r, (Scalar(1) + t) * (Scalar(1) + t));
  ASSERT_TRUE((Scalar(4) * (Scalar(1) + t.pow(-2))).try_sqrt(r));
  EXPECT_EQ(r, Scalar(2) * Scalar::rho());
  EXPECT_FALSE((Scalar(1) + t).try_sqrt(r));
}

TEST(Scalars, Printing) {
  Scalar t = Scalar::t();
  EXPECT_EQ(to_string(t.pow(-1) - t), "t^-1 - t");
  EXPECT_EQ(to_string(-t), "-t");
  EXPECT_EQ(to_string(Scalar::i() * Scalar(2)), "2*i");
  EXPECT_EQ(to_string(Scalar::rho()), "sqrt(1 + t^-2)");
}
