#include <gtest/gtest.h>

#include "qsuper/qfun.hpp"

using namespace qsuper;

namespace {
Scalar t() { return Scalar::t(); }
// A second commuting symbol for the base: v = t^3 keeps checks independent of t^-2.
Scalar v() { return Scalar::t_pow(3); }
}  // namespace

TEST(QFun, Pochhammer) {
  EXPECT_EQ(pochhammer(v(), v(), 0), Scalar(1));
  Scalar u = t().pow(-2);
  EXPECT_EQ(pochhammer(u, u, 2), (Scalar(1) - u) * (Scalar(1) - u * u));
  QPolynomial p = pochhammer_z(Scalar(1), t().pow(2), 1);
  EXPECT_EQ(p, QPolynomial(Scalar(1)) - QPolynomial::z_power(1));
}

TEST(QFun, GaussBinomial) {
  EXPECT_EQ(gauss_binomial(5, 0, v()), Scalar(1));
  EXPECT_EQ(gauss_binomial(2, 1, v()), Scalar(1) + v());
  EXPECT_EQ(gauss_binomial(3, 2, v()), Scalar(1) + v() + v() * v());
  EXPECT_EQ(gauss_binomial(3, 4, v()), Scalar());
  EXPECT_EQ(gauss_binomial(3, -1, v()), Scalar());
}

TEST(QFun, PascalAndSymmetry) {
  EXPECT_TRUE(pascal_check(10, v()).ok());
  EXPECT_TRUE(pascal_check(10, t().pow(-2)).ok());
}

TEST(QFun, LittleJacobi) {
  EXPECT_EQ(little_jacobi(0, 0, 0, v()), QPolynomial(Scalar(1)));
  EXPECT_EQ(little_jacobi(1, 0, 0, v()),
            QPolynomial(Scalar(1)) - QPolynomial::z_power(1, Scalar(1) + v()));
  Scalar c = (Scalar(1) - v().pow(3)) / (Scalar(1) - v().pow(2));
  EXPECT_EQ(little_jacobi(1, 1, 0, v()), QPolynomial(Scalar(1)) - QPolynomial::z_power(1, c));
  EXPECT_EQ(little_jacobi(4, 1, 2, v()).degree(), 4);
}

TEST(QFun, SquareRootCancellationIdentity) {
  // binom(2l, l+i) binom(l+i, i-j) binom(l-j, i-j) / binom(2l, l+j) = binom(l-j, i-j)^2
  // in integer indices L = l, I = l + i, J = l + j, so l - j = 2l - J.
  Scalar b = t().pow(-2);
  for (int twoL = 0; twoL <= 6; ++twoL)
    for (int I = 0; I <= twoL; ++I)
      for (int J = 0; J <= I; ++J) {
        int i_minus_j = I - J;
        Scalar lhs = gauss_binomial(twoL, I, b) * gauss_binomial(I, i_minus_j, b) *
                     gauss_binomial(twoL - J, i_minus_j, b) / gauss_binomial(twoL, J, b);
        Scalar r = gauss_binomial(twoL - J, i_minus_j, b);
        EXPECT_EQ(lhs, r * r) << twoL << " " << I << " " << J;
      }
}

TEST(QFun, QBinomialTheorem) {
  for (int m = 1; m <= 6; ++m) {
    Report r = qbinomial_theorem_check(m);
    EXPECT_TRUE(r.ok()) << m << ": " << (r.failures.empty() ? "" : r.failures[0].input);
  }
}
