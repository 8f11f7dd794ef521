#include <gtest/gtest.h>

#include <random>

#include "esl/error.hpp"
#include "esl/polynomial.hpp"
#include "oracles.hpp"

using esl::ExponentVector;
using esl::Polynomial;
using esl::Rational;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST(Polynomial, NoZeroCoefficientsStored) {
  Polynomial p = x(2, 0) - x(2, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.term_count(), 0u);
  p.add_term(ExponentVector{1, 1}, Rational(0));
  EXPECT_TRUE(p.is_zero());
}

TEST(Polynomial, PrintsInDescendingGrlex) {
  const Polynomial p = Rational(3, 2) * x(2, 0).pow(2) * x(2, 1) - x(2, 0) +
                       Polynomial::constant(2, Rational(5));
  EXPECT_EQ(p.str(), "3/2*x1^2*x2 - x1 + 5");
  EXPECT_EQ(Polynomial(3).str(), "0");
}

TEST(PartialDerivative, PowerProduct) {
  for (unsigned m = 1; m <= 6; ++m) {
    const Polynomial f = (x(2, 0) * x(2, 1)).pow(m);
    const Polynomial expected =
        Rational(static_cast<long>(m)) * x(2, 0).pow(m - 1) * x(2, 1).pow(m);
    EXPECT_EQ(esl::partial_derivative(f, 0), expected) << "m=" << m;
  }
}

TEST(PartialDerivative, ConstantGivesZero) {
  EXPECT_TRUE(esl::partial_derivative(Polynomial::constant(3, Rational(5)), 0).is_zero());
}

TEST(PartialDerivative, MixedTerms) {
  const Polynomial p = x(2, 0).pow(2) * x(2, 1).pow(3) + Rational(2, 3) * x(2, 1);
  const Polynomial expected =
      Rational(3) * x(2, 0).pow(2) * x(2, 1).pow(2) + Polynomial::constant(2, Rational(2, 3));
  EXPECT_EQ(esl::partial_derivative(p, 1), expected);
}

TEST(PartialDerivative, AxisOutOfRange) {
  EXPECT_THROW(esl::partial_derivative(x(2, 0), 2), esl::AxisOutOfRange);
}

TEST(PartialDerivative, ProductRuleOnRandomPolynomials) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial p = oracle::random_polynomial(rng, n, 4, 4);
    const Polynomial q = oracle::random_polynomial(rng, n, 4, 4);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(esl::partial_derivative(p * q, i),
                p * esl::partial_derivative(q, i) + q * esl::partial_derivative(p, i));
    }
  }
}

TEST(Polynomial, ExponentOverflowIsAnError) {
  const Polynomial big = Polynomial::term(ExponentVector{esl::kMaxExponent}, Rational(1));
  EXPECT_THROW(big * x(1, 0), esl::ExponentOverflow);
  EXPECT_THROW(x(1, 0).pow(esl::kMaxExponent) * x(1, 0), esl::ExponentOverflow);
}

TEST(Polynomial, EvaluateExactAndFloating) {
  const Polynomial p = x(2, 0) * x(2, 1);
  const Rational pt[] = {Rational(2, 3), Rational(3)};
  EXPECT_EQ(p.evaluate(std::span<const Rational>(pt)), Rational(2));
  const double dp[] = {2.0 / 3.0, 3.0};
  EXPECT_NEAR(p.evaluate(std::span<const double>(dp)), 2.0, 1e-15);
}

TEST(Polynomial, EvaluateMatchesExactOnRandomInput) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, 3, 6, 5);
    std::vector<Rational> rp;
    std::vector<double> dp;
    for (int i = 0; i < 3; ++i) {
      rp.emplace_back(num(rng), 8);
      dp.push_back(rp.back().to_double());
    }
    const double exact = p.evaluate(std::span<const Rational>(rp)).to_double();
    EXPECT_NEAR(p.evaluate(std::span<const double>(dp)), exact, 1e-9 * (1 + std::fabs(exact)));
  }
}

TEST(Polynomial, ComposeSubstitutes) {
  // x^2 composed with (1 + x) is 1 + 2x + x^2.
  const Polynomial one = Polynomial::constant(1, Rational(1));
  const Polynomial reps[] = {one + x(1, 0)};
  EXPECT_EQ(x(1, 0).pow(2).compose(reps), one + Rational(2) * x(1, 0) + x(1, 0).pow(2));
}
