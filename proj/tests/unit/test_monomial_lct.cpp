#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "esl/error.hpp"
#include "esl/lct.hpp"
#include "esl/monomial_ideal.hpp"
#include "oracles.hpp"

using esl::ExponentValue;
using esl::ExponentVector;
using esl::FieldValidity;
using esl::MonomialIdeal;
using esl::Rational;

namespace {

ExponentValue lct(std::size_t n, std::vector<ExponentVector> gens) {
  return esl::lct_monomial(MonomialIdeal(n, std::move(gens))).value;
}

std::vector<ExponentVector> random_generators(std::mt19937_64& rng, std::size_t n,
                                              std::size_t count) {
  std::vector<ExponentVector> gens;
  while (gens.size() < count) {
    auto e = oracle::random_exponent(rng, n, 5);
    if (!e.is_zero()) gens.push_back(e);
  }
  return gens;
}

}  // namespace

TEST(MonomialIdeal, KeepsMinimalGenerators) {
  const MonomialIdeal ideal(2, {{2, 1}, {1, 1}, {1, 1}, {0, 3}});
  EXPECT_EQ(ideal.generators(), (std::vector<ExponentVector>{{1, 1}, {0, 3}}));
  EXPECT_THROW(MonomialIdeal(2, {}), esl::DomainError);
}

TEST(AsMonomialIdeal, RejectsMultiTermGenerator) {
  const auto x = esl::Polynomial::variable(2, 0);
  const auto y = esl::Polynomial::variable(2, 1);
  try {
    esl::as_monomial_ideal({x * y, x + y});
    FAIL() << "expected NotMonomial";
  } catch (const esl::NotMonomial& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(LctMonomial, GradientOfSquareProduct) {
  for (std::uint32_t m = 2; m <= 8; ++m)
    EXPECT_EQ(lct(2, {{m - 1, m}, {m, m - 1}}), ExponentValue(Rational(2, 2 * m - 1))) << m;
}

TEST(LctMonomial, CoordinateIdeal) { EXPECT_EQ(lct(2, {{1, 0}, {0, 1}}), ExponentValue(2)); }

TEST(LctMonomial, UnitIdealIsInfinite) {
  const auto r = esl::lct_monomial(MonomialIdeal(2, {{0, 0}}));
  EXPECT_TRUE(r.value.is_infinite());
  EXPECT_EQ(esl::newton_threshold(MonomialIdeal(2, {{0, 0}, {1, 1}})), Rational(0));
}

TEST(LctMonomial, TaggedForAllFields) {
  EXPECT_EQ(esl::lct_monomial(MonomialIdeal(1, {{3}})).validity, FieldValidity::AllLocalFields);
}

TEST(LctMonomial, HowaldFamilyGradient) {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (std::uint32_t m = 2; m <= 6; ++m) {
      std::vector<ExponentVector> gens;
      for (std::uint32_t i = 0; i < n; ++i) {
        ExponentVector e(std::vector<std::uint32_t>(n, m));
        e[i] = m - 1;
        gens.push_back(e);
      }
      EXPECT_EQ(lct(n, gens), ExponentValue(Rational(n, n * m - 1)));
    }
  }
}

TEST(LctPrincipalMonomial, Examples) {
  for (std::uint32_t d = 1; d <= 7; ++d)
    EXPECT_EQ(esl::lct_principal_monomial(ExponentVector{d}).value, ExponentValue(Rational(1, d)));
  EXPECT_EQ(esl::lct_principal_monomial(ExponentVector{4, 4, 4}).value,
            ExponentValue(Rational(1, 4)));
  EXPECT_EQ(esl::lct_principal_monomial(ExponentVector{0, 3}).value,
            ExponentValue(Rational(1, 3)));
  EXPECT_THROW(esl::lct_principal_monomial(ExponentVector{0, 0}), esl::DomainError);
}

TEST(LctFromResolution, Examples) {
  for (std::uint32_t d = 1; d <= 6; ++d)
    EXPECT_EQ(esl::lct_from_resolution({{{d, 0, true}}}).value, ExponentValue(Rational(1, d)));
  EXPECT_EQ(esl::lct_from_resolution({{{3, 1, true}, {5, 0, true}}}).value,
            ExponentValue(Rational(1, 5)));
  EXPECT_EQ(esl::lct_from_resolution({{{3, 1, true}, {5, 0, false}}}).value,
            ExponentValue(Rational(2, 3)));
  EXPECT_THROW(esl::lct_from_resolution({{{2, 0, false}}}), esl::DomainError);
  EXPECT_THROW(esl::lct_from_resolution({{{0, 0, true}}}), esl::DomainError);
}

TEST(LctDiagonalSum, Examples) {
  EXPECT_EQ(esl::lct_diagonal_sum({2, 2}).value, ExponentValue(1));
  EXPECT_EQ(esl::lct_diagonal_sum({5}).value, ExponentValue(Rational(1, 5)));
  EXPECT_EQ(esl::lct_diagonal_sum({3, 3, 3}).value, ExponentValue(1));
  EXPECT_EQ(esl::lct_diagonal_sum({3, 4}).value, ExponentValue(Rational(7, 12)));
  EXPECT_EQ(esl::lct_diagonal_sum({2, 2}).validity, FieldValidity::ComplexOnly);
  EXPECT_THROW(esl::lct_diagonal_sum({}), esl::DomainError);
  EXPECT_THROW(esl::lct_diagonal_sum({2, 0}), esl::DomainError);
}

TEST(LctLowerIsPositive, Examples) {
  EXPECT_TRUE(esl::lct_lower_is_positive_check(MonomialIdeal(2, {{1, 0}, {0, 1}})));
  EXPECT_TRUE(esl::lct_lower_is_positive_check(MonomialIdeal(2, {{5, 0}})));
  EXPECT_TRUE(esl::lct_lower_is_positive_check(MonomialIdeal(2, {{0, 0}})));
}

TEST(LctMonomialProperty, ScalingDividesByFactor) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto gens = random_generators(rng, n, 1 + trial % 5);
    const ExponentValue base = lct(n, gens);
    for (std::uint32_t c : {2u, 3u, 7u}) {
      auto scaled = gens;
      for (auto& g : scaled)
        for (auto& v : g.entries) v *= c;
      EXPECT_EQ(lct(n, scaled), ExponentValue(base.finite() / Rational(c)));
    }
  }
}

TEST(LctMonomialProperty, AddingGeneratorNeverDecreases) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto gens = random_generators(rng, n, 1 + trial % 4);
    const ExponentValue before = lct(n, gens);
    gens.push_back(oracle::random_exponent(rng, n, 5));
    EXPECT_GE(lct(n, gens), before);
  }
}

TEST(LctMonomialProperty, PermutationInvariant) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto gens = random_generators(rng, n, 1 + trial % 5);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto permuted = gens;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) permuted[j][perm[i]] = gens[j][i];
    EXPECT_EQ(lct(n, gens), lct(n, permuted));
  }
}

TEST(LctMonomialProperty, SingleGeneratorMatchesPrincipal) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto g = random_generators(rng, n, 1)[0];
    EXPECT_EQ(lct(n, {g}), esl::lct_principal_monomial(g).value);
  }
}

TEST(LctMonomialProperty, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto gens = random_generators(rng, n, 1 + trial % 6);
    const MonomialIdeal ideal(n, gens);
    EXPECT_EQ(esl::newton_threshold(ideal), oracle::newton_threshold_by_vertices(gens, n))
        << ideal.str();
  }
}
