#include <gtest/gtest.h>

#include "esl/error.hpp"
#include "esl/padic/padic_fit.hpp"

using esl::PolyMap;
using esl::Polynomial;
using esl::Rational;
using namespace esl::padic;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

PAdicConfig cfg(std::uint64_t p, unsigned k_max) { return {p, k_max, kDefaultCellBudget, 1}; }

const std::int64_t kZero[] = {0};

}  // namespace

TEST(PadicLctFit, PowersOfOneVariable) {
  // The fit window needs several mass drops, so deeper d needs a deeper k_max.
  for (unsigned d = 2; d <= 6; ++d) {
    const auto f = fit_padic_lct(x(1, 0).pow(d), cfg(3, d <= 4 ? 12 : 6 * d));
    EXPECT_NEAR(f.lct_hat, 1.0 / d, 0.02) << d;
    EXPECT_EQ(f.log_power, 0u);
    EXPECT_TRUE(f.separable);
    EXPECT_FALSE(f.at_least_one);
  }
}

TEST(PadicLctFit, ProductHasLogTerm) {
  const auto f = fit_padic_lct(x(2, 0) * x(2, 1), cfg(3, 12));
  EXPECT_NEAR(f.lct_hat, 1.0, 0.05);
  EXPECT_EQ(f.log_power, 1u);
}

TEST(PadicLctFit, SmoothFunction) {
  const auto f = fit_padic_lct(x(2, 0) + x(2, 1).pow(2), cfg(3, 6));
  EXPECT_TRUE(f.at_least_one);
}

TEST(PadicLctFit, DiagonalSums) {
  EXPECT_NEAR(fit_padic_lct(x(2, 0).pow(3) + x(2, 1).pow(3), cfg(5, 12)).lct_hat, 2.0 / 3, 0.05);
  EXPECT_NEAR(fit_padic_lct(x(2, 0).pow(4) + x(2, 1).pow(4), cfg(5, 12)).lct_hat, 0.5, 0.05);
}

TEST(PadicLctFit, MassesAreExact) {
  const auto f = fit_padic_lct(x(1, 0).pow(2), cfg(3, 6));
  ASSERT_GE(f.masses.size(), 7u);
  for (unsigned k = 0; k <= 6; ++k)
    EXPECT_EQ(f.masses[k], esl::power(Rational(3), -static_cast<long>((k + 1) / 2)));
  EXPECT_THROW(fit_padic_lct(x(1, 0), cfg(3, 1)), esl::DomainError);
}

TEST(PadicEps, ProductMapExplodesLogarithmically) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto e = estimate_eps_padic(PolyMap({x(2, 0) * x(2, 1)}), cfg(p, 4), kZero);
    EXPECT_EQ(e.kind, PadicEpsKind::Infinite) << p;
    EXPECT_TRUE(e.log_explosion) << p;
  }
}

TEST(PadicEps, SquareMapIsFinite) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto e = estimate_eps_padic(PolyMap({x(1, 0).pow(2)}), cfg(p, 8), kZero);
    EXPECT_EQ(e.kind, PadicEpsKind::Finite) << p;
    EXPECT_NEAR(e.eps_hat, 1.0, 0.15) << p;
  }
}

TEST(PadicEps, IdentityIsInfiniteWithoutExplosion) {
  const auto e = estimate_eps_padic(PolyMap::identity(1), cfg(3, 5), kZero);
  EXPECT_EQ(e.kind, PadicEpsKind::Infinite);
  EXPECT_FALSE(e.log_explosion);
  EXPECT_STREQ(to_string(PadicEpsKind::Ambiguous), "ambiguous");
}

TEST(PadicEps, NeedsScalarTarget) {
  EXPECT_THROW(estimate_eps_padic(PolyMap::identity(2), cfg(3, 3), kZero),
               esl::DimensionMismatch);
}
