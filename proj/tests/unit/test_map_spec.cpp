#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "esl_cli/map_spec.hpp"
#include "oracles.hpp"

using esl::Polynomial;
using esl::Rational;
using namespace esl::cli;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST(MapSpec, ParsesBasicSpec) {
  const auto s = parse_map_spec("map{n=2,m=2} f1=x1^2 f2=x1^2*x2");
  EXPECT_EQ(s.n, 2u);
  EXPECT_EQ(s.m, 2u);
  EXPECT_EQ(s.components[0], x(2, 0).pow(2));
  EXPECT_EQ(s.components[1], x(2, 0).pow(2) * x(2, 1));
  EXPECT_FALSE(s.point.has_value());
  EXPECT_EQ(s.base_point(), (std::vector<Rational>{0, 0}));
}

TEST(MapSpec, ExpressionsAndPoint) {
  const auto s = parse_map_spec(
      "map{n=2,m=1}\n# a comment\nf1 = 3/2*x1*(x2 - 1) - -x2^3 + 4  # trailing\nat (1/2, -3)\n");
  const Polynomial one = Polynomial::constant(2, 1);
  EXPECT_EQ(s.components[0], Rational(3, 2) * x(2, 0) * (x(2, 1) - one) + x(2, 1).pow(3) +
                                 Polynomial::constant(2, 4));
  ASSERT_TRUE(s.point.has_value());
  EXPECT_EQ(*s.point, (std::vector<Rational>{Rational(1, 2), Rational(-3)}));
}

TEST(MapSpec, ComponentsInAnyOrder) {
  const auto s = parse_map_spec("map{n=1,m=2} f2=x1 f1=x1^3");
  EXPECT_EQ(s.components[0], x(1, 0).pow(3));
  EXPECT_EQ(s.components[1], x(1, 0));
}

TEST(MapSpec, NegativeExponentRejected) {
  try {
    parse_map_spec("map{n=1,m=1} f1=x1^-2");
    FAIL();
  } catch (const NegativeExponent& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("NegativeExponent"), std::string::npos);
  }
}

TEST(MapSpec, UnknownVariableRejected) {
  EXPECT_THROW(parse_map_spec("map{n=2,m=1} f1=x3"), UnknownVariable);
  EXPECT_THROW(parse_map_spec("map{n=2,m=1} f1=x0"), UnknownVariable);
}

TEST(MapSpec, StructuralErrors) {
  for (const char* bad :
       {"map{n=1,m=1}", "map{n=1,m=2} f1=x1", "map{n=1,m=1} f1=x1 f1=x1", "map{n=1,m=1} f2=x1",
        "map{n=1,m=1} f1=x1 +", "map{n=1,m=1} f1=(x1", "map{n=1,m=1} f1=x1/0",
        "map{n=1,m=1} f1=x1 at (1,2)", "map{n=1,m=1} f1=x1 junk", "map{n=0,m=1} f1=1",
        "map{n=1,m=1} f1=(x1+1)^2"}) {
    EXPECT_THROW(parse_map_spec(bad), SpecError) << bad;
  }
}

TEST(MapSpec, ErrorPositions) {
  try {
    parse_map_spec("map{n=1,m=1}\nf1 = x1 * $");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 11u);
  }
}

TEST(MapSpec, PrintParseRoundTrip) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    MapSpec s;
    s.n = 1 + trial % 3;
    s.m = 1 + trial % 2;
    for (std::size_t j = 0; j < s.m; ++j)
      s.components.push_back(oracle::random_polynomial(rng, s.n, 1 + trial % 5, 4));
    if (trial % 2) {
      s.point = std::vector<Rational>();
      for (std::size_t i = 0; i < s.n; ++i) s.point->emplace_back(trial - 25, 1 + i);
    }
    const auto back = parse_map_spec(print_map_spec(s));
    EXPECT_EQ(back.components, s.components) << print_map_spec(s);
    EXPECT_EQ(back.point, s.point);
  }
}

TEST(MapSpec, LoadsFromFileOrInline) {
  const std::string path = ::testing::TempDir() + "/spec_test.map";
  {
    std::ofstream out(path);
    out << "map{n=1,m=1}\nf1 = x1^2\n";
  }
  EXPECT_EQ(load_map_spec(path).components[0], x(1, 0).pow(2));
  EXPECT_EQ(load_map_spec("map{n=1,m=1} f1=x1^3").components[0], x(1, 0).pow(3));
  std::remove(path.c_str());
}
