#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>

#include "esl/error.hpp"
#include "esl/real/histogram.hpp"
#include "esl/real/sampling.hpp"

using esl::PolyMap;
using esl::Polynomial;
using esl::Rational;
using namespace esl::real;

namespace {

SampleConfig config(std::uint64_t count, std::uint64_t seed, std::size_t n, Rational lo = -1,
                    Rational hi = 1) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.box.assign(n, {lo, hi});
  return cfg;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST(Sampling, ReproducibleForFixedSeed) {
  const PolyMap map({Polynomial::variable(1, 0).pow(2)});
  const auto a = sample_pushforward(map, config(100000, 7, 1));
  const auto b = sample_pushforward(map, config(100000, 7, 1));
  EXPECT_EQ(a, b);
  const auto c = sample_pushforward(map, config(100000, 8, 1));
  EXPECT_NE(a, c);
}

TEST(Sampling, IndependentOfWorkerCount) {
  const PolyMap map({Polynomial::variable(2, 0) * Polynomial::variable(2, 1)});
  auto cfg = config(3 * kShardSize + 123, 99, 2);
  const auto one = sample_pushforward(map, cfg);
  cfg.workers = 3;
  EXPECT_EQ(sample_pushforward(map, cfg), one);
}

TEST(Sampling, UniformBoxMoments) {
  const auto v = sample_pushforward(PolyMap::identity(1), config(400000, 1, 1, 2, 5));
  EXPECT_NEAR(mean(v), 3.5, 4 * 3 / std::sqrt(12.0 * 400000));
  for (double x : v) {
    EXPECT_GE(x, 2.0);
    EXPECT_LT(x, 5.0);
  }
}

TEST(Sampling, WeightedDensityMoments) {
  // On [0,1] the weight |x|^b normalizes to (b+1) x^b with mean (b+1)/(b+2).
  for (std::uint32_t b : {1u, 2u, 5u}) {
    auto cfg = config(400000, 3, 1, 0, 1);
    cfg.density_weights = std::vector<std::uint32_t>{b};
    const auto v = sample_pushforward(PolyMap::identity(1), cfg);
    const double expected = (b + 1.0) / (b + 2.0);
    EXPECT_NEAR(mean(v), expected, 0.003) << "b=" << b;
  }
}

TEST(Sampling, WeightedDensityOnSymmetricBox) {
  auto cfg = config(200000, 4, 1);
  cfg.density_weights = std::vector<std::uint32_t>{2};
  const auto v = sample_pushforward(PolyMap::identity(1), cfg);
  const auto h = Histogram::uniform(v, -1, 1, 20);
  const SourceSampler s(cfg, 1);
  for (std::size_t i = 0; i < h.bins(); ++i) {
    // Exact bin mass of (3/2) x^2.
    const double lo = h.edges[i], hi = h.edges[i + 1];
    const double exact = 0.5 * (hi * hi * hi - lo * lo * lo);
    EXPECT_NEAR(h.masses[i], exact, 5 * std::sqrt(exact / 200000) + 1e-4);
    const double mid[] = {h.center(i)};
    EXPECT_NEAR(s.density(mid), 1.5 * mid[0] * mid[0], 1e-12);
  }
}

TEST(SourceSampler, DensityIntegratesToOne) {
  auto cfg = config(1, 0, 2, -1, 2);
  cfg.density_weights = std::vector<std::uint32_t>{1, 3};
  const SourceSampler s(cfg, 2);
  const int steps = 600;
  double total = 0;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const double x[] = {-1 + 3 * (i + 0.5) / steps, -1 + 3 * (j + 0.5) / steps};
      total += s.density(x);
    }
  }
  EXPECT_NEAR(total * 9.0 / (steps * steps), 1.0, 1e-4);
  const double outside[] = {3.0, 0.0};
  EXPECT_EQ(s.density(outside), 0.0);
}

TEST(SourceSampler, RejectsBadBoxes) {
  EXPECT_THROW(SourceSampler(config(1, 0, 1, 1, 1), 1), esl::DomainError);
  EXPECT_THROW(SourceSampler(config(1, 0, 1, 2, 1), 1), esl::DomainError);
  EXPECT_THROW(SourceSampler(config(1, 0, 2), 1), esl::DimensionMismatch);
}

TEST(ForEachShard, CoversEveryIndexOnce) {
  const std::uint64_t total = 5 * kShardSize + 17;
  std::vector<std::atomic<int>> hits(total);
  std::mutex mu;
  std::vector<std::uint64_t> shards;
  for_each_shard(total, 4, [&](std::uint64_t shard, std::uint64_t first, std::uint64_t count) {
    for (std::uint64_t i = first; i < first + count; ++i) hits[i]++;
    std::lock_guard<std::mutex> lock(mu);
    shards.push_back(shard);
  });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  std::sort(shards.begin(), shards.end());
  EXPECT_EQ(shards, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5}));
}

TEST(Histogram, UniformAndMerge) {
  const std::vector<double> a{0.05, 0.15, 0.15, 2.0}, b{-1.0, 0.95};
  const auto ha = Histogram::uniform(a, 0, 1, 10), hb = Histogram::uniform(b, 0, 1, 10);
  EXPECT_DOUBLE_EQ(ha.masses[1], 0.5);
  EXPECT_DOUBLE_EQ(ha.above, 0.25);
  const auto m = merge(ha, hb);
  EXPECT_EQ(m.samples, 6u);
  EXPECT_DOUBLE_EQ(m.masses[1], 2.0 / 6);
  EXPECT_DOUBLE_EQ(m.below, 1.0 / 6);
  EXPECT_DOUBLE_EQ(m.above, 1.0 / 6);
  EXPECT_DOUBLE_EQ(m.masses[9], 1.0 / 6);
}

TEST(Histogram, LogAbsBinsAndCsv) {
  const std::vector<double> v{-0.002, 0.02, 0.2, 5.0, 0.0005};
  const auto h = Histogram::log_abs(v, 0.001, 1.0, 3);
  EXPECT_TRUE(h.log_spaced);
  EXPECT_NEAR(h.edges[1], 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(h.masses[0], 0.2);
  EXPECT_DOUBLE_EQ(h.masses[1], 0.2);
  EXPECT_DOUBLE_EQ(h.masses[2], 0.2);
  EXPECT_NEAR(h.center(1), std::sqrt(0.01 * 0.1), 1e-15);
  std::ostringstream os;
  h.write_csv(os);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "bin_left,bin_right,mass");
  EXPECT_THROW(Histogram::log_abs(v, 0.0, 1.0, 3), esl::DomainError);
}

TEST(Histogram, QuantileWindow) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i % 2 ? -1.0 : 1.0) * (i + 1);
  const auto [lo, hi] = abs_quantile_window(v, 0.01, 0.5);
  EXPECT_NEAR(lo, 10, 1.0);
  EXPECT_NEAR(hi, 500, 1.0);
}
