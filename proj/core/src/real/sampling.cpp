#include "esl/real/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "esl/error.hpp"

namespace esl::real {
namespace {

// Antiderivative of |x|^b that is odd in x.
double g_of(double x, double b) {
  return std::copysign(std::pow(std::fabs(x), b + 1) / (b + 1), x);
}

double g_inverse(double v, double b) {
  return std::copysign(std::pow(std::fabs(v) * (b + 1), 1.0 / (b + 1)), v);
}

}  // namespace

SourceSampler::SourceSampler(const SampleConfig& cfg, std::size_t n) {
  if (cfg.box.size() != n)
    throw DimensionMismatch("sample box has " + std::to_string(cfg.box.size()) +
                            " intervals, map has " + std::to_string(n) + " variables");
  if (cfg.density_weights && cfg.density_weights->size() != n)
    throw DimensionMismatch("density weights must have one entry per variable");
  if (cfg.count < 1) throw DomainError("sample count must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    Axis a;
    a.lo = cfg.box[i].lo.to_double();
    a.hi = cfg.box[i].hi.to_double();
    if (!(cfg.box[i].lo < cfg.box[i].hi)) throw DomainError("zero-mass box: empty interval");
    a.b = cfg.density_weights ? static_cast<double>((*cfg.density_weights)[i]) : 0.0;
    a.g_lo = g_of(a.lo, a.b);
    a.g_hi = g_of(a.hi, a.b);
    if (!(a.g_hi > a.g_lo)) throw DomainError("zero-mass box");
    axes_.push_back(a);
  }
}

void SourceSampler::transform(std::span<const double> u, std::span<double> x) const {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const Axis& a = axes_[i];
    if (a.b == 0.0) {
      x[i] = a.lo + u[i] * (a.hi - a.lo);
    } else {
      x[i] = std::clamp(g_inverse(a.g_lo + u[i] * (a.g_hi - a.g_lo), a.b), a.lo, a.hi);
    }
  }
}

double SourceSampler::density(std::span<const double> x) const {
  double d = 1.0;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const Axis& a = axes_[i];
    if (x[i] < a.lo || x[i] > a.hi) return 0.0;
    d *= std::pow(std::fabs(x[i]), a.b) / (a.g_hi - a.g_lo);
  }
  return d;
}

void for_each_shard(std::uint64_t total, unsigned workers,
                    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t shards = (total + kShardSize - 1) / kShardSize;
  auto run = [&](unsigned w, unsigned stride) {
    for (std::uint64_t s = w; s < shards; s += stride) {
      const std::uint64_t first = s * kShardSize;
      body(s, first, std::min(kShardSize, total - first));
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(shards, 1))));
  if (workers == 1) {
    run(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  for (auto& t : pool) t.join();
}

std::vector<double> sample_pushforward(const PolyMap& map, const SampleConfig& cfg) {
  if (map.target_dimension() != 1)
    throw DimensionMismatch("sample_pushforward needs a map with one component");
  const std::size_t n = map.source_dimension();
  const SourceSampler sampler(cfg, n);
  const Polynomial& f = map.component(0);
  std::vector<double> out(cfg.count);
  for_each_shard(cfg.count, cfg.workers,
                 [&](std::uint64_t shard, std::uint64_t first, std::uint64_t count) {
                   std::mt19937_64 rng(cfg.seed + shard);
                   std::vector<double> u(n), x(n);
                   for (std::uint64_t i = 0; i < count; ++i) {
                     for (auto& ui : u) ui = unit_uniform(rng);
                     sampler.transform(u, x);
                     out[first + i] = f.evaluate(std::span<const double>(x));
                   }
                 });
  return out;
}

}  // namespace esl::real
