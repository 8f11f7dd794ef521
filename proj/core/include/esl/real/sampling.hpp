#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "esl/poly_map.hpp"
#include "esl/rational.hpp"

namespace esl::real {

struct Interval {
  Rational lo;
  Rational hi;
};

/// Source measure: uniform on a box, optionally weighted by prod |x_i|^{b_i}.
struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::vector<Interval> box;
  std::optional<std::vector<std::uint32_t>> density_weights;
  unsigned workers = 1;
};

/// Samples per shard. Shard s draws from a generator seeded with seed + s,
/// so the stream does not depend on the worker count.
inline constexpr std::uint64_t kShardSize = std::uint64_t{1} << 16;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampler for the normalized source measure.
class SourceSampler {
 public:
  /// Throws DomainError when the box is degenerate or has the wrong length.
  SourceSampler(const SampleConfig& cfg, std::size_t n);

  std::size_t dimension() const { return axes_.size(); }

  /// Maps u in [0,1)^n to a point of the box.
  void transform(std::span<const double> u, std::span<double> x) const;

  /// Normalized source density at x (zero outside the box).
  double density(std::span<const double> x) const;

  double lo(std::size_t i) const { return axes_[i].lo; }
  double hi(std::size_t i) const { return axes_[i].hi; }

 private:
  struct Axis {
    double lo, hi;
    double b;
    double g_lo, g_hi;
  };
  std::vector<Axis> axes_;
};

/// Draws cfg.count points and returns map(x) for each. Requires m = 1.
std::vector<double> sample_pushforward(const PolyMap& map, const SampleConfig& cfg);

/// Runs body(shard_index, first, count) for every shard, spread over workers.
void for_each_shard(std::uint64_t total, unsigned workers,
                    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace esl::real
