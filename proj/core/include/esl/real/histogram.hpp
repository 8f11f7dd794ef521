#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace esl::real {

/// Binned probability masses. masses[i] covers [edges[i], edges[i+1]).
struct Histogram {
  std::vector<double> edges;
  std::vector<double> masses;
  double total = 1.0;
  /// Mass that fell below edges.front() / at or above edges.back().
  double below = 0.0;
  double above = 0.0;
  /// Number of samples behind the masses (0 for derived histograms).
  std::uint64_t samples = 0;
  /// Bins are over |y| with log-spaced edges.
  bool log_spaced = false;

  std::size_t bins() const { return masses.size(); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
  /// Geometric midpoint for log-spaced bins, arithmetic otherwise.
  double center(std::size_t i) const;
  double density(std::size_t i) const { return masses[i] / width(i); }
  double count(std::size_t i) const { return masses[i] * static_cast<double>(samples); }

  /// Uniform bins on [lo, hi] over the signed values.
  static Histogram uniform(std::span<const double> values, double lo, double hi,
                           std::size_t bins);
  /// Log-spaced bins on [lo, hi] over |values|; requires 0 < lo < hi.
  static Histogram log_abs(std::span<const double> values, double lo, double hi,
                           std::size_t bins);

  /// CSV with columns bin_left, bin_right, mass.
  void write_csv(std::ostream& os) const;
};

/// Combines histograms of disjoint sample sets over the same edges.
Histogram merge(const Histogram& a, const Histogram& b);

/// [q_lo, q_hi] quantiles of |values|.
std::pair<double, double> abs_quantile_window(std::span<const double> values,
                                              double q_lo = 0.001, double q_hi = 0.05);

}  // namespace esl::real
