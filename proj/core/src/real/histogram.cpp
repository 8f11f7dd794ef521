#include "esl/real/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include "esl/error.hpp"

namespace esl::real {
namespace {

Histogram from_counts(std::vector<double> edges, const std::vector<std::uint64_t>& counts,
                      std::uint64_t below, std::uint64_t above, std::uint64_t n) {
  Histogram h;
  h.edges = std::move(edges);
  h.samples = n;
  const double dn = static_cast<double>(n);
  h.masses.reserve(counts.size());
  for (auto c : counts) h.masses.push_back(static_cast<double>(c) / dn);
  h.below = static_cast<double>(below) / dn;
  h.above = static_cast<double>(above) / dn;
  return h;
}

}  // namespace

double Histogram::center(std::size_t i) const {
  return log_spaced ? std::sqrt(edges[i] * edges[i + 1]) : 0.5 * (edges[i] + edges[i + 1]);
}

Histogram Histogram::uniform(std::span<const double> values, double lo, double hi,
                             std::size_t bins) {
  if (bins == 0 || !(lo < hi)) throw DomainError("histogram: need bins > 0 and lo < hi");
  if (values.empty()) throw DomainError("histogram: no samples");
  std::vector<double> edges(bins + 1);
  const double h = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) edges[i] = lo + h * static_cast<double>(i);
  edges.back() = hi;
  std::vector<std::uint64_t> counts(bins, 0);
  std::uint64_t below = 0, above = 0;
  for (double v : values) {
    if (v < lo) {
      ++below;
    } else if (v >= hi) {
      ++above;
    } else {
      auto i = static_cast<std::size_t>((v - lo) / h);
      i = std::min(i, bins - 1);
      // Guard against rounding at the edges.
      while (i > 0 && v < edges[i]) --i;
      while (i + 1 < bins && v >= edges[i + 1]) ++i;
      ++counts[i];
    }
  }
  return from_counts(std::move(edges), counts, below, above, values.size());
}

Histogram Histogram::log_abs(std::span<const double> values, double lo, double hi,
                             std::size_t bins) {
  if (bins == 0 || !(lo > 0) || !(lo < hi))
    throw DomainError("log histogram: need bins > 0 and 0 < lo < hi");
  if (values.empty()) throw DomainError("histogram: no samples");
  std::vector<double> edges(bins + 1);
  const double llo = std::log(lo), lhi = std::log(hi);
  const double step = (lhi - llo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) edges[i] = std::exp(llo + step * static_cast<double>(i));
  edges.front() = lo;
  edges.back() = hi;
  std::vector<std::uint64_t> counts(bins, 0);
  std::uint64_t below = 0, above = 0;
  for (double v : values) {
    const double a = std::fabs(v);
    if (a < lo) {
      ++below;
    } else if (a >= hi) {
      ++above;
    } else {
      auto i = static_cast<std::size_t>((std::log(a) - llo) / step);
      i = std::min(i, bins - 1);
      while (i > 0 && a < edges[i]) --i;
      while (i + 1 < bins && a >= edges[i + 1]) ++i;
      ++counts[i];
    }
  }
  Histogram h = from_counts(std::move(edges), counts, below, above, values.size());
  h.log_spaced = true;
  return h;
}

void Histogram::write_csv(std::ostream& os) const {
  os << "bin_left,bin_right,mass\n" << std::setprecision(17);
  for (std::size_t i = 0; i < bins(); ++i)
    os << edges[i] << ',' << edges[i + 1] << ',' << masses[i] << '\n';
}

Histogram merge(const Histogram& a, const Histogram& b) {
  if (a.edges != b.edges || a.log_spaced != b.log_spaced)
    throw DimensionMismatch("merge: histograms have different bins");
  if (a.samples == 0 || b.samples == 0)
    throw DomainError("merge: both histograms must come from samples");
  const double na = static_cast<double>(a.samples), nb = static_cast<double>(b.samples);
  const double n = na + nb;
  Histogram h = a;
  h.samples = a.samples + b.samples;
  for (std::size_t i = 0; i < h.bins(); ++i) h.masses[i] = (a.masses[i] * na + b.masses[i] * nb) / n;
  h.below = (a.below * na + b.below * nb) / n;
  h.above = (a.above * na + b.above * nb) / n;
  return h;
}

std::pair<double, double> abs_quantile_window(std::span<const double> values, double q_lo,
                                              double q_hi) {
  if (values.empty()) throw DomainError("quantile of an empty sample");
  if (!(0 <= q_lo && q_lo < q_hi && q_hi <= 1)) throw DomainError("bad quantile levels");
  std::vector<double> a(values.size());
  std::transform(values.begin(), values.end(), a.begin(), [](double v) { return std::fabs(v); });
  auto at = [&](double q) {
    auto idx = static_cast<std::size_t>(q * static_cast<double>(a.size() - 1));
    std::nth_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(idx), a.end());
    return a[idx];
  };
  const double lo = at(q_lo);
  const double hi = at(q_hi);
  return {lo, hi};
}

}  // namespace esl::real
