#pragma once

#include <cstddef>

#include "esl/real/histogram.hpp"

namespace esl::real {

/// Largest FFT length convolution_power will allocate.
inline constexpr std::size_t kMaxFftLength = std::size_t{1} << 24;

/// k-fold self-convolution of a histogram on a uniform grid [lo, hi] with bin
/// width h. The result has k(B-1)+1 bins of width h centred at
/// k*lo + (s + k/2) h. Only in-range mass takes part; out-of-range mass of
/// the input is dropped. Throws DomainError for non-uniform grids, k = 0,
/// a zero-padded length above kMaxFftLength, or mass drift above 1e-9.
Histogram convolution_power(const Histogram& h, unsigned k);

/// Largest bin density of a histogram.
double sup_density(const Histogram& h);

}  // namespace esl::real
