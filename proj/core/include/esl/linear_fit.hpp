#pragma once

#include <cstddef>
#include <span>

namespace esl {

/// Weighted least-squares line y = intercept + slope * x.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double slope_stderr = 0.0;
  /// Weighted residual sum of squares.
  double rss = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Unit weights when `weights` is empty. Needs at least two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> weights = {});

}  // namespace esl
