#include "esl/linear_fit.hpp"

#include <algorithm>
#include <cmath>

#include "esl/error.hpp"

namespace esl {

LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> weights) {
  if (x.size() != y.size() || (!weights.empty() && weights.size() != x.size()))
    throw DimensionMismatch("fit_line: inputs of different length");
  if (x.size() < 2) throw FitError("fit_line: need at least two points");

  auto w = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w(i);
    sx += w(i) * x[i];
    sy += w(i) * y[i];
  }
  if (sw <= 0) throw FitError("fit_line: weights sum to zero");
  const double mx = sx / sw;
  const double my = sy / sw;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += w(i) * dx * dx;
    sxy += w(i) * dx * dy;
    syy += w(i) * dy * dy;
  }
  if (sxx <= 0) throw FitError("fit_line: x values are all equal");

  LineFit fit;
  fit.points = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    fit.rss += w(i) * r * r;
  }
  fit.r2 = syy > 0 ? std::clamp(1.0 - fit.rss / syy, 0.0, 1.0) : 1.0;
  if (x.size() > 2) {
    // Residual-scaled standard error; weights only need to be relative.
    const double sigma2 = fit.rss / static_cast<double>(x.size() - 2);
    fit.slope_stderr = std::sqrt(sigma2 / sxx);
  }
  return fit;
}

}  // namespace esl
