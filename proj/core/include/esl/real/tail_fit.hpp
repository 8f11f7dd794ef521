#pragma once

#include <cstddef>
#include <span>

#include "esl/exponent_value.hpp"
#include "esl/real/histogram.hpp"

namespace esl::real {

/// Fit of g(y) ~ C |y|^(lambda-1) log(1/|y|)^log_power near y = 0.
struct ExponentFit {
  double lambda_hat = 0.0;
  unsigned log_power = 0;
  double std_error = 0.0;
  double r2 = 0.0;
  std::size_t bins_used = 0;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// Minimum number of occupied bins a tail fit accepts.
inline constexpr std::size_t kMinTailBins = 8;

/// Extra weighted residual charged per unit of log-power when choosing it.
inline constexpr double kLogPowerPenalty = 2.0;

/// Fits bins [first, last) of a log-spaced |y| histogram. Each candidate
/// log-power in {0,1,2} gets a weighted line fit of
/// log(density) - L log log(1/|y|) against log|y|; the smallest penalized
/// residual wins. Throws FitError with fewer than kMinTailBins occupied bins.
ExponentFit fit_tail_exponent(const Histogram& h, std::size_t first, std::size_t last);
ExponentFit fit_tail_exponent(const Histogram& h);

/// Empirical eps* with the infinite case classified rather than estimated.
struct EmpiricalEps {
  bool infinite = false;
  double value = 0.0;
  double std_error = 0.0;
};

inline constexpr double kInfiniteLambdaThreshold = 0.9;

/// lambda/(1-lambda), or infinite once lambda_hat >= 0.9.
EmpiricalEps estimate_eps_star(const ExponentFit& fit);

/// Slope of log P(|y| <= delta) against log delta over the tail window.
double distributional_slope(std::span<const double> samples);

/// True when the slope is at least (1 - 1/(1+e)) - 0.07. e must be finite.
bool distributional_estimate_check(std::span<const double> samples, const ExponentValue& e);

struct LqScan {
  double q = 0.0;
  /// Exponent kappa in  integral of g^q over [y, 2y] ~ y^kappa.
  double local_exponent = 0.0;
  double local_exponent_stderr = 0.0;
  /// Slope of the integral over [cutoff, top] against log(1/cutoff).
  double growth_slope = 0.0;
  /// kappa is not significantly positive, so the integral diverges at 0.
  bool diverges = false;
};

/// Scans integral of g^q over shrinking cutoffs on a log-spaced histogram.
LqScan lq_divergence_scan(const Histogram& h, double q);

}  // namespace esl::real
