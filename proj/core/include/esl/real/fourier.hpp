#pragma once

#include <cstddef>
#include <vector>

#include "esl/poly_map.hpp"
#include "esl/real/sampling.hpp"

namespace esl::real {

/// Power-law fit |F(t)| ~ t^(-delta) of the pushforward's Fourier transform.
/// These are fixed-measure estimates: one smooth measure on one box.
struct FourierDecayFit {
  double delta_hat = 0.0;
  double std_error = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t points_used = 0;
  /// Too few points above the noise floor, or slope steeper than the sentinel.
  bool superpolynomial = false;
  /// delta_hat is indistinguishable from zero.
  bool non_decaying = false;
};

/// Reported delta_hat for decay faster than any fitted power.
inline constexpr double kSuperpolynomialSentinel = 2.0;

std::vector<double> log_spaced(double lo, double hi, std::size_t points);

/// Default frequency grid: 25 log-spaced points on [20, 2000].
std::vector<double> default_t_grid();

/// Monte Carlo estimate of |E[w(x) exp(i t f(x))]| / E[w(x)] for each t, where
/// w is the smooth bump prod exp(-1/(1-z_i^2)) on the box and f is the
/// linear functional `direction` applied to the map. Antithetic pairs u, 1-u.
std::vector<double> fourier_magnitudes(const PolyMap& map, const SampleConfig& cfg,
                                       const std::vector<double>& direction,
                                       const std::vector<double>& t_grid,
                                       double* noise_floor = nullptr);

/// Requires m = 1.
FourierDecayFit estimate_delta_star_1d(const PolyMap& map, const SampleConfig& cfg,
                                       const std::vector<double>& t_grid);

/// Minimum over the supplied functionals (each of length m) of the 1-D estimate.
FourierDecayFit estimate_delta_star(const PolyMap& map, const SampleConfig& cfg,
                                    const std::vector<double>& t_grid,
                                    const std::vector<std::vector<double>>& functionals);

}  // namespace esl::real
