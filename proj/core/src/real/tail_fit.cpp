#include "esl/real/tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "esl/error.hpp"
#include "esl/linear_fit.hpp"

namespace esl::real {

ExponentFit fit_tail_exponent(const Histogram& h, std::size_t first, std::size_t last) {
  if (!h.log_spaced) throw FitError("tail fit needs a log-spaced |y| histogram");
  last = std::min(last, h.bins());
  std::vector<double> lx, ld, llog, w;
  bool log_term_ok = true;
  for (std::size_t i = first; i < last; ++i) {
    if (h.masses[i] <= 0) continue;
    const double c = h.center(i);
    lx.push_back(std::log(c));
    ld.push_back(std::log(h.density(i)));
    if (c < 1.0) {
      llog.push_back(std::log(std::log(1.0 / c)));
    } else {
      log_term_ok = false;
      llog.push_back(0.0);
    }
    w.push_back(h.samples > 0 ? h.count(i) : h.masses[i]);
  }
  if (lx.size() < kMinTailBins)
    throw FitError("tail fit: only " + std::to_string(lx.size()) + " occupied bins, need " +
                   std::to_string(kMinTailBins));

  ExponentFit best;
  double best_score = std::numeric_limits<double>::infinity();
  const unsigned max_power = log_term_ok ? 2 : 0;
  for (unsigned L = 0; L <= max_power; ++L) {
    std::vector<double> y(ld.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = ld[i] - L * llog[i];
    const LineFit f = fit_line(lx, y, w);
    const double penalty = h.samples > 0 ? kLogPowerPenalty * L : 0.0;
    const double score = f.rss + penalty;
    if (score < best_score) {
      best_score = score;
      best.lambda_hat = f.slope + 1.0;
      best.log_power = L;
      best.std_error = f.slope_stderr;
      best.r2 = f.r2;
    }
  }
  best.bins_used = lx.size();
  best.window_lo = h.edges[first];
  best.window_hi = h.edges[last];
  return best;
}

ExponentFit fit_tail_exponent(const Histogram& h) { return fit_tail_exponent(h, 0, h.bins()); }

EmpiricalEps estimate_eps_star(const ExponentFit& fit) {
  if (!(fit.lambda_hat > 0)) throw DomainError("estimate_eps_star: lambda_hat must be positive");
  EmpiricalEps e;
  if (fit.lambda_hat >= kInfiniteLambdaThreshold) {
    e.infinite = true;
    return e;
  }
  const double one_minus = 1.0 - fit.lambda_hat;
  e.value = fit.lambda_hat / one_minus;
  e.std_error = fit.std_error / (one_minus * one_minus);
  return e;
}

double distributional_slope(std::span<const double> samples) {
  const auto [lo, hi] = abs_quantile_window(samples);
  if (!(lo > 0) || !(hi > lo)) throw FitError("distributional slope: degenerate tail window");
  std::vector<double> a(samples.size());
  std::transform(samples.begin(), samples.end(), a.begin(), [](double v) { return std::fabs(v); });
  std::sort(a.begin(), a.end());
  constexpr int kPoints = 12;
  std::vector<double> x, y;
  for (int j = 0; j < kPoints; ++j) {
    const double t = static_cast<double>(j) / (kPoints - 1);
    const double delta = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    const auto below = std::upper_bound(a.begin(), a.end(), delta) - a.begin();
    if (below == 0) continue;
    x.push_back(std::log(delta));
    y.push_back(std::log(static_cast<double>(below) / static_cast<double>(a.size())));
  }
  return fit_line(x, y).slope;
}

bool distributional_estimate_check(std::span<const double> samples, const ExponentValue& e) {
  const double ev = e.finite().to_double();
  return distributional_slope(samples) >= (1.0 - 1.0 / (1.0 + ev)) - 0.07;
}

LqScan lq_divergence_scan(const Histogram& h, double q) {
  if (!h.log_spaced) throw FitError("L^q scan needs a log-spaced |y| histogram");
  if (!(q >= 1)) throw DomainError("L^q scan needs q >= 1");
  std::vector<double> lx, lc, w, contrib(h.bins(), 0.0);
  for (std::size_t i = 0; i < h.bins(); ++i) {
    if (h.masses[i] <= 0) continue;
    contrib[i] = std::pow(h.density(i), q) * h.width(i);
    lx.push_back(std::log(h.center(i)));
    lc.push_back(std::log(contrib[i]));
    // Relative variance of density^q is about q^2 / count.
    w.push_back((h.samples > 0 ? h.count(i) : h.masses[i]) / (q * q));
  }
  if (lx.size() < kMinTailBins) throw FitError("L^q scan: too few occupied bins");
  const LineFit local = fit_line(lx, lc, w);

  std::vector<double> cut, cumulative;
  double running = 0.0;
  for (std::size_t i = h.bins(); i-- > 0;) {
    running += contrib[i];
    cut.push_back(std::log(1.0 / h.edges[i]));
    cumulative.push_back(running);
  }
  const LineFit growth = fit_line(cut, cumulative);

  LqScan s;
  s.q = q;
  s.local_exponent = local.slope;
  s.local_exponent_stderr = local.slope_stderr;
  s.growth_slope = growth.slope;
  s.diverges = local.slope <= 3.0 * local.slope_stderr;
  return s;
}

}  // namespace esl::real
