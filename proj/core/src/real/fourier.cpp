#include "esl/real/fourier.hpp"

#include <cmath>

#include "esl/error.hpp"
#include "esl/linear_fit.hpp"

namespace esl::real {
namespace {

struct Partial {
  std::vector<double> re, im;
  double sw = 0.0, sw2 = 0.0;
};

double bump_weight(const SourceSampler& s, std::span<const double> x) {
  double w = 1.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const double z = (2.0 * x[i] - s.lo(i) - s.hi(i)) / (s.hi(i) - s.lo(i));
    const double r = 1.0 - z * z;
    if (r <= 0) return 0.0;
    w *= std::exp(-1.0 / r);
  }
  return w;
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t points) {
  if (!(lo > 0) || !(hi > lo) || points < 2) throw DomainError("log_spaced: bad range");
  std::vector<double> t(points);
  for (std::size_t j = 0; j < points; ++j)
    t[j] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(j) /
                                       static_cast<double>(points - 1));
  return t;
}

std::vector<double> default_t_grid() { return log_spaced(20.0, 2000.0, 25); }

std::vector<double> fourier_magnitudes(const PolyMap& map, const SampleConfig& cfg,
                                       const std::vector<double>& direction,
                                       const std::vector<double>& t_grid, double* noise_floor) {
  const std::size_t n = map.source_dimension();
  const std::size_t m = map.target_dimension();
  if (direction.size() != m) throw DimensionMismatch("functional length must equal m");
  const SourceSampler sampler(cfg, n);
  const std::size_t nt = t_grid.size();
  const std::uint64_t shards = (cfg.count + kShardSize - 1) / kShardSize;
  std::vector<Partial> parts(shards);

  for_each_shard(cfg.count, cfg.workers,
                 [&](std::uint64_t shard, std::uint64_t, std::uint64_t count) {
                   Partial& p = parts[shard];
                   p.re.assign(nt, 0.0);
                   p.im.assign(nt, 0.0);
                   std::mt19937_64 rng(cfg.seed + shard);
                   std::vector<double> u(n), ua(n), x(n);
                   for (std::uint64_t i = 0; i < count; ++i) {
                     for (std::size_t k = 0; k < n; ++k) {
                       u[k] = unit_uniform(rng);
                       ua[k] = 1.0 - u[k];
                     }
                     for (const auto* uu : {&u, &ua}) {
                       sampler.transform(*uu, x);
                       const double w = bump_weight(sampler, x);
                       if (w == 0.0) continue;
                       const std::vector<double> y = map.evaluate(std::span<const double>(x));
                       double phase = 0.0;
                       for (std::size_t j = 0; j < m; ++j) phase += direction[j] * y[j];
                       p.sw += w;
                       p.sw2 += w * w;
                       for (std::size_t k = 0; k < nt; ++k) {
                         const double a = t_grid[k] * phase;
                         p.re[k] += w * std::cos(a);
                         p.im[k] += w * std::sin(a);
                       }
                     }
                   }
                 });

  // Merge in shard order so the result does not depend on scheduling.
  std::vector<double> re(nt, 0.0), im(nt, 0.0);
  double sw = 0.0, sw2 = 0.0;
  for (const Partial& p : parts) {
    for (std::size_t k = 0; k < nt; ++k) {
      re[k] += p.re[k];
      im[k] += p.im[k];
    }
    sw += p.sw;
    sw2 += p.sw2;
  }
  if (!(sw > 0)) throw DomainError("Fourier estimate: bump weight vanished on every sample");
  std::vector<double> mag(nt);
  for (std::size_t k = 0; k < nt; ++k) mag[k] = std::hypot(re[k], im[k]) / sw;
  if (noise_floor) *noise_floor = 4.0 * std::sqrt(sw2) / sw;
  return mag;
}

FourierDecayFit estimate_delta_star_1d(const PolyMap& map, const SampleConfig& cfg,
                                       const std::vector<double>& t_grid) {
  if (map.target_dimension() != 1)
    throw DimensionMismatch("estimate_delta_star_1d needs m = 1; supply functionals");
  return estimate_delta_star(map, cfg, t_grid, {{1.0}});
}

FourierDecayFit estimate_delta_star(const PolyMap& map, const SampleConfig& cfg,
                                    const std::vector<double>& t_grid,
                                    const std::vector<std::vector<double>>& functionals) {
  if (functionals.empty()) throw DomainError("need at least one linear functional");
  if (t_grid.size() < 4) throw DomainError("frequency grid needs at least four points");
  FourierDecayFit best;
  bool have = false;
  for (const auto& dir : functionals) {
    double floor = 0.0;
    const std::vector<double> mag = fourier_magnitudes(map, cfg, dir, t_grid, &floor);
    std::vector<double> lt, lm;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
      if (mag[k] <= floor) continue;
      lt.push_back(std::log(t_grid[k]));
      lm.push_back(std::log(mag[k]));
    }
    FourierDecayFit fit;
    fit.t_lo = t_grid.front();
    fit.t_hi = t_grid.back();
    fit.points_used = lt.size();
    if (lt.size() < 4) {
      fit.delta_hat = kSuperpolynomialSentinel;
      fit.superpolynomial = true;
    } else {
      fit.t_lo = std::exp(lt.front());
      fit.t_hi = std::exp(lt.back());
      const LineFit f = fit_line(lt, lm);
      fit.delta_hat = std::max(0.0, -f.slope);
      fit.std_error = f.slope_stderr;
      if (fit.delta_hat > kSuperpolynomialSentinel) {
        fit.delta_hat = kSuperpolynomialSentinel;
        fit.superpolynomial = true;
      }
      fit.non_decaying = fit.delta_hat <= 2.0 * fit.std_error + 0.02;
    }
    if (!have || fit.delta_hat < best.delta_hat) best = fit;
    have = true;
  }
  return best;
}

}  // namespace esl::real
