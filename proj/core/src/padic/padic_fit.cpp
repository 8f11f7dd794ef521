#include "esl/padic/padic_fit.hpp"

#include <cmath>
#include <limits>

#include "esl/error.hpp"
#include "esl/linear_fit.hpp"
#include "esl/padic/valuation.hpp"

namespace esl::padic {
namespace {

double log_p(const Rational& v, std::uint64_t p) {
  // Rationals here can be far below double range only for huge depths.
  return (std::log(v.numerator().get_d()) - std::log(v.denominator().get_d())) /
         std::log(static_cast<double>(p));
}

// Depths k in [first, last] where the sequence drops at the next step; the
// last available depth counts as a drop. Falls back to all depths.
std::vector<unsigned> drop_points(const std::vector<Rational>& masses, unsigned first,
                                  unsigned last) {
  std::vector<unsigned> out, all;
  for (unsigned k = first; k <= last; ++k) {
    all.push_back(k);
    if (k + 1 >= masses.size() || masses[k + 1] < masses[k]) out.push_back(k);
  }
  return out.size() >= 2 ? out : all;
}

constexpr double kRelativeTie = 1e-9;
constexpr double kAbsoluteTie = 1e-18;

}  // namespace

const char* to_string(PadicEpsKind k) {
  switch (k) {
    case PadicEpsKind::Infinite: return "infinite";
    case PadicEpsKind::Finite: return "finite";
    case PadicEpsKind::Ambiguous: return "ambiguous";
  }
  return "?";
}

PadicLctFit fit_padic_lct(const Polynomial& f, const PAdicConfig& cfg) {
  if (cfg.k_max < 2) throw DomainError("fit_padic_lct needs k_max >= 2");
  PadicLctFit fit;
  fit.separable = separable_zero_mass(f, cfg.p, 1).has_value();
  for (unsigned k = 0; k <= cfg.k_max + 1; ++k) {
    try {
      fit.masses.push_back(zero_mass(f, cfg.p, k, cfg.cell_budget, cfg.workers));
    } catch (const BudgetExceeded&) {
      if (k <= cfg.k_max) throw;
    }
  }

  fit.at_least_one = true;
  for (unsigned k = 0; k <= cfg.k_max; ++k) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), cfg.p, k);
    if (fit.masses[k] != Rational(mpz_class(1), pk)) {
      fit.at_least_one = false;
      break;
    }
  }
  if (fit.at_least_one) {
    fit.lct_hat = 1.0;
    return fit;
  }
  for (const auto& mass : fit.masses)
    if (mass.is_zero()) throw FitError("mass vanished; f has no zero near 0 at this depth");

  fit.depths_used = drop_points(fit.masses, (cfg.k_max + 1) / 2, cfg.k_max);
  std::vector<double> ks, neg_log_mass, log_k;
  for (unsigned k : fit.depths_used) {
    ks.push_back(static_cast<double>(k));
    neg_log_mass.push_back(-log_p(fit.masses[k], cfg.p));
    log_k.push_back(std::log(static_cast<double>(k)) / std::log(static_cast<double>(cfg.p)));
  }
  double best = std::numeric_limits<double>::infinity();
  for (unsigned L = 0; L <= 2; ++L) {
    std::vector<double> z(ks.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = neg_log_mass[i] + L * log_k[i];
    const LineFit line = fit_line(ks, z);
    if (line.rss < best * (1 - kRelativeTie) - kAbsoluteTie) {
      best = line.rss;
      fit.lct_hat = line.slope;
      fit.log_power = L;
      fit.rss = line.rss;
    }
  }
  return fit;
}

PadicEpsEstimate estimate_eps_padic(const PolyMap& map, const PAdicConfig& cfg,
                                    std::span<const std::int64_t> y) {
  if (map.target_dimension() != 1) throw DimensionMismatch("estimate_eps_padic needs m = 1");
  if (cfg.k_max < 2) throw DomainError("estimate_eps_padic needs k_max >= 2");
  PadicEpsEstimate est;
  est.table = ball_ratio_sequence(map, cfg, y);
  std::vector<Rational> masses;
  for (const auto& row : est.table.rows) masses.push_back(row.mass);
  try {
    masses.push_back(cylinder_mass(map, cfg.p, cfg.k_max + 1, y, cfg.cell_budget, cfg.workers));
  } catch (const BudgetExceeded&) {
  }

  std::vector<unsigned> depths = drop_points(masses, 0, cfg.k_max);
  if (depths.size() < 3) {
    depths.clear();
    for (unsigned k = 0; k <= cfg.k_max; ++k) depths.push_back(k);
  }
  std::vector<double> ks, log_k1, log_ratio;
  for (unsigned k : depths) {
    if (est.table.rows[k].ratio.is_zero())
      throw FitError("ball mass vanished; y is not in the image near the base point");
    ks.push_back(static_cast<double>(k));
    log_k1.push_back(std::log(static_cast<double>(k) + 1) / std::log(static_cast<double>(cfg.p)));
    log_ratio.push_back(log_p(est.table.rows[k].ratio, cfg.p));
  }
  const LineFit geometric = fit_line(ks, log_ratio);
  const LineFit polynomial = fit_line(log_k1, log_ratio);
  est.geometric_alpha = geometric.slope;
  est.geometric_rss = geometric.rss;
  est.polynomial_power = polynomial.slope;
  est.polynomial_rss = polynomial.rss;

  constexpr double kMinAlpha = 0.05;
  constexpr double kResidualFactor = 2.0;
  constexpr double kNegligible = 1e-12;
  const bool geometric_wins =
      geometric.rss <= kNegligible || kResidualFactor * geometric.rss < polynomial.rss;
  const bool polynomial_wins =
      polynomial.rss <= kNegligible || kResidualFactor * polynomial.rss < geometric.rss;

  if (geometric.slope <= kMinAlpha || (polynomial_wins && !geometric_wins)) {
    est.kind = PadicEpsKind::Infinite;
    est.log_explosion = polynomial.slope >= 0.5;
  } else if (geometric_wins) {
    est.kind = PadicEpsKind::Finite;
    est.c_hat = 1.0 - geometric.slope;
    if (est.c_hat <= 0) throw FitError("fitted growth rate exceeds the total mass bound");
    est.eps_hat = est.c_hat / (1.0 - est.c_hat);
  } else {
    est.kind = PadicEpsKind::Ambiguous;
    est.c_hat = 1.0 - geometric.slope;
  }
  return est;
}

}  // namespace esl::padic
