#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "esl/padic/cylinder.hpp"
#include "esl/polynomial.hpp"
#include "esl/rational.hpp"

namespace esl::padic {

/// Fit of mass{f = 0 mod p^k} ~ C p^(-c k) k^L over the upper half of depths.
struct PadicLctFit {
  /// mass is exactly p^-k at every depth: f is smooth at 0, lct >= 1.
  bool at_least_one = false;
  double lct_hat = 0.0;
  unsigned log_power = 0;
  double rss = 0.0;
  /// Depths the fit used: those in [k_max/2, k_max] where the mass drops next step.
  std::vector<unsigned> depths_used;
  /// masses[k] for k = 0..k_max (one more when the budget allowed).
  std::vector<Rational> masses;
  bool separable = false;
};

/// Needs k_max >= 2.
PadicLctFit fit_padic_lct(const Polynomial& f, const PAdicConfig& cfg);

enum class PadicEpsKind { Infinite, Finite, Ambiguous };

const char* to_string(PadicEpsKind k);

struct PadicEpsEstimate {
  PadicEpsKind kind = PadicEpsKind::Ambiguous;
  double eps_hat = 0.0;
  /// 1 - alpha from the geometric hypothesis.
  double c_hat = 0.0;
  double geometric_alpha = 0.0;
  double geometric_rss = 0.0;
  /// L from the polynomial hypothesis log_p ratio = L log_p(k+1) + b.
  double polynomial_power = 0.0;
  double polynomial_rss = 0.0;
  /// The ratio grows without bound, but only polynomially in k.
  bool log_explosion = false;
  PadicMassTable table;
};

/// Classifies the growth of ball_ratio_sequence: geometric growth p^((1-c)k)
/// gives eps = c/(1-c); polynomial or bounded growth gives +infinity.
/// Requires m = 1.
PadicEpsEstimate estimate_eps_padic(const PolyMap& map, const PAdicConfig& cfg,
                                    std::span<const std::int64_t> y);

}  // namespace esl::padic
