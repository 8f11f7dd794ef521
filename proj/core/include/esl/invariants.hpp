#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "esl/exponent_value.hpp"
#include "esl/poly_map.hpp"

namespace esl {

/// Monomial map x^a pushing forward the density g(x) * prod |x_i|^{b_i}.
struct MonomialLocalModel {
  std::vector<std::uint32_t> a;  // map exponents, each >= 1
  std::vector<std::uint32_t> b;  // density exponents, each >= 0
};

/// Sandwich for the minimal convolution power k* that makes densities bounded.
struct KStarBounds {
  std::int64_t lower;
  std::int64_t upper;
  /// Set when the input was outside the range where the sandwich is meaningful.
  bool degenerate = false;

  friend bool operator==(const KStarBounds&, const KStarBounds&) = default;
};

// One-dimensional conversions. Every function here is exact rational arithmetic.

/// eps* from the lct of phi - phi(x): +inf if c >= 1, else c / (1 - c).
ExponentValue eps_from_lct(const ExponentValue& c);

/// Inverse of eps_from_lct. +inf only pins lct >= 1, so it comes back as a LowerBound of 1.
BoundedValue lct_from_eps(const ExponentValue& e);

/// eps* of a monomial pushforward. Exact when the smooth factor of the density
/// is nonzero at the origin, a lower bound otherwise.
BoundedValue eps_monomial_model(const MonomialLocalModel& model, bool density_nonzero_at_origin);

/// For n = m, eps* equals the lct of the Jacobian ideal. Requires a monomial Jacobian.
BoundedValue eps_equidimensional(const PolyMap& map);

/// eps* >= lct of the Jacobian ideal at the origin.
BoundedValue eps_lower_bound(const PolyMap& map);

/// Complex upper bound lct_J / (1 - lct_J), available only when lct_J < 1.
std::optional<ExponentValue> eps_upper_bound_complex(const ExponentValue& lct_jacobian);

/// e -> e / (1 + e), with +inf -> 1. The Young exponent transform.
Rational young_weight(const ExponentValue& e);

/// Integrability exponent guaranteed for nu1 * nu2 by Young's inequality.
ExponentValue young_combine(const ExponentValue& e1, const ExponentValue& e2);

/// e / (2 + e); +inf maps to +inf.
ExponentValue reverse_young_self(const ExponentValue& e);

/// Strict reverse Young inequality w(e1) + w(e2) > w(e).
bool reverse_young_check(const ExponentValue& e1, const ExponentValue& e2, const ExponentValue& e);

/// (ceil(1/c), floor(1/c) + 1). Degenerate (1, 2) with the flag set when c > 1 or c = +inf.
KStarBounds k_star_bounds_from_lct(const ExponentValue& c);

/// floor((1 + e) / e) + 1; 2 for e = +inf.
std::int64_t k_star_upper_from_eps(const ExponentValue& e);

ExponentValue delta_from_eps(const ExponentValue& e);
ExponentValue eps_from_delta(const ExponentValue& d);

/// lct of a sum of functions in separate variables: c1 + c2 if below 1, else "at least 1".
BoundedValue thom_sebastiani(const ExponentValue& c1, const ExponentValue& c2);

/// Gradient-inequality chain between lct(grad phi) and lct(phi):
///   lct_grad >= lct_f,
///   lct_f / (1 - lct_f) >= lct_grad        when lct_f < 1,
///   lct_grad / (1 - lct_grad) >= lct_f / (1 - lct_f)   when lct_grad < 1.
bool consistency_chain_check(const ExponentValue& lct_grad, const ExponentValue& lct_f);

}  // namespace esl
