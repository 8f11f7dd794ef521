#include "esl/invariants.hpp"

#include <algorithm>
#include <limits>

#include "esl/error.hpp"
#include "esl/lct.hpp"
#include "esl/monomial_ideal.hpp"

namespace esl {
namespace {

void require_positive(const ExponentValue& v, const char* what) {
  if (v.is_zero()) throw DomainError(std::string(what) + " must be positive");
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer result does not fit in 64 bits");
  return z.get_si();
}

ExponentValue ratio_to_complement(const Rational& c) {
  // c / (1 - c) for c < 1, +inf otherwise.
  if (c >= Rational(1)) return ExponentValue::infinity();
  return ExponentValue(c / (Rational(1) - c));
}

LctResult jacobian_lct(const PolyMap& map) {
  return lct_monomial(as_monomial_ideal(jacobian_ideal_generators(map)));
}

}  // namespace

ExponentValue eps_from_lct(const ExponentValue& c) {
  require_positive(c, "lct");
  if (c.is_infinite()) return ExponentValue::infinity();
  return ratio_to_complement(c.finite());
}

BoundedValue lct_from_eps(const ExponentValue& e) {
  require_positive(e, "eps");
  if (e.is_infinite()) return {ExponentValue(1), BoundKind::LowerBound};
  return {ExponentValue(young_weight(e)), BoundKind::Exact};
}

BoundedValue eps_monomial_model(const MonomialLocalModel& model, bool density_nonzero_at_origin) {
  if (model.a.empty() || model.a.size() != model.b.size())
    throw DimensionMismatch("monomial model needs equal, nonempty exponent lists");
  std::optional<Rational> c;
  for (std::size_t i = 0; i < model.a.size(); ++i) {
    if (model.a[i] == 0) throw DomainError("monomial model map exponents must be >= 1");
    const Rational v(static_cast<long>(model.b[i]) + 1, static_cast<long>(model.a[i]));
    if (!c || v < *c) c = v;
  }
  const ExponentValue eps = ratio_to_complement(*c);
  if (eps.is_infinite()) return {eps, BoundKind::Exact};
  return {eps, density_nonzero_at_origin ? BoundKind::Exact : BoundKind::LowerBound};
}

BoundedValue eps_equidimensional(const PolyMap& map) {
  if (map.source_dimension() != map.target_dimension())
    throw DimensionMismatch("eps_equidimensional needs n = m");
  return {jacobian_lct(map).value, BoundKind::Exact};
}

BoundedValue eps_lower_bound(const PolyMap& map) {
  return {jacobian_lct(map).value, BoundKind::LowerBound};
}

std::optional<ExponentValue> eps_upper_bound_complex(const ExponentValue& lct_jacobian) {
  require_positive(lct_jacobian, "lct");
  if (lct_jacobian.is_infinite() || lct_jacobian.finite() >= Rational(1)) return std::nullopt;
  return ratio_to_complement(lct_jacobian.finite());
}

Rational young_weight(const ExponentValue& e) {
  if (e.is_infinite()) return Rational(1);
  return e.finite() / (Rational(1) + e.finite());
}

ExponentValue young_combine(const ExponentValue& e1, const ExponentValue& e2) {
  require_positive(e1, "eps");
  require_positive(e2, "eps");
  return ratio_to_complement(young_weight(e1) + young_weight(e2));
}

ExponentValue reverse_young_self(const ExponentValue& e) {
  require_positive(e, "eps");
  if (e.is_infinite()) return ExponentValue::infinity();
  return ExponentValue(e.finite() / (Rational(2) + e.finite()));
}

bool reverse_young_check(const ExponentValue& e1, const ExponentValue& e2, const ExponentValue& e) {
  require_positive(e1, "eps");
  require_positive(e2, "eps");
  require_positive(e, "eps");
  return young_weight(e1) + young_weight(e2) > young_weight(e);
}

KStarBounds k_star_bounds_from_lct(const ExponentValue& c) {
  require_positive(c, "lct");
  if (c.is_infinite() || c.finite() > Rational(1)) return {1, 2, true};
  const Rational inv = Rational(1) / c.finite();
  return {to_int64(inv.ceil()), to_int64(inv.floor()) + 1, false};
}

std::int64_t k_star_upper_from_eps(const ExponentValue& e) {
  require_positive(e, "eps");
  if (e.is_infinite()) return 2;
  return to_int64(((Rational(1) + e.finite()) / e.finite()).floor()) + 1;
}

ExponentValue delta_from_eps(const ExponentValue& e) {
  require_positive(e, "eps");
  return ExponentValue(young_weight(e));
}

ExponentValue eps_from_delta(const ExponentValue& d) {
  require_positive(d, "delta");
  if (d.is_infinite()) return ExponentValue::infinity();
  return ratio_to_complement(d.finite());
}

BoundedValue thom_sebastiani(const ExponentValue& c1, const ExponentValue& c2) {
  for (const auto* c : {&c1, &c2})
    if (c->is_zero() || c->is_infinite() || c->finite() > Rational(1))
      throw DomainError("thom_sebastiani inputs must lie in (0, 1]");
  const Rational s = c1.finite() + c2.finite();
  if (s < Rational(1)) return {ExponentValue(s), BoundKind::Exact};
  return {ExponentValue(1), BoundKind::LowerBound};
}

bool consistency_chain_check(const ExponentValue& lct_grad, const ExponentValue& lct_f) {
  require_positive(lct_grad, "lct");
  require_positive(lct_f, "lct");
  if (lct_grad < lct_f) return false;
  const bool f_below_one = lct_f < ExponentValue(1);
  if (f_below_one && eps_from_lct(lct_f) < lct_grad) return false;
  if (lct_grad < ExponentValue(1) && f_below_one &&
      eps_from_lct(lct_grad) < eps_from_lct(lct_f))
    return false;
  return true;
}

}  // namespace esl
