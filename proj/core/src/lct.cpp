#include "esl/lct.hpp"

#include <algorithm>
#include <optional>

#include "esl/error.hpp"
#include "esl/simplex.hpp"

namespace esl {

Rational newton_threshold(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return Rational(0);
  const auto& gens = ideal.generators();
  const std::size_t k = gens.size();
  const std::size_t n = ideal.dimension();

  // Variables: lambda_1..lambda_k, t, s_1..s_n (slacks).
  //   sum_j lambda_j = 1
  //   sum_j lambda_j a_{j,i} - t + s_i = 0   for every coordinate i
  const std::size_t vars = k + 1 + n;
  StandardFormLp lp;
  std::vector<Rational> convex(vars, Rational(0));
  for (std::size_t j = 0; j < k; ++j) convex[j] = Rational(1);
  lp.a.push_back(std::move(convex));
  lp.b.push_back(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = Rational(static_cast<long>(gens[j][i]));
    row[k] = Rational(-1);
    row[k + 1 + i] = Rational(1);
    lp.a.push_back(std::move(row));
    lp.b.push_back(Rational(0));
  }
  lp.c.assign(vars, Rational(0));
  lp.c[k] = Rational(1);

  const LpSolution sol = solve_exact_lp(lp);
  if (sol.status != LpStatus::Optimal) throw Error("newton polyhedron lp did not reach an optimum");
  return sol.objective;
}

LctResult lct_monomial(const MonomialIdeal& ideal) {
  const Rational t = newton_threshold(ideal);
  if (t.is_zero()) return {ExponentValue::infinity(), FieldValidity::AllLocalFields};
  return {ExponentValue(Rational(1) / t), FieldValidity::AllLocalFields};
}

LctResult lct_principal_monomial(const ExponentVector& a) {
  if (a.is_zero()) throw DomainError("principal monomial with zero exponent vector");
  const auto top = *std::max_element(a.entries.begin(), a.entries.end());
  return {ExponentValue(Rational(1, static_cast<long>(top))), FieldValidity::AllLocalFields};
}

LctResult lct_from_resolution(const ResolutionData& data) {
  std::optional<Rational> best;
  for (const auto& d : data.divisors) {
    if (d.a == 0) throw DomainError("resolution divisor with a = 0");
    if (!d.passes_through_x) continue;
    const Rational v(static_cast<long>(d.b) + 1, static_cast<long>(d.a));
    if (!best || v < *best) best = v;
  }
  if (!best) throw DomainError("no resolution divisor passes through the point");
  return {ExponentValue(*best), FieldValidity::AllLocalFields};
}

LctResult lct_diagonal_sum(const std::vector<std::uint32_t>& degrees) {
  if (degrees.empty()) throw DomainError("diagonal sum needs at least one degree");
  Rational s(0);
  for (auto d : degrees) {
    if (d == 0) throw DomainError("diagonal degrees must be >= 1");
    s += Rational(1, static_cast<long>(d));
  }
  return {ExponentValue(std::min(s, Rational(1))), FieldValidity::ComplexOnly};
}

bool lct_lower_is_positive_check(const MonomialIdeal& ideal) {
  return lct_monomial(ideal).value > ExponentValue(0);
}

}  // namespace esl
