#pragma once

#include <cstdint>
#include <vector>

#include "esl/exponent_value.hpp"
#include "esl/monomial_ideal.hpp"
#include "esl/rational.hpp"

namespace esl {

/// Log-canonical threshold together with the fields it is known to hold over.
struct LctResult {
  ExponentValue value;
  FieldValidity validity;
};

/// Smallest t with t*(1,...,1) in the Newton polyhedron conv(generators) + R_{>=0}^n,
/// solved as an exact linear program. Zero for the unit ideal.
Rational newton_threshold(const MonomialIdeal& ideal);

/// lct at the origin of a monomial ideal: 1 / newton_threshold, +inf for the unit ideal.
LctResult lct_monomial(const MonomialIdeal& ideal);

/// lct of a single monomial x^a: 1 / max_i a_i. Coordinates with a_i = 0 impose nothing.
LctResult lct_principal_monomial(const ExponentVector& a);

/// One exceptional or strict-transform divisor of a log-principalization.
struct ResolutionDivisor {
  std::uint32_t a;  // multiplicity of the pulled-back ideal, >= 1
  std::uint32_t b;  // multiplicity of the relative Jacobian
  bool passes_through_x;
};

struct ResolutionData {
  std::vector<ResolutionDivisor> divisors;
};

/// min over divisors through x of (b + 1) / a.
LctResult lct_from_resolution(const ResolutionData& data);

/// lct at 0 of x1^d1 + ... + xk^dk over C: min(1, sum 1/d_i). Tagged ComplexOnly.
LctResult lct_diagonal_sum(const std::vector<std::uint32_t>& degrees);

/// Guard invariant: lct of a monomial ideal is strictly positive.
bool lct_lower_is_positive_check(const MonomialIdeal& ideal);

}  // namespace esl
