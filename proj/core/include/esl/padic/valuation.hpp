#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "esl/padic/cylinder.hpp"
#include "esl/polynomial.hpp"
#include "esl/rational.hpp"

namespace esl::padic {

/// p-adic valuation of a nonzero integer.
unsigned valuation(const mpz_class& v, std::uint64_t p);

/// Haar mass of {x in Z_p^n : f(x) = 0 mod p^k} from valuation counting, for
///   c * prod x_i^{a_i}                      (any p), or
///   c1 * x_i^a + c2 * x_j^b with i != j     (odd p).
/// Empty for every other shape.
std::optional<Rational> separable_zero_mass(const Polynomial& f, std::uint64_t p, unsigned k);

/// separable_zero_mass when it applies, cylinder enumeration otherwise.
Rational zero_mass(const Polynomial& f, std::uint64_t p, unsigned k,
                   std::uint64_t budget = kDefaultCellBudget, unsigned workers = 1);

}  // namespace esl::padic
