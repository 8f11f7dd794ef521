#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "esl/polynomial.hpp"

namespace esl {

/// Ideal generated by monomials, stored as a minimal generating set.
///
/// Construction drops duplicate generators and any generator divisible by
/// another one, then sorts the rest in grlex order.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators);

  std::size_t dimension() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  /// The zero exponent vector is a generator.
  bool is_unit() const;

  std::string str(const std::string& var_prefix = "x") const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<ExponentVector> generators_;
};

/// Reads monomial generators off a list of single-term polynomials.
/// Throws NotMonomial naming the first generator with zero or several terms.
MonomialIdeal as_monomial_ideal(const std::vector<Polynomial>& generators);

}  // namespace esl
