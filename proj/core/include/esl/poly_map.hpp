#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "esl/polynomial.hpp"

namespace esl {

/// Polynomial map F^n -> F^m with rational coefficients, n >= m >= 1.
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> components);

  static PolyMap identity(std::size_t n);

  std::size_t source_dimension() const { return n_; }
  std::size_t target_dimension() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t j) const { return components_.at(j); }

  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;

  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t n_;
  std::vector<Polynomial> components_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Entry (j, i) is d(component j)/d(x_i).
PolyMatrix jacobian_matrix(const PolyMap& map);

/// Exact determinant of a square polynomial matrix (cofactor expansion).
Polynomial determinant(const PolyMatrix& matrix);

/// All C(n, m) maximal minors of the differential, columns chosen in
/// lexicographic order. Zero minors are kept so positions stay meaningful.
std::vector<Polynomial> jacobian_minors(const PolyMap& map);

/// The nonzero maximal minors, i.e. generators of the Jacobian ideal.
/// Throws NotLocallyDominant when every minor vanishes identically.
std::vector<Polynomial> jacobian_ideal_generators(const PolyMap& map);

/// z -> map(x0 + z) - map(x0).
PolyMap shift_to_origin(const PolyMap& map, std::span<const Rational> x0);

}  // namespace esl
