#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "esl/rational.hpp"

namespace esl {

/// Largest exponent a term may carry. Exceeding it is an error, never a wrap.
inline constexpr std::uint32_t kMaxExponent = 2147483647u;

/// Nonnegative integer exponents of a monomial in a fixed number of variables.
struct ExponentVector {
  std::vector<std::uint32_t> entries;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries(n, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> init);
  explicit ExponentVector(std::vector<std::uint32_t> e);

  std::size_t size() const { return entries.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries[i]; }
  std::uint32_t& operator[](std::size_t i) { return entries[i]; }

  std::uint64_t degree() const;
  bool is_zero() const;
  /// True when every entry of *this is <= the matching entry of other.
  bool divides(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

/// Graded lexicographic order: total degree first, ties broken lexicographically.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate polynomial over the rationals in variables x0..x{n-1}.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t axis);
  static Polynomial term(const ExponentVector& e, const Rational& c);

  std::size_t dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const ExponentVector& e) const;

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Floating evaluation; term values are combined by pairwise summation.
  double evaluate(std::span<const double> point) const;

  /// Substitutes x_i -> replacement[i] for every variable.
  Polynomial compose(std::span<const Polynomial> replacement) const;

  /// Canonical text: terms in descending grlex order, e.g. "3/2*x1^2*x2 - x1 + 5".
  /// Variables are printed 1-based with the given prefix.
  std::string str(const std::string& var_prefix = "x") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

/// Formal partial derivative with respect to the 0-based variable `axis`.
Polynomial partial_derivative(const Polynomial& p, std::size_t axis);

}  // namespace esl
