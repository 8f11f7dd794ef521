#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "esl/rational.hpp"

namespace esl {

/// A nonnegative rational or +infinity. Houses lct, eps*, delta* and friends.
class ExponentValue {
 public:
  ExponentValue(Rational value);  // NOLINT(google-explicit-constructor)
  ExponentValue(long value) : ExponentValue(Rational(value)) {}  // NOLINT
  static ExponentValue infinity() { return ExponentValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  bool is_zero() const { return value_ && value_->is_zero(); }
  /// The finite value; throws DomainError on +infinity.
  const Rational& finite() const;

  double to_double() const;
  /// "inf" or the rational in a/b form.
  std::string str() const;
  static ExponentValue parse(const std::string& text);

  friend bool operator==(const ExponentValue&, const ExponentValue&) = default;
  friend std::strong_ordering operator<=>(const ExponentValue& a, const ExponentValue& b);
  friend std::ostream& operator<<(std::ostream& os, const ExponentValue& v) {
    return os << v.str();
  }

 private:
  ExponentValue() = default;
  std::optional<Rational> value_;
};

/// Which local fields a computed value is known to be valid over.
enum class FieldValidity { AllLocalFields, ComplexOnly };

const char* to_string(FieldValidity v);

/// Whether a value is the invariant itself or only bounds it.
enum class BoundKind { Exact, LowerBound, UpperBound };

const char* to_string(BoundKind k);

struct BoundedValue {
  ExponentValue value;
  BoundKind kind;

  friend bool operator==(const BoundedValue&, const BoundedValue&) = default;
};

}  // namespace esl
