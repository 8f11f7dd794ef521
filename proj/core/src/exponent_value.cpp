#include "esl/exponent_value.hpp"

#include <limits>

#include "esl/error.hpp"

namespace esl {

ExponentValue::ExponentValue(Rational value) : value_(std::move(value)) {
  if (value_->sign() < 0) throw DomainError("exponent values are nonnegative");
}

const Rational& ExponentValue::finite() const {
  if (!value_) throw DomainError("value is +infinity");
  return *value_;
}

double ExponentValue::to_double() const {
  return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
}

std::string ExponentValue::str() const { return value_ ? value_->str() : "inf"; }

ExponentValue ExponentValue::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return infinity();
  return ExponentValue(Rational::parse(text));
}

std::strong_ordering operator<=>(const ExponentValue& a, const ExponentValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

const char* to_string(FieldValidity v) {
  switch (v) {
    case FieldValidity::AllLocalFields:
      return "AllLocalFields";
    case FieldValidity::ComplexOnly:
      return "ComplexOnly";
  }
  return "?";
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Exact:
      return "Exact";
    case BoundKind::LowerBound:
      return "LowerBound";
    case BoundKind::UpperBound:
      return "UpperBound";
  }
  return "?";
}

}  // namespace esl
