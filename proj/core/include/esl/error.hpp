#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AxisOutOfRange : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A generator of an ideal is not a single term.
class NotMonomial : public Error {
 public:
  explicit NotMonomial(std::size_t index)
      : Error("generator " + std::to_string(index) +
              " is not a monomial; supply resolution data for this ideal"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Every maximal minor of the differential vanishes identically.
class NotLocallyDominant : public Error {
 public:
  NotLocallyDominant()
      : Error("all maximal Jacobian minors vanish; the map is not locally dominant") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace esl
