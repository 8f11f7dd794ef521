#include "esl/rational.hpp"

#include <string>

#include "esl/error.hpp"

namespace esl {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s, 10);
    } else {
      num = mpz_class(s.substr(0, slash), 10);
      den = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  if (den <= 0) throw DomainError("rational literal needs a positive denominator: '" + s + "'");
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / power(base, -exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace esl
