#include "esl/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "esl/error.hpp"

namespace esl {
namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t s = std::uint64_t{a} + b;
  if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^31-1");
  return static_cast<std::uint32_t>(s);
}

std::uint32_t checked_mul(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t s = std::uint64_t{a} * b;
  if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^31-1");
  return static_cast<std::uint32_t>(s);
}

void check_entries(const std::vector<std::uint32_t>& e) {
  for (auto v : e)
    if (v > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^31-1");
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) return std::accumulate(v.begin(), v.end(), 0.0);
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void require_dimension(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw DimensionMismatch("expected " + std::to_string(expected) + " coordinates, got " +
                            std::to_string(got));
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> init) : entries(init) {
  check_entries(entries);
}

ExponentVector::ExponentVector(std::vector<std::uint32_t> e) : entries(std::move(e)) {
  check_entries(entries);
}

std::uint64_t ExponentVector::degree() const {
  return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](auto v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (size() != other.size()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < size(); ++i)
    if (entries[i] > other.entries[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.entries < b.entries;
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(ExponentVector(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t axis) {
  if (axis >= n) throw AxisOutOfRange("variable index out of range");
  ExponentVector e(n);
  e[axis] = 1;
  return term(e, Rational(1));
}

Polynomial Polynomial::term(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  require_dimension(n_, e.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_dimension(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_dimension(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_dimension(a.n_, b.n_);
  Polynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, Rational(1));
  Polynomial base = *this;
  // Single terms are raised directly so large exponents stay cheap.
  if (terms_.size() == 1) {
    const auto& [ex, c] = *terms_.begin();
    ExponentVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = checked_mul(ex[i], e);
    return term(out, power(c, e));
  }
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  require_dimension(n_, point.size());
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] > 0) t *= power(point[i], e[i]);
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  require_dimension(n_, point.size());
  std::vector<double> values;
  values.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t k = e[i];
      double b = point[i];
      double acc = 1.0;
      while (k > 0) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1;
      }
      t *= acc;
    }
    values.push_back(t);
  }
  return pairwise_sum(values);
}

Polynomial Polynomial::compose(std::span<const Polynomial> replacement) const {
  require_dimension(n_, replacement.size());
  const std::size_t out_n = replacement.empty() ? n_ : replacement.front().dimension();
  Polynomial r(out_n);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(out_n, c);
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] > 0) t = t * replacement[i].pow(e[i]);
    r += t;
  }
  return r;
}

std::string Polynomial::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != Rational(1) || e.is_zero()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << var_prefix << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension())
    throw AxisOutOfRange("axis " + std::to_string(axis) + " out of range for dimension " +
                         std::to_string(p.dimension()));
  Polynomial r(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    if (e[axis] == 0) continue;
    ExponentVector d = e;
    d[axis] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[axis])));
  }
  return r;
}

}  // namespace esl
