#include "esl/padic/valuation.hpp"

#include <numeric>
#include <vector>

#include "esl/error.hpp"

namespace esl::padic {
namespace {

mpz_class mpz_pow(std::uint64_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

// P(val x = v) for x Haar-distributed on Z_p.
Rational valuation_probability(std::uint64_t p, unsigned v) {
  const mpz_class pv = mpz_pow(p, v + 1);
  return Rational(mpz_class(static_cast<unsigned long>(p - 1)), pv);
}

// p^-e as a rational.
Rational inverse_power(std::uint64_t p, unsigned long e) {
  return Rational(mpz_class(1), mpz_pow(p, e));
}

std::uint64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a <= 0 ? 0 : static_cast<std::uint64_t>((a + b - 1) / b);
}

Rational monomial_mass(const Rational& c, const ExponentVector& e, std::uint64_t p, unsigned k) {
  const unsigned s = valuation(c.numerator(), p);
  if (s >= k) return Rational(1);
  const unsigned target = k - s;
  // dist[j] = P(partial weighted valuation sum == j) for j < target.
  std::vector<Rational> dist(target, Rational(0));
  dist[0] = Rational(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const unsigned a = e[i];
    if (a == 0) continue;
    std::vector<Rational> next(target, Rational(0));
    for (unsigned j = 0; j < target; ++j) {
      if (dist[j].is_zero()) continue;
      for (unsigned v = 0; j + static_cast<std::uint64_t>(a) * v < target; ++v)
        next[j + a * v] += dist[j] * valuation_probability(p, v);
    }
    dist = std::move(next);
  }
  Rational below(0);
  for (const auto& d : dist) below += d;
  return Rational(1) - below;
}

// Index of the single variable a one-variable term uses, or -1.
int single_axis(const ExponentVector& e) {
  int axis = -1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

// P(u1 U^a = -u2 W^b mod p^j) for independent uniform units U, W; p odd.
Rational unit_equation_probability(const mpz_class& u1, const mpz_class& u2, unsigned long a,
                                   unsigned long b, std::uint64_t p, unsigned long j) {
  const mpz_class modulus = mpz_pow(p, j);
  const mpz_class order = mpz_class(static_cast<unsigned long>(p - 1)) * mpz_pow(p, j - 1);
  mpz_class ga, gb, g;
  mpz_gcd_ui(ga.get_mpz_t(), order.get_mpz_t(), a);
  mpz_gcd_ui(gb.get_mpz_t(), order.get_mpz_t(), b);
  mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
  mpz_class inv, z;
  if (mpz_invert(inv.get_mpz_t(), u1.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw DomainError("unit expected");
  z = -u2 * inv;
  mpz_mod(z.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  // z lies in the subgroup of index g iff z^(order/g) = 1.
  const mpz_class exponent = order / g;
  mpz_class test;
  mpz_powm(test.get_mpz_t(), z.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  if (test != 1) return Rational(0);
  return Rational(g, order);
}

Rational binomial_mass(const Rational& c1, unsigned a, const Rational& c2, unsigned b,
                       std::uint64_t p, unsigned k) {
  const unsigned s1 = valuation(c1.numerator(), p), s2 = valuation(c2.numerator(), p);
  const mpz_class u1 = c1.numerator() / mpz_pow(p, s1);
  const mpz_class u2 = c2.numerator() / mpz_pow(p, s2);
  // Both terms vanish mod p^k on their own.
  Rational mass = inverse_power(p, ceil_div(static_cast<std::int64_t>(k) - s1, a)) *
                  inverse_power(p, ceil_div(static_cast<std::int64_t>(k) - s2, b));
  // Otherwise both valuations must agree at some e < k and the units must cancel.
  for (unsigned v1 = 0; s1 + static_cast<std::uint64_t>(a) * v1 < k; ++v1) {
    const unsigned e = s1 + a * v1;
    if (e < s2 || (e - s2) % b != 0) continue;
    const unsigned v2 = (e - s2) / b;
    mass += valuation_probability(p, v1) * valuation_probability(p, v2) *
            unit_equation_probability(u1, u2, a, b, p, k - e);
  }
  return mass;
}

}  // namespace

unsigned valuation(const mpz_class& v, std::uint64_t p) {
  if (v == 0) throw DomainError("valuation of zero");
  mpz_class r = abs(v);
  unsigned count = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++count;
  }
  return count;
}

std::optional<Rational> separable_zero_mass(const Polynomial& f, std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  for (const auto& [e, c] : f.terms())
    if (!c.is_integer()) throw DomainError("p-adic counting needs integer coefficients");
  if (f.is_zero() || k == 0) return Rational(1);
  if (f.term_count() == 1) {
    const auto& [e, c] = *f.terms().begin();
    return monomial_mass(c, e, p, k);
  }
  if (f.term_count() == 2 && p != 2) {
    auto it = f.terms().begin();
    const auto& [e1, c1] = *it++;
    const auto& [e2, c2] = *it;
    const int i = single_axis(e1), j = single_axis(e2);
    if (i >= 0 && j >= 0 && i != j) return binomial_mass(c1, e1[i], c2, e2[j], p, k);
  }
  return std::nullopt;
}

Rational zero_mass(const Polynomial& f, std::uint64_t p, unsigned k, std::uint64_t budget,
                   unsigned workers) {
  if (auto fast = separable_zero_mass(f, p, k)) return *fast;
  const std::int64_t zero[1] = {0};
  return cylinder_mass(PolyMap({f}), p, k, zero, budget, workers);
}

}  // namespace esl::padic
