#include "esl/padic/cylinder.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <string>
#include <thread>

#include "esl/error.hpp"

namespace esl::padic {
namespace {

__extension__ typedef unsigned __int128 u128;

struct ModTerm {
  std::uint64_t coef;
  std::vector<std::uint32_t> exps;
};

// A polynomial with integer coefficients reduced mod `modulus`.
struct ModPoly {
  std::vector<ModTerm> terms;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint32_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1u) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

ModPoly compile(const Polynomial& f, std::uint64_t modulus) {
  ModPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_integer()) throw DomainError("p-adic enumeration needs integer coefficients");
    const std::uint64_t r = reduce(c.numerator(), modulus);
    if (r != 0) out.terms.push_back({r, e.entries});
  }
  return out;
}

std::uint64_t eval(const ModPoly& f, const std::vector<std::uint64_t>& x, std::uint64_t m) {
  std::uint64_t acc = 0;
  for (const ModTerm& t : f.terms) {
    std::uint64_t v = t.coef;
    for (std::size_t i = 0; i < x.size() && v; ++i)
      if (t.exps[i]) v = mulmod(v, powmod(x[i], t.exps[i], m), m);
    acc += v;
    if (acc >= m) acc -= m;
  }
  return acc;
}

// Calls visit(values) for every x in (Z/M)^n, splitting x_1 across workers.
// Each worker owns a slot of `accumulators`.
template <typename Acc, typename Visit>
void enumerate(std::size_t n, std::uint64_t modulus, unsigned workers, std::vector<Acc>& accumulators,
               const Visit& visit) {
  auto run = [&](unsigned w, unsigned stride) {
    std::vector<std::uint64_t> x(n, 0);
    for (std::uint64_t lead = w; lead < modulus; lead += stride) {
      x.assign(n, 0);
      x[0] = lead;
      while (true) {
        visit(accumulators[w], x);
        std::size_t i = 1;
        for (; i < n; ++i) {
          if (++x[i] < modulus) break;
          x[i] = 0;
        }
        if (i >= n) break;
      }
    }
  };
  if (workers <= 1) {
    run(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  for (auto& t : pool) t.join();
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

}  // namespace

std::uint64_t cell_budget_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("ESL_CELL_BUDGET");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0)
    throw DomainError(std::string("ESL_CELL_BUDGET is not a positive integer: ") + env);
  return v;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t checked_power(std::uint64_t p, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / p)
      throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(e) + " exceeds the budget of " +
                           std::to_string(limit) + " cells");
    r *= p;
  }
  return r;
}

Rational cylinder_mass(const PolyMap& map, std::uint64_t p, unsigned k,
                       std::span<const std::int64_t> y, std::uint64_t budget, unsigned workers) {
  check_prime(p);
  const std::size_t n = map.source_dimension(), m = map.target_dimension();
  if (y.size() != m) throw DimensionMismatch("target point must have m coordinates");
  if (!map.has_integer_coefficients())
    throw DomainError("p-adic enumeration needs integer coefficients");
  const std::uint64_t cells = checked_power(p, static_cast<std::uint64_t>(n) * k, budget);
  if (k == 0) return Rational(1);
  const std::uint64_t modulus = checked_power(p, k, budget);

  std::vector<ModPoly> comps;
  std::vector<std::uint64_t> target;
  for (std::size_t j = 0; j < m; ++j) {
    comps.push_back(compile(map.component(j), modulus));
    target.push_back(reduce(mpz_class(static_cast<long>(y[j])), modulus));
  }
  workers = std::max(1u, workers);
  std::vector<std::uint64_t> hits(workers, 0);
  enumerate(n, modulus, workers, hits, [&](std::uint64_t& acc, const std::vector<std::uint64_t>& x) {
    for (std::size_t j = 0; j < m; ++j)
      if (eval(comps[j], x, modulus) != target[j]) return;
    ++acc;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return Rational(mpz_class(std::to_string(total)), mpz_class(std::to_string(cells)));
}

std::vector<std::uint64_t> pushforward_counts(const PolyMap& map, std::uint64_t p, unsigned k,
                                              std::uint64_t budget, unsigned workers) {
  check_prime(p);
  const std::size_t n = map.source_dimension(), m = map.target_dimension();
  if (!map.has_integer_coefficients())
    throw DomainError("p-adic enumeration needs integer coefficients");
  checked_power(p, static_cast<std::uint64_t>(n) * k, budget);
  const std::uint64_t targets = checked_power(p, static_cast<std::uint64_t>(m) * k, budget);
  const std::uint64_t modulus = checked_power(p, k, budget);
  std::vector<ModPoly> comps;
  for (std::size_t j = 0; j < m; ++j) comps.push_back(compile(map.component(j), modulus));
  workers = std::max(1u, workers);
  std::vector<std::vector<std::uint64_t>> parts(workers, std::vector<std::uint64_t>(targets, 0));
  enumerate(n, modulus, workers, parts,
            [&](std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& x) {
              std::uint64_t index = 0, place = 1;
              for (std::size_t j = 0; j < m; ++j) {
                index += eval(comps[j], x, modulus) * place;
                place *= modulus;
              }
              ++acc[index];
            });
  for (unsigned w = 1; w < workers; ++w)
    for (std::uint64_t i = 0; i < targets; ++i) parts[0][i] += parts[w][i];
  return parts[0];
}

void PadicMassTable::write_csv(std::ostream& os) const {
  os << "k,mass_num,mass_den,ratio_num,ratio_den\n";
  for (const auto& r : rows)
    os << r.k << ',' << r.mass.numerator().get_str() << ',' << r.mass.denominator().get_str()
       << ',' << r.ratio.numerator().get_str() << ',' << r.ratio.denominator().get_str() << '\n';
}

PadicMassTable ball_ratio_sequence(const PolyMap& map, const PAdicConfig& cfg,
                                   std::span<const std::int64_t> y) {
  PadicMassTable t;
  t.p = cfg.p;
  t.m = map.target_dimension();
  for (unsigned k = 0; k <= cfg.k_max; ++k) {
    PadicMassRow row;
    row.k = k;
    row.mass = cylinder_mass(map, cfg.p, k, y, cfg.cell_budget, cfg.workers);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), cfg.p, static_cast<unsigned long>(t.m) * k);
    row.ratio = row.mass * Rational(scale);
    t.rows.push_back(row);
  }
  return t;
}

Rational closed_form_xy_ratio(std::uint64_t p, unsigned k) {
  check_prime(p);
  return Rational(static_cast<long>(k) + 1) -
         Rational(static_cast<long>(k), static_cast<long>(p));
}

}  // namespace esl::padic
