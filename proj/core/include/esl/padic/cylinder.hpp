#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "esl/poly_map.hpp"
#include "esl/rational.hpp"

namespace esl::padic {

inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 26;

/// Budget from ESL_CELL_BUDGET when set, otherwise `fallback`.
std::uint64_t cell_budget_from_env(std::uint64_t fallback = kDefaultCellBudget);

struct PAdicConfig {
  std::uint64_t p = 2;
  unsigned k_max = 0;
  std::uint64_t cell_budget = kDefaultCellBudget;
  unsigned workers = 1;
};

bool is_prime(std::uint64_t p);

/// p^e, or BudgetExceeded once it passes `limit`.
std::uint64_t checked_power(std::uint64_t p, std::uint64_t e, std::uint64_t limit);

/// #{x in (Z/p^k)^n : map(x) = y mod p^k} / p^(nk), exact.
/// Throws DomainError for non-integral coefficients or composite p and
/// BudgetExceeded when p^(nk) > budget.
Rational cylinder_mass(const PolyMap& map, std::uint64_t p, unsigned k,
                       std::span<const std::int64_t> y, std::uint64_t budget = kDefaultCellBudget,
                       unsigned workers = 1);

/// Counts of every y in (Z/p^k)^m, indexed by sum y_j p^(kj).
/// Both p^(nk) and p^(mk) must fit the budget.
std::vector<std::uint64_t> pushforward_counts(const PolyMap& map, std::uint64_t p, unsigned k,
                                              std::uint64_t budget = kDefaultCellBudget,
                                              unsigned workers = 1);

struct PadicMassRow {
  unsigned k = 0;
  Rational mass;
  /// mass * p^(mk): pushforward mass over Haar mass of the target ball.
  Rational ratio;
};

struct PadicMassTable {
  std::uint64_t p = 0;
  std::size_t m = 1;
  std::vector<PadicMassRow> rows;

  /// Columns k, mass_num, mass_den, ratio_num, ratio_den.
  void write_csv(std::ostream& os) const;
};

/// Rows k = 0..k_max for the ball around y.
PadicMassTable ball_ratio_sequence(const PolyMap& map, const PAdicConfig& cfg,
                                   std::span<const std::int64_t> y);

/// Exact ball ratio of (x, y) -> xy around 0 at depth k: (k+1) - k/p.
Rational closed_form_xy_ratio(std::uint64_t p, unsigned k);

}  // namespace esl::padic
