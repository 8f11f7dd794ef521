#include "esl/simplex.hpp"

#include <cstddef>
#include <optional>

#include "esl/error.hpp"

namespace esl {
namespace {

class Tableau {
 public:
  // rows_[i] holds the constraint row, last entry is the right-hand side.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> cost;  // reduced costs, last entry is -objective
  std::vector<std::size_t> basis;

  std::size_t columns() const { return cost.size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational piv = rows[r][col];
    for (auto& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    if (!cost[col].is_zero()) {
      const Rational f = cost[col];
      for (std::size_t j = 0; j < cost.size(); ++j)
        if (!rows[r][j].is_zero()) cost[j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Sets the reduced-cost row for objective `c` (size = columns()).
  void price(const std::vector<Rational>& c) {
    cost.assign(c.begin(), c.end());
    cost.push_back(Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational cb = c[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= cb * rows[i][j];
    }
  }

  // Runs Bland-rule iterations over columns < limit. Returns false if unbounded.
  bool optimize(std::size_t limit) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (cost[j].sign() < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& aij = rows[i][*enter];
        if (aij.sign() <= 0) continue;
        const Rational ratio = rows[i].back() / aij;
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpSolution solve_exact_lp(const StandardFormLp& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw DimensionMismatch("lp: b has the wrong length");
  for (const auto& row : lp.a)
    if (row.size() != n) throw DimensionMismatch("lp: constraint row has the wrong length");

  Tableau t;
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(n + m + 1, Rational(0));
    const bool flip = lp.b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? -lp.a[i][j] : lp.a[i][j];
    row[n + i] = Rational(1);
    row.back() = flip ? -lp.b[i] : lp.b[i];
    t.rows.push_back(std::move(row));
    t.basis[i] = n + i;
  }

  // Phase one: drive the artificial variables to zero.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(1);
  t.price(phase1);
  t.optimize(n + m);
  if (t.cost.back().sign() != 0) return {LpStatus::Infeasible, Rational(0), {}};

  // Pivot remaining (degenerate) artificials out; rows without a real pivot are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c[j];
  t.price(phase2);
  if (!t.optimize(n)) return {LpStatus::Unbounded, Rational(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i].back();
  sol.objective = -t.cost.back();
  return sol;
}

}  // namespace esl
