#pragma once

#include <vector>

#include "esl/rational.hpp"

namespace esl {

/// minimize c.x subject to A x = b, x >= 0, all data exact.
struct StandardFormLp {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;
};

/// Two-phase tableau simplex over the rationals. Bland's rule picks both the
/// entering and the leaving variable, so the method terminates without any
/// tolerance or anti-cycling parameter.
LpSolution solve_exact_lp(const StandardFormLp& lp);

}  // namespace esl
