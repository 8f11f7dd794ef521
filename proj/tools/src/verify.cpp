#include "esl_cli/verify.hpp"

#include <algorithm>

#include "esl/invariants.hpp"
#include "esl/lct.hpp"
#include "esl/monomial_ideal.hpp"
#include "esl/padic/cylinder.hpp"

namespace esl::cli {
namespace {

Polynomial product_power(std::size_t n, unsigned m) {
  Polynomial p = Polynomial::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) p = p * Polynomial::variable(n, i);
  return p.pow(m);
}

ExponentValue jacobian_lct(const PolyMap& map) {
  return lct_monomial(as_monomial_ideal(jacobian_ideal_generators(map))).value;
}

VerifyRow row(std::string check, const ExponentValue& expected, const ExponentValue& actual) {
  return {std::move(check), expected.str(), actual.str(), expected == actual};
}

VerifyRow flag(std::string check, bool ok) {
  return {std::move(check), "true", ok ? "true" : "false", ok};
}

std::vector<VerifyRow> howald_family() {
  std::vector<VerifyRow> rows;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (unsigned m = 2; m <= 6; ++m) {
      const PolyMap map({product_power(n, m)});
      const std::string tag = "(x1..x" + std::to_string(n) + ")^" + std::to_string(m);
      const Rational nn(static_cast<long>(n));
      const Rational mm(static_cast<long>(m));
      const ExponentValue lower = jacobian_lct(map);
      rows.push_back(row("lct jacobian " + tag, Rational(1) / (mm - Rational(1) / nn), lower));
      const ExponentValue truth = eps_from_lct(lct_principal_monomial(
                                                   map.component(0).terms().begin()->first)
                                                   .value);
      rows.push_back(row("eps* " + tag, Rational(1) / (mm - Rational(1)), truth));
      const auto upper = eps_upper_bound_complex(lower);
      rows.push_back(row("upper bound " + tag,
                         Rational(1) / (mm - Rational(1) - Rational(1) / nn),
                         upper ? *upper : ExponentValue::infinity()));
      rows.push_back(flag("sandwich " + tag, upper && lower <= truth && truth <= *upper));
    }
  }
  return rows;
}

std::vector<VerifyRow> one_dim() {
  std::vector<VerifyRow> rows;
  for (unsigned d = 1; d <= 9; ++d) {
    const PolyMap map({Polynomial::variable(1, 0).pow(d)});
    const ExponentValue expected =
        d == 1 ? ExponentValue::infinity() : ExponentValue(Rational(1, static_cast<long>(d) - 1));
    rows.push_back(row("eps* x^" + std::to_string(d) + " from jacobian",
                       expected, eps_equidimensional(map).value));
    rows.push_back(row("eps* x^" + std::to_string(d) + " from lct",
                       expected, eps_from_lct(Rational(1, static_cast<long>(d)))));
  }
  // Equidimensional family (x1^d, x1^d x2, ..., x1^d xm).
  for (unsigned d : {2u, 3u}) {
    for (std::size_t m : {2u, 3u}) {
      std::vector<Polynomial> comps;
      const Polynomial lead = Polynomial::variable(m, 0).pow(d);
      comps.push_back(lead);
      for (std::size_t i = 1; i < m; ++i) comps.push_back(lead * Polynomial::variable(m, i));
      const PolyMap map(comps);
      const long dm = static_cast<long>(d * m);
      const BoundedValue eps = eps_equidimensional(map);
      const std::string tag = "d=" + std::to_string(d) + " m=" + std::to_string(m);
      rows.push_back(row("equidimensional eps* " + tag, Rational(1, dm - 1), eps.value));
      rows.push_back({"equidimensional k* upper " + tag, std::to_string(dm + 1),
                      std::to_string(k_star_upper_from_eps(eps.value)),
                      k_star_upper_from_eps(eps.value) == dm + 1});
    }
  }
  return rows;
}

std::vector<VerifyRow> padic_xy() {
  std::vector<VerifyRow> rows;
  const PolyMap xy({Polynomial::variable(2, 0) * Polynomial::variable(2, 1)});
  const std::int64_t zero[1] = {0};
  for (std::uint64_t p : {2u, 3u, 5u}) {
    padic::PAdicConfig cfg;
    cfg.p = p;
    cfg.k_max = 4;
    const auto table = padic::ball_ratio_sequence(xy, cfg, zero);
    for (const auto& r : table.rows) {
      const Rational closed = padic::closed_form_xy_ratio(p, r.k);
      const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(r.k);
      rows.push_back({"xy ratio " + tag, closed.str(), r.ratio.str(), closed == r.ratio});
      const Rational unit = Rational(static_cast<long>(p) - 1, static_cast<long>(p));
      const Rational bound = unit * unit * Rational(static_cast<long>(r.k) + 1);
      rows.push_back({"xy ratio lower bound " + tag, ">= " + bound.str(), r.ratio.str(),
                      r.ratio >= bound});
    }
  }
  return rows;
}

std::vector<ExponentValue> rational_grid() {
  std::vector<ExponentValue> grid;
  for (long num = 1; num <= 10; ++num)
    for (long den : {1L, 2L, 3L, 7L, 11L}) grid.emplace_back(Rational(num, den));
  return grid;
}

std::vector<VerifyRow> young_algebra() {
  std::vector<VerifyRow> rows;
  const auto grid = rational_grid();
  bool round_lct = true, round_delta = true;
  for (const auto& e : grid) {
    round_lct = round_lct && eps_from_lct(lct_from_eps(e).value) == e;
    round_delta = round_delta && eps_from_delta(delta_from_eps(e)) == e;
  }
  rows.push_back(flag("eps <-> lct round trip on 50 rationals", round_lct));
  rows.push_back(flag("eps <-> delta round trip on 50 rationals", round_delta));

  bool commutative = true, monotone = true;
  for (std::size_t i = 0; i < grid.size(); i += 3) {
    for (std::size_t j = 0; j < grid.size(); j += 7) {
      const ExponentValue c = young_combine(grid[i], grid[j]);
      commutative = commutative && c == young_combine(grid[j], grid[i]);
      for (std::size_t k = 0; k < grid.size(); k += 11)
        if (grid[k] <= grid[j]) monotone = monotone && young_combine(grid[i], grid[k]) <= c;
    }
  }
  rows.push_back(flag("young_combine commutative", commutative));
  rows.push_back(flag("young_combine monotone", monotone));

  bool reverse = true;
  // young_combine(e, e) is finite only for e < 1.
  for (long i = 1; i <= 20; ++i) {
    const ExponentValue e(Rational(i, 21));
    reverse = reverse && reverse_young_self(young_combine(e, e)) == e;
  }
  rows.push_back(flag("reverse_young_self inverts young_combine(e, e) on 20 points", reverse));

  bool sandwich = true;
  for (const auto& c : grid) {
    const KStarBounds b = k_star_bounds_from_lct(c);
    if (b.degenerate) continue;
    const std::int64_t upper_eps = k_star_upper_from_eps(eps_from_lct(c));
    sandwich = sandwich && b.lower <= b.upper && b.upper <= upper_eps;
  }
  rows.push_back(flag("k* sandwich coherent on 50 lct values", sandwich));
  return rows;
}

std::vector<VerifyRow> chain() {
  std::vector<VerifyRow> rows;
  for (unsigned d = 1; d <= 9; ++d) {
    const PolyMap map({Polynomial::variable(1, 0).pow(d)});
    const ExponentValue grad = jacobian_lct(map);
    const ExponentValue f = lct_principal_monomial(ExponentVector{d}).value;
    rows.push_back(flag("chain x^" + std::to_string(d), consistency_chain_check(grad, f)));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned m = 1; m <= 6; ++m) {
      const PolyMap map({product_power(n, m)});
      const ExponentValue grad = jacobian_lct(map);
      const ExponentValue f = lct_principal_monomial(map.component(0).terms().begin()->first).value;
      rows.push_back(flag("chain (x1..x" + std::to_string(n) + ")^" + std::to_string(m),
                          consistency_chain_check(grad, f)));
    }
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"howald-family", "one-dim", "padic-xy",
                                              "young-algebra", "chain",   "all"};
  return names;
}

std::vector<VerifyRow> run_suite(const std::string& suite) {
  if (suite == "howald-family") return howald_family();
  if (suite == "one-dim") return one_dim();
  if (suite == "padic-xy") return padic_xy();
  if (suite == "young-algebra") return young_algebra();
  if (suite == "chain") return chain();
  if (suite == "all") {
    std::vector<VerifyRow> rows;
    for (const auto& name : verify_suites()) {
      if (name == "all") continue;
      for (auto& r : run_suite(name)) {
        r.check = name + ": " + r.check;
        rows.push_back(std::move(r));
      }
    }
    return rows;
  }
  throw DomainError("unknown verify suite '" + suite + "'");
}

CommandResult cmd_verify(const std::string& suite) {
  CommandResult r;
  r.report["schema"] = kReportSchema;
  r.report["command"] = "verify";
  r.report["notes"] = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& v : run_suite(suite)) {
    rows.push_back({{"check", v.check}, {"expected", v.expected}, {"actual", v.actual},
                    {"status", v.pass ? "PASS" : "FAIL"}});
    if (!v.pass) ++failed;
  }
  r.report["verify"] = {{"suite", suite}, {"checks", rows}, {"failed", failed}};
  r.exit_code = failed ? 1 : 0;
  return r;
}

}  // namespace esl::cli
