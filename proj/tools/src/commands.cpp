#include "esl_cli/commands.hpp"

#include <cmath>
#include <fstream>

#include "esl/invariants.hpp"
#include "esl/monomial_ideal.hpp"
#include "esl/padic/cylinder.hpp"
#include "esl/padic/padic_fit.hpp"
#include "esl/real/fourier.hpp"
#include "esl/real/histogram.hpp"
#include "esl/real/sampling.hpp"
#include "esl/real/tail_fit.hpp"

namespace esl::cli {

using nlohmann::json;

namespace {

constexpr double kRealTolerance = 0.15;

json valued(const ExponentValue& v, const std::string& source, FieldValidity validity) {
  json j = exponent_json(v);
  j["source"] = source;
  j["validity"] = to_string(validity);
  return j;
}

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

struct Lct {
  LctResult result;
  std::string source;
};

bool has_constant_term(const Polynomial& p) {
  return !p.coefficient(ExponentVector(p.dimension())).is_zero();
}

// Pure powers c * x_i^d in pairwise distinct variables.
std::optional<std::vector<std::uint32_t>> diagonal_degrees(const Polynomial& f) {
  std::vector<std::uint32_t> degrees;
  std::vector<bool> used(f.dimension(), false);
  for (const auto& [e, c] : f.terms()) {
    int axis = -1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (axis >= 0) return std::nullopt;
      axis = static_cast<int>(i);
    }
    if (axis < 0 || used[axis]) return std::nullopt;
    used[axis] = true;
    degrees.push_back(e[axis]);
  }
  return degrees;
}

// lct at 0 of a single function vanishing at 0.
std::optional<Lct> function_lct(const Polynomial& f, const ExactOptions& opts) {
  if (f.term_count() == 1)
    return Lct{lct_principal_monomial(f.terms().begin()->first), "lct_principal_monomial"};
  for (const auto& [e, c] : f.terms())
    if (e.degree() == 1)
      return Lct{{ExponentValue(1), FieldValidity::AllLocalFields}, "smooth point"};
  if (opts.function_resolution)
    return Lct{lct_from_resolution(*opts.function_resolution), "lct_from_resolution"};
  if (auto d = diagonal_degrees(f)) return Lct{lct_diagonal_sum(*d), "lct_diagonal_sum"};
  return std::nullopt;
}

std::optional<ExponentValue> exact_eps_of(const json& section) {
  const json& eps = section.at("eps");
  if (eps.contains("exact") && !eps["exact"].is_null())
    return ExponentValue::parse(eps["exact"]["value"].get<std::string>());
  return std::nullopt;
}

}  // namespace

ResolutionData parse_resolution_json(const json& j) {
  ResolutionData data;
  try {
    for (const auto& d : j.at("divisors")) {
      ResolutionDivisor div;
      div.a = d.at("a").get<std::uint32_t>();
      div.b = d.at("b").get<std::uint32_t>();
      div.passes_through_x = d.value("through_point", true);
      if (div.a == 0) throw DomainError("resolution divisor with a = 0");
      data.divisors.push_back(div);
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed resolution data: ") + e.what());
  }
  if (data.divisors.empty()) throw DomainError("resolution data lists no divisors");
  return data;
}

ResolutionData load_resolution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open resolution file " + path);
  return parse_resolution_json(json::parse(in));
}

json exponent_json(const ExponentValue& v) {
  json j;
  j["value"] = v.str();
  j["approx"] = v.is_finite() ? json(v.to_double()) : json(nullptr);
  return j;
}

json report_header(const std::string& command, const MapSpec& spec) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  json map;
  map["n"] = spec.n;
  map["m"] = spec.m;
  map["components"] = strings_of(spec.components);
  if (spec.point) {
    json pt = json::array();
    for (const auto& r : *spec.point) pt.push_back(r.str());
    map["point"] = pt;
  } else {
    map["point"] = nullptr;
  }
  map["canonical"] = print_map_spec(spec);
  j["map"] = map;
  j["notes"] = json::array();
  return j;
}

json exact_section(const MapSpec& spec, const ExactOptions& opts) {
  const PolyMap shifted = shift_to_origin(spec.map(), spec.base_point());
  const std::size_t n = shifted.source_dimension(), m = shifted.target_dimension();
  json j;
  json notes = json::array();
  j["shifted_map"] = strings_of(shifted.components());
  j["jacobian_minors"] = strings_of(jacobian_minors(shifted));
  j["monomial_ideal"] = nullptr;
  j["not_monomial"] = nullptr;

  const std::vector<Polynomial> gens = jacobian_ideal_generators(shifted);
  std::optional<Lct> lct_j;
  bool unit = false;
  for (const auto& g : gens) unit = unit || has_constant_term(g);
  if (unit) {
    lct_j = Lct{{ExponentValue::infinity(), FieldValidity::AllLocalFields},
                "unit ideal: a maximal minor is nonzero at the point"};
    j["monomial_ideal"] = "<1>";
  } else {
    try {
      const MonomialIdeal ideal = as_monomial_ideal(gens);
      j["monomial_ideal"] = ideal.str();
      lct_j = Lct{lct_monomial(ideal), "lct_monomial(jacobian ideal)"};
    } catch (const NotMonomial& e) {
      j["not_monomial"] = {{"generator", e.index()}, {"message", e.what()}};
      if (opts.jacobian_resolution)
        lct_j = Lct{lct_from_resolution(*opts.jacobian_resolution), "lct_from_resolution"};
    }
  }

  std::optional<Lct> lct_f;
  if (m == 1) lct_f = function_lct(shifted.component(0), opts);

  if (!lct_j && !lct_f)
    throw NotMonomial(j["not_monomial"]["generator"].get<std::size_t>());

  j["lct_jacobian"] = lct_j ? valued(lct_j->result.value, lct_j->source, lct_j->result.validity)
                            : json(nullptr);
  j["lct_function"] = lct_f ? valued(lct_f->result.value, lct_f->source, lct_f->result.validity)
                            : json(nullptr);

  json eps;
  eps["exact"] = nullptr;
  eps["lower"] = nullptr;
  eps["upper"] = nullptr;
  std::optional<ExponentValue> exact;
  FieldValidity exact_validity = FieldValidity::AllLocalFields;
  if (n == m && lct_j) {
    exact = lct_j->result.value;
    exact_validity = lct_j->result.validity;
    eps["exact"] = valued(*exact, "eps_equidimensional", exact_validity);
    notes.push_back("n = m: eps* equals the lct of the Jacobian ideal");
  } else if (lct_f) {
    exact = eps_from_lct(lct_f->result.value);
    exact_validity = lct_f->result.validity;
    eps["exact"] = valued(*exact, "eps_from_lct(lct of f)", exact_validity);
    notes.push_back("m = 1: eps* = c/(1-c) for c = lct of f - f(x0), +inf when c >= 1");
  }
  if (lct_j && n != m) {
    eps["lower"] = valued(lct_j->result.value, "eps_lower_bound", lct_j->result.validity);
    if (auto up = eps_upper_bound_complex(lct_j->result.value)) {
      const FieldValidity v = m == 1 ? lct_j->result.validity : FieldValidity::ComplexOnly;
      eps["upper"] = valued(*up, "eps_upper_bound_complex", v);
      if (m == 1) notes.push_back("m = 1: the Jacobian upper bound holds over every local field");
    }
  }
  j["eps"] = eps;

  json k;
  if (lct_f) {
    const KStarBounds b = k_star_bounds_from_lct(lct_f->result.value);
    k = {{"lower", b.lower}, {"upper", b.upper}, {"degenerate", b.degenerate},
         {"source", "k_star_bounds_from_lct"}};
  } else {
    const ExponentValue basis = exact ? *exact : lct_j->result.value;
    k = {{"lower", nullptr},
         {"upper", k_star_upper_from_eps(basis)},
         {"degenerate", false},
         {"source", exact ? "k_star_upper_from_eps" : "k_star_upper_from_eps(lower bound)"}};
  }
  if (lct_f && exact && n == m) k["upper_from_eps"] = k_star_upper_from_eps(*exact);
  j["k_bounds"] = k;

  if (m == 1 && exact) {
    json d = valued(delta_from_eps(*exact), "delta_from_eps", exact_validity);
    d["kind"] = "Exact";
    j["delta"] = d;
  } else if (m == 1 && lct_j) {
    json d = valued(delta_from_eps(lct_j->result.value), "delta_from_eps(lower bound)",
                    lct_j->result.validity);
    d["kind"] = "LowerBound";
    j["delta"] = d;
  } else {
    j["delta"] = nullptr;
  }
  j["notes"] = notes;
  return j;
}

CommandResult cmd_exact(const MapSpec& spec, const ExactOptions& opts) {
  CommandResult r;
  r.report = report_header("exact", spec);
  r.report["exact"] = exact_section(spec, opts);
  return r;
}

CommandResult cmd_real(const MapSpec& spec, const RealOptions& opts) {
  if (spec.m != 1) throw DimensionMismatch("real sampling supports m = 1 only");
  if (!(opts.radius > Rational(0))) throw DomainError("box radius must be positive");
  CommandResult r;
  r.report = report_header("real", spec);
  const PolyMap shifted = shift_to_origin(spec.map(), spec.base_point());

  real::SampleConfig cfg;
  cfg.seed = opts.seed;
  cfg.count = opts.samples;
  cfg.box.assign(spec.n, {-opts.radius, opts.radius});
  cfg.density_weights = opts.weights;
  cfg.workers = opts.workers;

  const std::vector<double> samples = real::sample_pushforward(shifted, cfg);
  const auto [lo, hi] = real::abs_quantile_window(samples);
  if (!(lo > 0) || !(hi > lo))
    throw FitError("tail window is degenerate; the map may be constant near the point");
  const real::Histogram hist = real::Histogram::log_abs(samples, lo, hi, opts.bins);
  if (opts.csv_path) {
    std::ofstream out(*opts.csv_path);
    if (!out) throw DomainError("cannot write " + *opts.csv_path);
    hist.write_csv(out);
  }
  const real::ExponentFit fit = real::fit_tail_exponent(hist);
  const real::EmpiricalEps eps = real::estimate_eps_star(fit);
  const real::FourierDecayFit fourier =
      real::estimate_delta_star_1d(shifted, cfg, real::default_t_grid());

  json s;
  s["samples"] = opts.samples;
  s["seed"] = opts.seed;
  s["bins"] = opts.bins;
  s["box_radius"] = opts.radius.str();
  s["weights"] = opts.weights ? json(*opts.weights) : json(nullptr);
  s["tail_window"] = {lo, hi};
  s["fit"] = {{"lambda_hat", fit.lambda_hat}, {"log_power", fit.log_power},
              {"stderr", fit.std_error},     {"r2", fit.r2},
              {"bins_used", fit.bins_used}};
  s["eps_estimate"] = {{"infinite", eps.infinite},
                       {"value", eps.infinite ? json(nullptr) : json(eps.value)},
                       {"stderr", eps.infinite ? json(nullptr) : json(eps.std_error)}};
  s["fourier"] = {{"delta_hat", fourier.delta_hat},
                  {"stderr", fourier.std_error},
                  {"t_range", {fourier.t_lo, fourier.t_hi}},
                  {"points_used", fourier.points_used},
                  {"superpolynomial", fourier.superpolynomial},
                  {"non_decaying", fourier.non_decaying}};
  s["distributional_check"] = nullptr;
  s["lq_scan"] = nullptr;

  json cmp = {{"status", "SKIPPED"}, {"tolerance", kRealTolerance}, {"exact", nullptr}};
  json notes = json::array({"empirical values are fixed-measure estimates on one box"});
  try {
    const json exact = exact_section(spec, opts.exact);
    r.report["exact"] = exact;
    if (auto e = exact_eps_of(exact)) {
      cmp["exact"] = e->str();
      bool pass;
      if (e->is_infinite()) {
        pass = eps.infinite;
      } else {
        const double ev = e->to_double();
        pass = !eps.infinite && std::fabs(eps.value - ev) <= kRealTolerance * ev;
        s["distributional_check"] = real::distributional_estimate_check(samples, *e);
        const real::LqScan lq = real::lq_divergence_scan(hist, 1.0 + ev);
        s["lq_scan"] = {{"q", lq.q},
                        {"local_exponent", lq.local_exponent},
                        {"local_exponent_stderr", lq.local_exponent_stderr},
                        {"growth_slope", lq.growth_slope},
                        {"diverges", lq.diverges}};
      }
      cmp["status"] = pass ? "PASS" : "FAIL";
      if (!pass) r.exit_code = 1;
    } else {
      notes.push_back("exact engine gave only bounds; no comparison made");
    }
  } catch (const Error& e) {
    notes.push_back(std::string("exact engine unavailable: ") + e.what());
  }
  s["comparison"] = cmp;
  r.report["real"] = s;
  r.report["notes"] = notes;
  return r;
}

CommandResult cmd_padic(const MapSpec& spec, const PadicOptions& opts) {
  CommandResult r;
  r.report = report_header("padic", spec);
  const PolyMap shifted = shift_to_origin(spec.map(), spec.base_point());
  padic::PAdicConfig cfg;
  cfg.p = opts.p;
  cfg.k_max = opts.k_max;
  cfg.cell_budget = opts.cell_budget ? opts.cell_budget : padic::cell_budget_from_env();
  cfg.workers = opts.workers;
  const std::vector<std::int64_t> origin(spec.m, 0);

  const padic::PadicMassTable table = padic::ball_ratio_sequence(shifted, cfg, origin);
  if (opts.csv_path) {
    std::ofstream out(*opts.csv_path);
    if (!out) throw DomainError("cannot write " + *opts.csv_path);
    table.write_csv(out);
  }
  json s;
  s["p"] = cfg.p;
  s["k_max"] = cfg.k_max;
  s["cell_budget"] = cfg.cell_budget;
  json rows = json::array();
  bool constant = true;
  for (const auto& row : table.rows) {
    rows.push_back({{"k", row.k}, {"mass", row.mass.str()}, {"ratio", row.ratio.str()}});
    constant = constant && row.ratio == table.rows.front().ratio;
  }
  s["table"] = rows;
  s["lct_fit"] = nullptr;
  s["eps_estimate"] = nullptr;
  json flags = json::array();
  json notes = json::array();
  if (constant) flags.push_back("constant ratios");

  if (spec.m == 1 && cfg.k_max >= 2) {
    try {
      const padic::PadicLctFit fit = padic::fit_padic_lct(shifted.component(0), cfg);
      s["lct_fit"] = {{"at_least_one", fit.at_least_one},
                      {"lct_hat", fit.lct_hat},
                      {"log_power", fit.log_power},
                      {"rss", fit.rss},
                      {"depths_used", fit.depths_used},
                      {"separable", fit.separable}};
    } catch (const Error& e) {
      notes.push_back(std::string("lct fit unavailable: ") + e.what());
    }
    const padic::PadicEpsEstimate est = padic::estimate_eps_padic(shifted, cfg, origin);
    s["eps_estimate"] = {{"kind", padic::to_string(est.kind)},
                         {"eps_hat", est.kind == padic::PadicEpsKind::Finite ? json(est.eps_hat)
                                                                             : json(nullptr)},
                         {"c_hat", est.c_hat},
                         {"geometric_alpha", est.geometric_alpha},
                         {"geometric_rss", est.geometric_rss},
                         {"polynomial_power", est.polynomial_power},
                         {"polynomial_rss", est.polynomial_rss}};
    if (est.log_explosion) flags.push_back("log-explosion detected");
  } else if (spec.m == 1) {
    notes.push_back("fits need k_max >= 2");
  } else {
    notes.push_back("exponent fits need m = 1; mass table only");
  }
  s["flags"] = flags;
  r.report["padic"] = s;
  r.report["notes"] = notes;
  return r;
}

}  // namespace esl::cli
