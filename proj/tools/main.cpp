#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "esl_cli/commands.hpp"
#include "esl_cli/verify.hpp"

namespace {

void print_verify_table(const nlohmann::json& report) {
  for (const auto& row : report["verify"]["checks"])
    std::cout << row["status"].get<std::string>() << "  " << row["check"].get<std::string>()
              << "  expected " << row["expected"].get<std::string>() << ", got "
              << row["actual"].get<std::string>() << "\n";
  std::cout << report["verify"]["failed"].get<std::size_t>() << " failed\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace esl::cli;
  CLI::App app{"Integrability and Fourier-decay exponents of polynomial maps"};
  app.require_subcommand(1);

  std::string spec_arg, out_path, csv_path;
  std::string jac_res, fun_res;
  unsigned workers = 1;

  auto* exact = app.add_subcommand("exact", "exact invariants at the base point");
  exact->add_option("spec", spec_arg, "map spec file or inline text")->required();
  exact->add_option("--jacobian-resolution", jac_res, "JSON resolution data for the Jacobian ideal");
  exact->add_option("--function-resolution", fun_res, "JSON resolution data for f (m = 1)");

  RealOptions real_opts;
  std::string radius = "1";
  std::vector<std::uint32_t> weights;
  auto* real = app.add_subcommand("real", "Monte Carlo estimates over the reals");
  real->add_option("spec", spec_arg, "map spec file or inline text")->required();
  real->add_option("--samples", real_opts.samples, "number of samples")->required();
  real->add_option("--seed", real_opts.seed, "random seed")->required();
  real->add_option("--bins", real_opts.bins, "log-spaced tail bins")->capture_default_str();
  real->add_option("--box", radius, "half-width of the sampling box (rational)")->capture_default_str();
  real->add_option("--weights", weights, "monomial density exponents, one per variable");
  real->add_option("--jacobian-resolution", jac_res, "JSON resolution data for the Jacobian ideal");
  real->add_option("--function-resolution", fun_res, "JSON resolution data for f");

  PadicOptions padic_opts;
  auto* padic = app.add_subcommand("padic", "exact ball masses over Q_p");
  padic->add_option("spec", spec_arg, "map spec file or inline text")->required();
  padic->add_option("-p", padic_opts.p, "prime")->required();
  padic->add_option("-k", padic_opts.k_max, "maximum depth")->required();
  padic->add_option("--budget", padic_opts.cell_budget, "cell budget (overrides ESL_CELL_BUDGET)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "built-in example suites");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(verify_suites()));

  for (auto* sub : {exact, real, padic, verify}) {
    sub->add_option("--out", out_path, "write the JSON report here");
    if (sub != verify) sub->add_option("--workers", workers, "worker threads")->capture_default_str();
  }
  for (auto* sub : {real, padic}) sub->add_option("--csv", csv_path, "write CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    ExactOptions exact_opts;
    if (!jac_res.empty()) exact_opts.jacobian_resolution = load_resolution_file(jac_res);
    if (!fun_res.empty()) exact_opts.function_resolution = load_resolution_file(fun_res);

    CommandResult result;
    if (exact->parsed()) {
      result = cmd_exact(load_map_spec(spec_arg), exact_opts);
    } else if (real->parsed()) {
      real_opts.radius = esl::Rational::parse(radius);
      if (!weights.empty()) real_opts.weights = weights;
      real_opts.workers = workers;
      if (!csv_path.empty()) real_opts.csv_path = csv_path;
      real_opts.exact = exact_opts;
      result = cmd_real(load_map_spec(spec_arg), real_opts);
    } else if (padic->parsed()) {
      padic_opts.workers = workers;
      if (!csv_path.empty()) padic_opts.csv_path = csv_path;
      result = cmd_padic(load_map_spec(spec_arg), padic_opts);
    } else {
      result = cmd_verify(suite);
      print_verify_table(result.report);
    }

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw esl::DomainError("cannot write " + out_path);
      out << result.report.dump(2) << "\n";
    }
    if (!verify->parsed()) std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "esl: " << e.what() << "\n";
    return 2;
  }
}
