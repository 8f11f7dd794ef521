#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esl/lct.hpp"
#include "esl_cli/map_spec.hpp"

namespace esl::cli {

inline constexpr const char* kReportSchema = "esl-report/1";

/// Outcome of a command: the report plus the process exit code.
struct CommandResult {
  nlohmann::json report;
  int exit_code = 0;
};

struct ExactOptions {
  /// Resolution data for the Jacobian ideal, used when it is not monomial.
  std::optional<ResolutionData> jacobian_resolution;
  /// Resolution data for f - f(x0) when m = 1.
  std::optional<ResolutionData> function_resolution;
};

/// Parses {"divisors": [{"a": 2, "b": 1, "through_point": true}, ...]}.
ResolutionData parse_resolution_json(const nlohmann::json& j);
ResolutionData load_resolution_file(const std::string& path);

struct RealOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::size_t bins = 64;
  /// Per-axis half-width of the box around the base point.
  Rational radius = Rational(1);
  std::optional<std::vector<std::uint32_t>> weights;
  unsigned workers = 1;
  std::optional<std::string> csv_path;
  ExactOptions exact;
};

struct PadicOptions {
  std::uint64_t p = 3;
  unsigned k_max = 4;
  std::uint64_t cell_budget = 0;  // 0: ESL_CELL_BUDGET or the default
  unsigned workers = 1;
  std::optional<std::string> csv_path;
};

/// Common report skeleton with the schema tag and the map echo.
nlohmann::json report_header(const std::string& command, const MapSpec& spec);

/// JSON form of an exponent: {"value": "1/2" | "inf", "approx": 0.5 | null}.
nlohmann::json exponent_json(const ExponentValue& v);

/// Exact invariants. Throws NotMonomial when no route to an exact lct exists.
nlohmann::json exact_section(const MapSpec& spec, const ExactOptions& opts);

CommandResult cmd_exact(const MapSpec& spec, const ExactOptions& opts);
CommandResult cmd_real(const MapSpec& spec, const RealOptions& opts);
CommandResult cmd_padic(const MapSpec& spec, const PadicOptions& opts);

}  // namespace esl::cli
