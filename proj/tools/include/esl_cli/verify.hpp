#pragma once

#include <string>
#include <vector>

#include "esl_cli/commands.hpp"

namespace esl::cli {

struct VerifyRow {
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Suite names accepted by run_verify, "all" included.
const std::vector<std::string>& verify_suites();

std::vector<VerifyRow> run_suite(const std::string& suite);

/// Runs one suite (or all) and builds the report; exit code 1 on any failure.
CommandResult cmd_verify(const std::string& suite);

}  // namespace esl::cli
