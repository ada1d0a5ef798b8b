#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anglegauge/matrix_io.hpp"

namespace anglegauge {

inline constexpr const char* kToolVersion = "0.1.0";

struct CliConfig {
  enum class Command { analyze, witness, verify };
  enum class Output { json, text };

  Command command = Command::analyze;
  std::string matrix_path;
  std::optional<MatrixFormat> format;
  std::vector<double> c_values;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  Output output = Output::json;
};

/// Executes a parsed config. Exit code 0 on success, 1 when a verify check
/// fails, 2 on input or usage errors (structured error JSON on stdout).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full argv path: parses command-line arguments, then calls run().
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace anglegauge
