#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stonework/fibered_operator.hpp"
#include "stonework/module_element.hpp"
#include "stonework/stone_spectrum.hpp"

namespace stonework::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kUnknownCommand = 4,
  kIoError = 5,
};

/// A failure that maps straight to a process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

struct AlgebraConfig {
  std::size_t n = 1;
  std::size_t m = 1;
  std::map<std::string, FiberedOperator> elements;
  std::map<std::string, ModuleElement> vectors;
  std::optional<std::uint64_t> seed;
};

/// Validates a parsed config document; throws CliError(kValidationError)
/// naming the offending field.
AlgebraConfig parse_config(const nlohmann::json& doc);

/// Reads and validates a config file. Missing or unreadable files are I/O
/// errors, malformed JSON is a parse error.
AlgebraConfig load_config(const std::string& path);

nlohmann::json to_json(const AlgebraConfig& cfg);
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const ComplexVector& v);
nlohmann::json to_json(const ComplexMatrix& a);
nlohmann::json to_json(const FiberedOperator& t);
nlohmann::json to_json(const ModuleElement& a);
nlohmann::json to_json(const Quasipoint& b);

/// Parses `omega=<int>,line=<e<k> | vector name>`; `e<k>` is 1-based.
Quasipoint parse_quasipoint(const std::string& text, const AlgebraConfig& cfg);

/// The names of all commands, in help order.
const std::vector<std::string>& command_names();

/// Runs one invocation (args excludes the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stonework::cli
