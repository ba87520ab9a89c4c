#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace ostro::cli {

enum class Command { catalog, emit, verify, conserve, simulate, reduce, identity };

std::string to_string(Command command);
std::optional<Command> command_from_string(std::string_view name);

/// Malformed or unknown configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::optional<std::string> out;
};

/// Runs one command on a parsed config document and returns the exit code.
/// Reports go to `out` (or the --out file), diagnostics to `err`.
int run(Command command, const nlohmann::json& config, const Options& options, std::ostream& out,
        std::ostream& err);

/// argv entry point: `ostro <command> --config <path> [--json] [--out <path>]`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 17 significant digits in scientific notation.
std::string format_double(double x);

}  // namespace ostro::cli
