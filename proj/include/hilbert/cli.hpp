#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbert::cli {

enum class Command { norms, series, region, monotone, compare, em_check, schur };
enum class Format { json, csv, text };

/// Malformed command line or parameter value; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::norms;
    /// Raw flag values keyed by flag name without dashes ("alpha", "step", ...).
    /// Rational-valued keys accept "a/b".
    std::map<std::string, std::string> params;
    std::optional<std::string> output_path;
    Format format = Format::json;
    unsigned threads = 1; ///< 0 = hardware concurrency
    bool deterministic = false; ///< report timing_ms as 0
};

struct RunOutcome {
    int exit_code = 0;
    std::string report; ///< empty when exit_code is 2 or 3
    std::string error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Keys each command accepts.
const std::vector<std::string>& accepted_keys(Command command);

std::string command_name(Command command);

/// Builds a config from argv. Throws UsageError; `--help` output is written to
/// `out` and reported through the returned nullopt.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Validates the config and runs the command without touching any stream.
RunOutcome execute(const RunConfig& config);

/// execute() plus writing the report to config.output_path or `out`, and
/// diagnostics to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace hilbert::cli
