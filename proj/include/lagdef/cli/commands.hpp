#pragma once

#include "lagdef/cli/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagdef::cli {

struct CommandOptions {
    int degree = 4;
    int param_degree = 2;
    Format format = Format::Json;
    std::string order = "local";
    std::string mode = "absolute";
    bool timing = false;
    /// Upper bound on both truncation degrees, from LAGDEF_MAX_DEGREE.
    std::optional<int> max_degree;
};

/// Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure
/// or a negative verdict.
struct CommandResult {
    int exit_code = 0;
    /// Empty for usage and parse errors.
    std::optional<Json> report;
    std::string output;
    std::string error;
    /// The error carries a line:column position in the input.
    bool parse_error = false;
};

const std::vector<std::string> &command_names();

CommandResult run_command(const std::string &name, std::string_view input,
                          const CommandOptions &options);

/// Reads LAGDEF_MAX_DEGREE; throws std::invalid_argument if it is set but
/// not a non-negative integer.
std::optional<int> max_degree_from_env();

} // namespace lagdef::cli
