#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yzq {

enum class OutputFormat { text, json, csv };

/// Parsed command line. Orders are validated positive by the parser.
struct RunConfig {
    std::string command;
    OutputFormat format = OutputFormat::text;
    std::string cache_dir;  // empty: no cache
    int verbosity = 0;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given as arguments (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace yzq
