// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace swipt::cli {

/// Exit codes of the swipt_sim tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Raised for unknown keys, missing flags and unparsable values. The message
/// names the offending key.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Parses a flat key=value file. Blank lines and lines starting with '#' are
/// ignored; keys are trimmed. Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Entry point of the command-line tool; returns the process exit status.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SelftestScale
{
    std::size_t oracle_instances = 40;
    std::size_t kkt_instances = 500;
    std::size_t boundary_instances = 200;
    std::size_t split_instances = 100;
    std::size_t approx_instances = 200;
    std::uint64_t seed = 20180101;
};

/// Reduced-scale property checks; prints one PASS/FAIL line each and returns
/// the number of failures.
int run_selftest(std::ostream& out, const SelftestScale& scale = {});

} // namespace swipt::cli
