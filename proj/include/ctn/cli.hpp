#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctn/subgraph_io.hpp"

namespace ctn::cli {

inline constexpr const char* kVersion = "ctn-toolkit 1.0.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
};

/// One batch run. Fields not used by `command` keep their defaults and are
/// left out of the embedded config.
struct RunConfig
{
    std::string command; ///< build, census, verify, search, ramsey, chi, bounds, lift-demo
    int n = 4;
    int forbid = 4;
    std::string method = "local";
    std::uint64_t seed = 1;
    std::uint64_t budget = 10000;
    int restarts = 1;
    int colors = 2;
    std::string mask_path;
    std::string coloring_path;
    std::string identities = "1,2,8";
    std::string suite;
    std::string l_range = "2..10";
    std::string x = "id";
    int family = 1;
    int aux_length = 3;
    int threads = 0; ///< 0: CTN_THREADS or hardware concurrency
    std::string out;
    std::string format; ///< json or csv; empty picks from --out or the command
    std::string degrees_out;
    std::string graph_out;
};

/// The config as embedded in every report (stable key order).
Json config_to_json(const RunConfig& config);

/// Validates and executes a config; writes the report to config.out or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ctn::cli
