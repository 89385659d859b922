#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codegree/embedding.hpp"

namespace codegree::cli {

enum class ReportFormat
{
    text,
    records  // one `key=value ...` line per result
};

enum ExitCode : int
{
    kOk = 0,
    kIndeterminate = 1,
    kUsage = 2,
    kIo = 3
};

struct RunConfig
{
    std::string subcommand;

    // construct
    std::string generator;
    std::size_t length = 5;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::size_t multiplicity = 2;
    std::string base;

    std::string input;
    std::string output;
    std::string pattern;
    std::string host;
    std::string report;
    std::string initial;

    std::optional< double > epsilon;
    std::optional< std::uint64_t > seed;
    std::uint64_t budget = kDefaultBudget;
    bool extended = false;
    bool apex_max_degree = false;

    bool heuristic = false;
    std::size_t iterations = 2000;
    std::size_t max_depth = 3;
    std::vector< std::size_t > lengths;

    int verbosity = 0;
    ReportFormat format = ReportFormat::text;

    /// Set when --help was requested; run() prints it and exits 0.
    std::string help;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// argv[0] is the program name. Throws UsageError on bad input.
RunConfig parse_args( const std::vector< std::string >& argv );

/// Executes a validated config. Returns the process exit code.
int run( const RunConfig& config, std::ostream& out, std::ostream& err );

/// parse_args + run with the exit-code contract applied.
int main_entry( const std::vector< std::string >& argv, std::ostream& out, std::ostream& err );

} // namespace codegree::cli
