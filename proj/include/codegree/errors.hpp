#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codegree {

/// Precondition violated by caller-supplied data (bad vertex, bad parameter).
struct InputError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded.
struct ResourceError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A result failed its own re-verification. Indicates a bug, never bad input.
struct InternalError : std::logic_error
{
    using std::logic_error::logic_error;
};

/// Size caps shared by the generators and searches.
struct Limits
{
    std::size_t max_vertices = 243;    // materialized constructions (3^5)
    std::size_t canonical_cap = 8;     // canonical_form
    std::size_t exhaustive_cap = 6;    // ex2_exact
    std::size_t heuristic_max_n = 40;  // ex2_heuristic

    /// Defaults, with CODEGREE_LAB_MAX_N overriding max_vertices and
    /// heuristic_max_n when set to a positive integer.
    static Limits from_env();
};

} // namespace codegree
