#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codegree/embedding.hpp"
#include "codegree/hypergraph.hpp"

namespace codegree {

enum class Ex2Method
{
    exhaustive,
    heuristic_lower_bound
};

std::string to_string( Ex2Method m );

/// ex₂(n, F): the largest minimum codegree over F-free hypergraphs on n vertices.
struct Ex2Result
{
    std::size_t n = 0;
    Hypergraph3 pattern;
    std::uint32_t value = 0;
    Hypergraph3 witness;
    Ex2Method method = Ex2Method::exhaustive;
    /// F-free isomorphism classes visited (exhaustive) or iterations run (heuristic).
    std::size_t work = 0;
};

/// Exact value by canonical augmentation: F-free classes are grown one edge
/// at a time, deduplicated by canonical form, and only the copies through the
/// new edge are searched. The witness is the canonical-form-least class
/// attaining the maximum. Throws ResourceError above limits.exhaustive_cap.
Ex2Result ex2_exact( std::size_t n, const Hypergraph3& pattern, const Limits& limits = Limits::from_env() );

struct HeuristicOptions
{
    std::size_t iterations = 2000;
    std::uint64_t seed = 0;
    /// Start state; must be F-free on n vertices. Empty hypergraph when unset.
    std::optional< Hypergraph3 > initial;
    /// Iterations without improving the best state before restarting from it.
    std::size_t restart_after = 200;
    /// Edges dropped from the best state on a restart.
    std::size_t restart_kick = 3;
    std::uint64_t budget = kDefaultBudget;
};

/// Edge-flip local search maximizing (δ₂, |E|) subject to F-freeness.
/// Deterministic for a given seed.
Ex2Result ex2_heuristic( std::size_t n, const Hypergraph3& pattern, const HeuristicOptions& options = {},
                         const Limits& limits = Limits::from_env() );

struct DensityRow
{
    std::size_t depth = 0;
    boost::multiprecision::cpp_int n;
    boost::multiprecision::cpp_int edge_count;
    Rational density;
    std::string density_decimal;
    /// Edge count also confirmed on the materialized construction.
    bool direct_checked = false;
};

/// Rows for depth 0..max_depth of the iterated construction, from
/// e(3) = 1, e(3n) = 3e(n) + n³. Depths with at most min(243, max_vertices)
/// vertices are built and counted directly as a cross-check.
std::vector< DensityRow > density_sequence( std::size_t max_depth, const Limits& limits = Limits::from_env() );

enum class Freeness
{
    contains,
    free,
    indeterminate
};

std::string to_string( Freeness f );

struct FreenessEntry
{
    std::size_t length = 0;
    Freeness verdict = Freeness::indeterminate;
    std::uint64_t nodes = 0;
    std::optional< Embedding > witness;
};

/// C_ℓ⁻ containment for each ℓ. Requires ℓ >= 4 and ℓ <= v(H).
std::vector< FreenessEntry > freeness_check( const Hypergraph3& h, std::span< const std::size_t > lengths,
                                             std::uint64_t budget = kDefaultBudget );

} // namespace codegree
