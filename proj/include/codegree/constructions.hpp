#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "codegree/hypergraph.hpp"

namespace codegree {

/// F(ℓ): every base vertex i replaced by the clones i·ℓ .. i·ℓ+ℓ-1.
struct BlowUpMap
{
    Hypergraph3 base;
    std::size_t multiplicity = 1;
    Hypergraph3 result;

    Vertex part_of( Vertex x ) const noexcept { return static_cast< Vertex >( x / multiplicity ); }
    /// The c-th clone of base vertex v.
    Vertex clone( Vertex v, std::size_t c ) const noexcept
    {
        return static_cast< Vertex >( v * multiplicity + c );
    }
};

/// Half-open id range [begin, end).
using Part = std::pair< Vertex, Vertex >;

/// Iterated tripartite construction started from a single edge.
struct IteratedConstruction
{
    std::size_t depth = 0;
    Hypergraph3 result;
    /// levels[j] lists the 3^(j+1) parts at nesting level j, in id order;
    /// levels[0] is the top-level tripartition.
    std::vector< std::vector< Part > > part_boundaries;
};

/// Tight cycle on ℓ vertices: edges {i, i+1, i+2} mod ℓ. ℓ = 3 gives one edge.
Hypergraph3 tight_cycle( std::size_t length );

/// tight_cycle(ℓ) minus the edge {ℓ-2, ℓ-1, 0}. Requires ℓ >= 4.
Hypergraph3 tight_cycle_minus( std::size_t length );

BlowUpMap blow_up( const Hypergraph3& base, std::size_t multiplicity );

IteratedConstruction mubayi_rodl( std::size_t depth, const Limits& limits = Limits::from_env() );

/// All triples meeting each of three near-equal parts once; earlier parts
/// absorb the remainder.
Hypergraph3 balanced_tripartite_complete( std::size_t n );

/// K_n^(3).
Hypergraph3 complete( std::size_t n );

/// Part sizes used by balanced_tripartite_complete.
std::array< std::size_t, 3 > tripartite_part_sizes( std::size_t n );

} // namespace codegree
