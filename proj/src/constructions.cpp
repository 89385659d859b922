#include "codegree/constructions.hpp"

#include <set>
#include <string>

namespace codegree {

Hypergraph3 tight_cycle( std::size_t length )
{
    if ( length < 3 )
        throw InputError( "tight_cycle needs length >= 3" );
    std::set< Edge > edges;
    for ( std::size_t i = 0; i < length; ++i )
        edges.insert( make_edge( static_cast< Vertex >( i ),
                                 static_cast< Vertex >( ( i + 1 ) % length ),
                                 static_cast< Vertex >( ( i + 2 ) % length ) ) );
    return Hypergraph3( length, { edges.begin(), edges.end() } );
}

Hypergraph3 tight_cycle_minus( std::size_t length )
{
    if ( length < 4 )
        throw InputError( "tight_cycle_minus needs length >= 4" );
    const Vertex l = static_cast< Vertex >( length );
    return tight_cycle( length ).without_edge( make_edge( l - 2, l - 1, 0 ) );
}

BlowUpMap blow_up( const Hypergraph3& base, std::size_t multiplicity )
{
    if ( multiplicity < 1 )
        throw InputError( "blow_up needs multiplicity >= 1" );
    BlowUpMap out;
    out.base = base;
    out.multiplicity = multiplicity;
    std::vector< Edge > edges;
    edges.reserve( base.edge_count() * multiplicity * multiplicity * multiplicity );
    for ( const auto& e : base.edges() )
        for ( std::size_t i = 0; i < multiplicity; ++i )
            for ( std::size_t j = 0; j < multiplicity; ++j )
                for ( std::size_t k = 0; k < multiplicity; ++k )
                    edges.push_back( { out.clone( e[ 0 ], i ), out.clone( e[ 1 ], j ), out.clone( e[ 2 ], k ) } );
    out.result = Hypergraph3( base.n() * multiplicity, std::move( edges ) );
    return out;
}

IteratedConstruction mubayi_rodl( std::size_t depth, const Limits& limits )
{
    std::size_t n = 3;
    for ( std::size_t d = 0; d < depth; ++d ) {
        if ( n > limits.max_vertices )
            break;
        n *= 3;
    }
    if ( n > limits.max_vertices )
        throw ResourceError( "mubayi_rodl depth " + std::to_string( depth ) + " exceeds vertex budget "
                             + std::to_string( limits.max_vertices ) );

    IteratedConstruction out;
    out.depth = depth;
    std::vector< Edge > edges{ { 0, 1, 2 } };
    std::size_t cur = 3;
    for ( std::size_t d = 0; d < depth; ++d ) {
        std::vector< Edge > next;
        const std::size_t crossing = cur * cur * cur;
        next.reserve( 3 * edges.size() + crossing );
        for ( std::size_t copy = 0; copy < 3; ++copy ) {
            const Vertex off = static_cast< Vertex >( copy * cur );
            for ( const auto& e : edges )
                next.push_back( { e[ 0 ] + off, e[ 1 ] + off, e[ 2 ] + off } );
        }
        const Vertex c = static_cast< Vertex >( cur );
        for ( Vertex a = 0; a < c; ++a )
            for ( Vertex b = c; b < 2 * c; ++b )
                for ( Vertex z = 2 * c; z < 3 * c; ++z )
                    next.push_back( { a, b, z } );
        edges = std::move( next );
        cur *= 3;
    }
    out.result = Hypergraph3( cur, std::move( edges ) );

    // level j splits the vertex range into 3^(j+1) blocks of size 3^(depth-j)
    std::size_t block = cur / 3;
    for ( std::size_t j = 0; j <= depth; ++j, block /= 3 ) {
        std::vector< Part > level;
        for ( std::size_t start = 0; start < cur; start += block )
            level.emplace_back( static_cast< Vertex >( start ), static_cast< Vertex >( start + block ) );
        out.part_boundaries.push_back( std::move( level ) );
    }
    return out;
}

std::array< std::size_t, 3 > tripartite_part_sizes( std::size_t n )
{
    std::array< std::size_t, 3 > sizes{ n / 3, n / 3, n / 3 };
    for ( std::size_t i = 0; i < n % 3; ++i )
        ++sizes[ i ];
    return sizes;
}

Hypergraph3 balanced_tripartite_complete( std::size_t n )
{
    if ( n < 3 )
        throw InputError( "balanced_tripartite_complete needs n >= 3" );
    const auto sizes = tripartite_part_sizes( n );
    const Vertex s0 = static_cast< Vertex >( sizes[ 0 ] );
    const Vertex s1 = static_cast< Vertex >( sizes[ 0 ] + sizes[ 1 ] );
    const Vertex s2 = static_cast< Vertex >( n );
    std::vector< Edge > edges;
    edges.reserve( sizes[ 0 ] * sizes[ 1 ] * sizes[ 2 ] );
    for ( Vertex a = 0; a < s0; ++a )
        for ( Vertex b = s0; b < s1; ++b )
            for ( Vertex c = s1; c < s2; ++c )
                edges.push_back( { a, b, c } );
    return Hypergraph3( n, std::move( edges ) );
}

Hypergraph3 complete( std::size_t n )
{
    std::vector< Edge > edges;
    const Vertex m = static_cast< Vertex >( n );
    for ( Vertex a = 0; a < m; ++a )
        for ( Vertex b = a + 1; b < m; ++b )
            for ( Vertex c = b + 1; c < m; ++c )
                edges.push_back( { a, b, c } );
    return Hypergraph3( n, std::move( edges ) );
}

} // namespace codegree
