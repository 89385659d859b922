#include "codegree/extremal_search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "codegree/constructions.hpp"

namespace codegree {

std::string to_string( Ex2Method m )
{
    return m == Ex2Method::exhaustive ? "exhaustive" : "heuristic-lower-bound";
}

std::string to_string( Freeness f )
{
    switch ( f ) {
    case Freeness::contains:
        return "contains";
    case Freeness::free:
        return "free";
    case Freeness::indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

namespace {

std::uint32_t min_codegree( const Hypergraph3& h )
{
    return h.n() < 2 ? 0 : degree_profile( h ).min_codegree;
}

void check_pattern( const Hypergraph3& pattern )
{
    if ( pattern.edge_count() == 0 )
        throw InputError( "pattern has no edges: every hypergraph contains it" );
}

/// F-free by exhaustive search; throws if the budget cannot decide.
bool certified_free( const Hypergraph3& pattern, const Hypergraph3& host, std::uint64_t budget = kDefaultBudget )
{
    if ( pattern.n() > host.n() )
        return true;
    const auto r = find_embedding( pattern, host, budget );
    if ( r.status == SearchStatus::indeterminate )
        throw ResourceError( "freeness certification ran out of budget" );
    return r.status == SearchStatus::none;
}

} // namespace

Ex2Result ex2_exact( std::size_t n, const Hypergraph3& pattern, const Limits& limits )
{
    check_pattern( pattern );
    if ( n < 3 )
        throw InputError( "ex2_exact needs n >= 3" );
    if ( n > limits.exhaustive_cap )
        throw ResourceError( "ex2_exact: n=" + std::to_string( n ) + " exceeds the exhaustive cap "
                             + std::to_string( limits.exhaustive_cap ) + "; use the heuristic search" );

    Ex2Result out;
    out.n = n;
    out.pattern = pattern;
    out.method = Ex2Method::exhaustive;
    if ( pattern.n() > n ) {
        out.witness = complete( n );
        out.value = static_cast< std::uint32_t >( n - 2 );
        out.work = 1;
        return out;
    }

    std::vector< Edge > slots;
    for ( Vertex a = 0; a < n; ++a )
        for ( Vertex b = a + 1; b < n; ++b )
            for ( Vertex c = b + 1; c < n; ++c )
                slots.push_back( { a, b, c } );

    std::optional< CanonicalForm > best_code;
    auto consider = [ & ]( const Hypergraph3& h, const CanonicalForm& cf ) {
        const std::uint32_t d = min_codegree( h );
        if ( !best_code || d > out.value || ( d == out.value && cf < *best_code ) ) {
            out.value = d;
            out.witness = h;
            best_code = cf;
        }
    };

    // level m holds canonical representatives of F-free classes with m edges
    std::map< CanonicalForm, Hypergraph3 > level;
    {
        Hypergraph3 empty( n );
        auto cf = canonical_form( empty, limits );
        level.emplace( cf, empty );
    }
    while ( !level.empty() ) {
        std::map< CanonicalForm, Hypergraph3 > next;
        std::set< CanonicalForm > rejected;
        for ( const auto& [ cf, h ] : level ) {
            ++out.work;
            consider( h, cf );
            for ( const Edge& e : slots ) {
                if ( h.has_edge( e ) )
                    continue;
                Hypergraph3 grown = h.with_edge( e );
                CanonicalForm gcf = canonical_form( grown, limits );
                if ( next.count( gcf ) || rejected.count( gcf ) )
                    continue;
                const auto r = find_embedding_through( pattern, grown, e );
                if ( r.status == SearchStatus::indeterminate )
                    throw ResourceError( "ex2_exact: containment search ran out of budget" );
                if ( r.status == SearchStatus::found ) {
                    rejected.insert( std::move( gcf ) );
                    continue;
                }
                Hypergraph3 rep = grown.relabeled( gcf.labeling );
                next.emplace( std::move( gcf ), std::move( rep ) );
            }
        }
        level = std::move( next );
    }
    return out;
}

Ex2Result ex2_heuristic( std::size_t n, const Hypergraph3& pattern, const HeuristicOptions& options,
                         const Limits& limits )
{
    check_pattern( pattern );
    if ( n < 3 )
        throw InputError( "ex2_heuristic needs n >= 3" );
    if ( n > limits.heuristic_max_n )
        throw ResourceError( "ex2_heuristic: n=" + std::to_string( n ) + " exceeds cap "
                             + std::to_string( limits.heuristic_max_n ) );

    Ex2Result out;
    out.n = n;
    out.pattern = pattern;
    out.method = Ex2Method::heuristic_lower_bound;

    Hypergraph3 current = options.initial ? *options.initial : Hypergraph3( n );
    if ( current.n() != n )
        throw InputError( "ex2_heuristic: initial state has the wrong vertex count" );
    if ( !certified_free( pattern, current, options.budget ) )
        throw InputError( "ex2_heuristic: initial state contains the pattern" );

    if ( pattern.n() > n ) {
        out.witness = complete( n );
        out.value = static_cast< std::uint32_t >( n - 2 );
        return out;
    }

    std::mt19937_64 rng( options.seed );
    auto pick = [ & ]( std::size_t size ) { return static_cast< std::size_t >( rng() % size ); };
    auto score = []( const Hypergraph3& h ) { return std::make_tuple( min_codegree( h ), h.edge_count() ); };

    Hypergraph3 best = current;
    auto best_score = score( best );
    std::size_t stall = 0;

    for ( std::size_t it = 0; it < options.iterations; ++it ) {
        ++out.work;
        // pairs attaining the current minimum codegree
        const std::uint32_t dmin = min_codegree( current );
        std::vector< std::pair< Vertex, Vertex > > tight;
        for ( Vertex u = 0; u < n; ++u )
            for ( Vertex v = u + 1; v < n; ++v )
                if ( current.codegree_unchecked( u, v ) == dmin )
                    tight.emplace_back( u, v );
        const auto [ u, v ] = tight[ pick( tight.size() ) ];

        std::vector< Vertex > zs;
        for ( Vertex z = 0; z < n; ++z )
            if ( z != u && z != v && !current.has_edge( u, v, z ) )
                zs.push_back( z );
        for ( std::size_t i = zs.size(); i > 1; --i )
            std::swap( zs[ i - 1 ], zs[ pick( i ) ] );

        bool added = false;
        for ( Vertex z : zs ) {
            const Edge e = make_edge( u, v, z );
            Hypergraph3 grown = current.with_edge( e );
            const auto r = find_embedding_through( pattern, grown, e, options.budget );
            if ( r.status == SearchStatus::none ) {
                current = std::move( grown );
                added = true;
                break;
            }
        }
        if ( !added ) {
            // kick: drop an edge through u or v so the pair can be served later
            std::vector< Edge > incident;
            for ( const auto& e : current.edges() )
                if ( std::find( e.begin(), e.end(), u ) != e.end() || std::find( e.begin(), e.end(), v ) != e.end() )
                    incident.push_back( e );
            if ( !incident.empty() )
                current = current.without_edge( incident[ pick( incident.size() ) ] );
        }

        const auto s = score( current );
        if ( s > best_score ) {
            best = current;
            best_score = s;
            stall = 0;
        } else if ( ++stall >= options.restart_after ) {
            current = best;
            for ( std::size_t k = 0; k < options.restart_kick && current.edge_count() > 0; ++k )
                current = current.without_edge( current.edges()[ pick( current.edge_count() ) ] );
            stall = 0;
        }
    }

    if ( !certified_free( pattern, best, options.budget ) )
        throw InternalError( "ex2_heuristic: witness contains the pattern" );
    out.witness = best;
    out.value = std::get< 0 >( best_score );
    return out;
}

std::vector< DensityRow > density_sequence( std::size_t max_depth, const Limits& limits )
{
    using boost::multiprecision::cpp_int;
    const std::size_t direct_cap = std::min< std::size_t >( 243, limits.max_vertices );
    std::vector< DensityRow > rows;
    cpp_int n = 3, e = 1;
    for ( std::size_t d = 0; d <= max_depth; ++d ) {
        if ( d > 0 ) {
            e = 3 * e + n * n * n;
            n *= 3;
        }
        DensityRow row;
        row.depth = d;
        row.n = n;
        row.edge_count = e;
        row.density = Rational( e, choose3( n ) );
        row.density_decimal = to_decimal( row.density );
        if ( n <= direct_cap ) {
            const auto built = mubayi_rodl( d, limits );
            if ( cpp_int( built.result.edge_count() ) != e || cpp_int( built.result.n() ) != n )
                throw InternalError( "density_sequence: recurrence disagrees with the construction at depth "
                                     + std::to_string( d ) );
            row.direct_checked = true;
        }
        rows.push_back( std::move( row ) );
    }
    return rows;
}

std::vector< FreenessEntry > freeness_check( const Hypergraph3& h, std::span< const std::size_t > lengths,
                                             std::uint64_t budget )
{
    std::vector< FreenessEntry > out;
    for ( std::size_t l : lengths ) {
        if ( l < 4 )
            throw InputError( "freeness_check: cycle length must be >= 4" );
        if ( l > h.n() )
            throw InputError( "freeness_check: C" + std::to_string( l ) + "- has more vertices than the host" );
        FreenessEntry entry;
        entry.length = l;
        auto r = find_embedding( tight_cycle_minus( l ), h, budget );
        entry.nodes = r.nodes;
        switch ( r.status ) {
        case SearchStatus::found:
            entry.verdict = Freeness::contains;
            entry.witness = std::move( r.embedding );
            break;
        case SearchStatus::none:
            entry.verdict = Freeness::free;
            break;
        case SearchStatus::indeterminate:
            entry.verdict = Freeness::indeterminate;
            break;
        }
        out.push_back( std::move( entry ) );
    }
    return out;
}

} // namespace codegree
