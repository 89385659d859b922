#include "codegree/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "codegree/constructions.hpp"

namespace codegree {

std::string to_string( SearchStatus s )
{
    switch ( s ) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none:
        return "none";
    case SearchStatus::indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

bool verify_embedding( const Embedding& e )
{
    if ( e.map.size() != e.pattern.n() )
        throw InputError( "embedding map size " + std::to_string( e.map.size() ) + " != pattern vertex count "
                          + std::to_string( e.pattern.n() ) );
    std::vector< bool > used( e.host.n(), false );
    for ( Vertex x : e.map ) {
        if ( x >= e.host.n() || used[ x ] )
            return false;
        used[ x ] = true;
    }
    for ( const auto& f : e.pattern.edges() )
        if ( !e.host.has_edge( e.map[ f[ 0 ] ], e.map[ f[ 1 ] ], e.map[ f[ 2 ] ] ) )
            return false;
    return true;
}

namespace {

constexpr Vertex kUnmapped = std::numeric_limits< Vertex >::max();

struct Fixed
{
    Vertex pattern;
    Vertex host;
};

class Matcher
{
public:
    Matcher( const Hypergraph3& pattern, const Hypergraph3& host, std::uint64_t budget )
        : f_( pattern )
        , h_( host )
        , budget_( budget )
        , map_( pattern.n(), kUnmapped )
        , used_( host.n() )
    {}

    /// Runs one search with `fixed` pre-placed. nodes accumulate across calls.
    SearchStatus run( std::span< const Fixed > fixed )
    {
        std::fill( map_.begin(), map_.end(), kUnmapped );
        used_.clear();
        for ( const auto& fx : fixed ) {
            if ( used_.test( fx.host ) || map_[ fx.pattern ] != kUnmapped )
                return SearchStatus::none;
            map_[ fx.pattern ] = fx.host;
            used_.set( fx.host );
        }
        for ( const auto& e : f_.edges() ) {
            const Vertex a = map_[ e[ 0 ] ], b = map_[ e[ 1 ] ], c = map_[ e[ 2 ] ];
            if ( a != kUnmapped && b != kUnmapped && c != kUnmapped && !h_.has_edge( a, b, c ) )
                return SearchStatus::none;
        }
        plan( fixed );
        exhausted_ = false;
        const bool ok = extend( 0 );
        if ( ok )
            return SearchStatus::found;
        return exhausted_ ? SearchStatus::indeterminate : SearchStatus::none;
    }

    const std::vector< Vertex >& map() const noexcept { return map_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    struct Step
    {
        Vertex vertex;
        std::uint32_t degree;
        // earlier-placed pattern pairs closing an edge with `vertex`
        std::vector< std::pair< Vertex, Vertex > > closing;
        // earlier-placed p with codegree_F(vertex, p) > 0
        std::vector< std::pair< Vertex, std::uint32_t > > codegree_req;
    };

    void plan( std::span< const Fixed > fixed )
    {
        const std::size_t n = f_.n();
        std::vector< bool > placed( n, false );
        for ( const auto& fx : fixed )
            placed[ fx.pattern ] = true;
        steps_.clear();

        for ( std::size_t round = fixed.size(); round < n; ++round ) {
            // most constrained: edges closed by placed vertices, then edges
            // touching placed vertices, then degree, then smallest id
            Vertex best = kUnmapped;
            std::tuple< int, int, std::uint32_t > best_key{ -1, -1, 0 };
            for ( Vertex p = 0; p < n; ++p ) {
                if ( placed[ p ] )
                    continue;
                int closed = 0, touching = 0;
                for ( const auto& e : f_.edges() ) {
                    if ( e[ 0 ] != p && e[ 1 ] != p && e[ 2 ] != p )
                        continue;
                    int others = 0;
                    for ( Vertex x : e )
                        if ( x != p && placed[ x ] )
                            ++others;
                    closed += others == 2;
                    touching += others >= 1;
                }
                std::tuple< int, int, std::uint32_t > key{ closed, touching, f_.degree_unchecked( p ) };
                if ( best == kUnmapped || key > best_key ) {
                    best = p;
                    best_key = key;
                }
            }
            Step s;
            s.vertex = best;
            s.degree = f_.degree_unchecked( best );
            for ( const auto& e : f_.edges() ) {
                if ( e[ 0 ] != best && e[ 1 ] != best && e[ 2 ] != best )
                    continue;
                Vertex o[ 2 ];
                int k = 0;
                for ( Vertex x : e )
                    if ( x != best )
                        o[ k++ ] = x;
                if ( placed[ o[ 0 ] ] && placed[ o[ 1 ] ] )
                    s.closing.emplace_back( o[ 0 ], o[ 1 ] );
            }
            for ( Vertex p = 0; p < n; ++p )
                if ( p != best && placed[ p ] && f_.codegree_unchecked( best, p ) > 0 )
                    s.codegree_req.emplace_back( p, f_.codegree_unchecked( best, p ) );
            placed[ best ] = true;
            steps_.push_back( std::move( s ) );
        }
        scratch_.assign( steps_.size(), Bitset( h_.n() ) );
    }

    bool extend( std::size_t depth )
    {
        if ( depth == steps_.size() )
            return true;
        const Step& s = steps_[ depth ];
        Bitset& cand = scratch_[ depth ];
        if ( s.closing.empty() ) {
            cand.fill();
        } else {
            const auto [ a, b ] = s.closing.front();
            cand = Bitset( h_.row( map_[ a ], map_[ b ] ) );
            for ( std::size_t i = 1; i < s.closing.size(); ++i )
                cand &= h_.row( map_[ s.closing[ i ].first ], map_[ s.closing[ i ].second ] );
        }
        cand.subtract( used_ );

        for ( std::size_t x = cand.first(); x < cand.size(); x = cand.next( x + 1 ) ) {
            const Vertex hx = static_cast< Vertex >( x );
            if ( h_.degree_unchecked( hx ) < s.degree )
                continue;
            bool ok = true;
            for ( const auto& [ p, need ] : s.codegree_req )
                if ( h_.codegree_unchecked( hx, map_[ p ] ) < need ) {
                    ok = false;
                    break;
                }
            if ( !ok )
                continue;
            if ( nodes_ >= budget_ ) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            map_[ s.vertex ] = hx;
            used_.set( hx );
            if ( extend( depth + 1 ) )
                return true;
            used_.reset( hx );
            map_[ s.vertex ] = kUnmapped;
            if ( exhausted_ )
                return false;
        }
        return false;
    }

    const Hypergraph3& f_;
    const Hypergraph3& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector< Vertex > map_;
    Bitset used_;
    std::vector< Step > steps_;
    std::vector< Bitset > scratch_;
};

void check_sizes( const Hypergraph3& pattern, const Hypergraph3& host )
{
    if ( pattern.n() > host.n() )
        throw InputError( "pattern has more vertices than host" );
}

SearchResult finish( Matcher& m, SearchStatus status, const Hypergraph3& pattern, const Hypergraph3& host )
{
    SearchResult r;
    r.status = status;
    r.nodes = m.nodes();
    if ( status == SearchStatus::found ) {
        r.embedding = Embedding{ pattern, host, m.map() };
        if ( !verify_embedding( *r.embedding ) )
            throw InternalError( "containment search produced an invalid embedding" );
    }
    return r;
}

} // namespace

SearchResult find_embedding( const Hypergraph3& pattern, const Hypergraph3& host, std::uint64_t budget )
{
    check_sizes( pattern, host );
    Matcher m( pattern, host, budget );
    const auto status = m.run( {} );
    return finish( m, status, pattern, host );
}

SearchResult find_embedding_through( const Hypergraph3& pattern, const Hypergraph3& host, const Edge& host_edge,
                                     std::uint64_t budget )
{
    check_sizes( pattern, host );
    if ( !host.has_edge( host_edge ) )
        throw InputError( "find_embedding_through: edge not in host" );
    Matcher m( pattern, host, budget );
    bool indeterminate = false;
    for ( const auto& f : pattern.edges() ) {
        std::array< Vertex, 3 > target = host_edge;
        std::sort( target.begin(), target.end() );
        do {
            const Fixed fixed[ 3 ] = { { f[ 0 ], target[ 0 ] }, { f[ 1 ], target[ 1 ] }, { f[ 2 ], target[ 2 ] } };
            const auto status = m.run( fixed );
            if ( status == SearchStatus::found )
                return finish( m, status, pattern, host );
            if ( status == SearchStatus::indeterminate ) {
                indeterminate = true;
                break;
            }
        } while ( std::next_permutation( target.begin(), target.end() ) );
        if ( indeterminate )
            break;
    }
    return finish( m, indeterminate ? SearchStatus::indeterminate : SearchStatus::none, pattern, host );
}

Embedding compose( const Embedding& inner, const Embedding& outer )
{
    if ( !( inner.host == outer.pattern ) )
        throw InputError( "compose: inner host differs from outer pattern" );
    if ( inner.map.size() != inner.pattern.n() || outer.map.size() != outer.pattern.n() )
        throw InputError( "compose: malformed map" );
    Embedding out{ inner.pattern, outer.host, {} };
    out.map.reserve( inner.map.size() );
    for ( Vertex x : inner.map ) {
        if ( x >= outer.map.size() )
            throw InputError( "compose: inner map out of range" );
        out.map.push_back( outer.map[ x ] );
    }
    return out;
}

Embedding explicit_c7_embedding()
{
    const BlowUpMap host = blow_up( tight_cycle_minus( 5 ), 2 );
    const auto v = [ & ]( Vertex i ) { return host.clone( i - 1, 0 ); };
    const auto v_copy = [ & ]( Vertex i ) { return host.clone( i - 1, 1 ); };
    // C7⁻ here misses {w6, w7, w1}; rotate the cyclic order so that the
    // missing triple lands on v3' v5 v2'.
    Embedding e{ tight_cycle_minus( 7 ), host.result, { v_copy( 2 ), v( 1 ), v( 3 ), v( 2 ), v( 4 ), v_copy( 3 ), v( 5 ) } };
    if ( !verify_embedding( e ) )
        throw InternalError( "explicit C7- embedding failed verification" );
    return e;
}

Embedding inductive_embedding( std::size_t length, std::uint64_t budget )
{
    if ( length < 8 )
        throw InputError( "inductive_embedding needs length >= 8" );
    const Hypergraph3 pattern = tight_cycle_minus( length );
    const BlowUpMap host = blow_up( tight_cycle_minus( length - 3 ), 2 );
    auto r = find_embedding( pattern, host.result, budget );
    if ( r.status == SearchStatus::indeterminate )
        throw ResourceError( "inductive_embedding: budget exhausted for length " + std::to_string( length ) );
    if ( r.status == SearchStatus::none )
        throw InternalError( "inductive_embedding: no copy of C" + std::to_string( length ) + "- found" );
    return std::move( *r.embedding );
}

// ---------------------------------------------------------------------------
// canonical form

std::string CanonicalForm::bits() const
{
    const std::size_t slots = n < 3 ? 0 : n * ( n - 1 ) * ( n - 2 ) / 6;
    std::string out;
    out.reserve( slots );
    for ( std::size_t s = 0; s < slots; ++s )
        out.push_back( ( code[ s / kWordBits ] >> ( kWordBits - 1 - s % kWordBits ) ) & 1U ? '1' : '0' );
    return out;
}

namespace {

class Canonicalizer
{
public:
    explicit Canonicalizer( const Hypergraph3& h )
        : h_( h )
        , n_( h.n() )
        , slot_( n_ * n_ * n_, 0 )
    {
        std::size_t s = 0;
        for ( std::size_t a = 0; a < n_; ++a )
            for ( std::size_t b = a + 1; b < n_; ++b )
                for ( std::size_t c = b + 1; c < n_; ++c )
                    slot_[ ( a * n_ + b ) * n_ + c ] = s++;
        words_ = words_for( s );

        // vertex invariant: degree, then sorted codegree row
        std::vector< std::pair< std::uint32_t, std::vector< std::uint32_t > > > inv( n_ );
        for ( Vertex v = 0; v < n_; ++v ) {
            inv[ v ].first = h.degree_unchecked( v );
            for ( Vertex u = 0; u < n_; ++u )
                if ( u != v )
                    inv[ v ].second.push_back( h.codegree_unchecked( u, v ) );
            std::sort( inv[ v ].second.begin(), inv[ v ].second.end() );
        }
        order_.resize( n_ );
        std::iota( order_.begin(), order_.end(), 0 );
        std::stable_sort( order_.begin(), order_.end(), [ & ]( Vertex a, Vertex b ) { return inv[ a ] < inv[ b ]; } );
        // class_of_label[i]: which invariant class label i must come from
        class_start_.resize( n_ );
        for ( std::size_t i = 0; i < n_; ++i )
            class_start_[ i ] = ( i > 0 && inv[ order_[ i ] ] == inv[ order_[ i - 1 ] ] ) ? class_start_[ i - 1 ] : i;
        class_end_.resize( n_ );
        for ( std::size_t i = n_; i-- > 0; )
            class_end_[ i ] = ( i + 1 < n_ && class_start_[ i + 1 ] == class_start_[ i ] ) ? class_end_[ i + 1 ] : i + 1;
    }

    CanonicalForm run()
    {
        CanonicalForm best;
        best.n = n_;
        label_.assign( n_, kUnmapped );
        taken_.assign( n_, false );
        current_.assign( words_, 0 );
        have_best_ = false;
        assign( 0, best );
        if ( n_ == 0 )
            best.code.clear();
        return best;
    }

private:
    void assign( std::size_t pos, CanonicalForm& best )
    {
        if ( pos == n_ ) {
            std::fill( current_.begin(), current_.end(), 0 );
            for ( const auto& e : h_.edges() ) {
                std::array< std::size_t, 3 > l{ label_[ e[ 0 ] ], label_[ e[ 1 ] ], label_[ e[ 2 ] ] };
                std::sort( l.begin(), l.end() );
                const std::size_t s = slot_[ ( l[ 0 ] * n_ + l[ 1 ] ) * n_ + l[ 2 ] ];
                current_[ s / kWordBits ] |= word_type{ 1 } << ( kWordBits - 1 - s % kWordBits );
            }
            if ( !have_best_ || current_ < best.code ) {
                best.code = current_;
                best.labeling = label_;
                have_best_ = true;
            }
            return;
        }
        // label `pos` goes to some unused member of its invariant class
        for ( std::size_t i = class_start_[ pos ]; i < class_end_[ pos ]; ++i ) {
            if ( taken_[ i ] )
                continue;
            taken_[ i ] = true;
            label_[ order_[ i ] ] = static_cast< Vertex >( pos );
            assign( pos + 1, best );
            label_[ order_[ i ] ] = kUnmapped;
            taken_[ i ] = false;
        }
    }

    const Hypergraph3& h_;
    std::size_t n_;
    std::size_t words_ = 0;
    std::vector< std::size_t > slot_;
    std::vector< Vertex > order_;
    std::vector< std::size_t > class_start_, class_end_;
    std::vector< Vertex > label_;
    std::vector< bool > taken_;
    std::vector< word_type > current_;
    bool have_best_ = false;
};

} // namespace

CanonicalForm canonical_form( const Hypergraph3& h, const Limits& limits )
{
    if ( h.n() > limits.canonical_cap )
        throw ResourceError( "canonical_form: n=" + std::to_string( h.n() ) + " exceeds cap "
                             + std::to_string( limits.canonical_cap ) );
    return Canonicalizer( h ).run();
}

Hypergraph3 canonical_hypergraph( const Hypergraph3& h, const Limits& limits )
{
    const auto cf = canonical_form( h, limits );
    return h.relabeled( cf.labeling );
}

} // namespace codegree
