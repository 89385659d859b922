#include "codegree/hypergraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>

namespace codegree {

Limits Limits::from_env()
{
    Limits lim;
    if ( const char* raw = std::getenv( "CODEGREE_LAB_MAX_N" ) ) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull( raw, &end, 10 );
        if ( end != raw && *end == '\0' && v > 0 ) {
            lim.max_vertices = static_cast< std::size_t >( v );
            lim.heuristic_max_n = static_cast< std::size_t >( v );
        }
    }
    return lim;
}

Edge make_edge( Vertex a, Vertex b, Vertex c )
{
    if ( a == b || b == c || a == c )
        throw InputError( "edge needs three distinct vertices" );
    Edge e{ a, b, c };
    std::sort( e.begin(), e.end() );
    return e;
}

Hypergraph3::Hypergraph3( std::size_t n )
    : n_( n )
{
    build_index();
}

Hypergraph3::Hypergraph3( std::size_t n, std::vector< Edge > edges )
    : n_( n )
    , edges_( std::move( edges ) )
{
    if ( n_ > std::numeric_limits< Vertex >::max() )
        throw InputError( "vertex count too large" );
    for ( auto& e : edges_ ) {
        e = make_edge( e[ 0 ], e[ 1 ], e[ 2 ] );
        if ( e[ 2 ] >= n_ )
            throw InputError( "edge vertex out of range" );
    }
    std::sort( edges_.begin(), edges_.end() );
    if ( std::adjacent_find( edges_.begin(), edges_.end() ) != edges_.end() )
        throw InputError( "duplicate edge" );
    build_index();
}

void Hypergraph3::build_index()
{
    words_ = words_for( n_ );
    pair_words_.assign( n_ * n_ * words_, 0 );
    codegree_.assign( n_ * n_, 0 );
    degree_.assign( n_, 0 );
    for ( const auto& e : edges_ )
        toggle_index( e, true );
}

void Hypergraph3::toggle_index( const Edge& e, bool on )
{
    static constexpr int kRot[ 3 ][ 3 ] = { { 0, 1, 2 }, { 1, 2, 0 }, { 2, 0, 1 } };
    for ( const auto& r : kRot ) {
        const Vertex u = e[ r[ 0 ] ], v = e[ r[ 1 ] ], z = e[ r[ 2 ] ];
        for ( auto [ a, b ] : { std::pair{ u, v }, std::pair{ v, u } } ) {
            const std::size_t cell = static_cast< std::size_t >( a ) * n_ + b;
            word_type& w = pair_words_[ cell * words_ + z / kWordBits ];
            const word_type bit = word_type{ 1 } << ( z % kWordBits );
            if ( on ) {
                w |= bit;
                ++codegree_[ cell ];
            } else {
                w &= ~bit;
                --codegree_[ cell ];
            }
        }
        if ( on )
            ++degree_[ u ];
        else
            --degree_[ u ];
    }
}

Hypergraph3 Hypergraph3::with_edge( const Edge& raw ) const
{
    const Edge e = make_edge( raw[ 0 ], raw[ 1 ], raw[ 2 ] );
    if ( e[ 2 ] >= n_ )
        throw InputError( "edge vertex out of range" );
    if ( has_edge( e ) )
        throw InputError( "edge already present" );
    Hypergraph3 out = *this;
    out.edges_.insert( std::lower_bound( out.edges_.begin(), out.edges_.end(), e ), e );
    out.toggle_index( e, true );
    return out;
}

Hypergraph3 Hypergraph3::without_edge( const Edge& raw ) const
{
    const Edge e = make_edge( raw[ 0 ], raw[ 1 ], raw[ 2 ] );
    if ( e[ 2 ] >= n_ || !has_edge( e ) )
        throw InputError( "edge not present" );
    Hypergraph3 out = *this;
    out.edges_.erase( std::lower_bound( out.edges_.begin(), out.edges_.end(), e ) );
    out.toggle_index( e, false );
    return out;
}

Hypergraph3 Hypergraph3::relabeled( std::span< const Vertex > perm ) const
{
    if ( perm.size() != n_ )
        throw InputError( "permutation size mismatch" );
    std::vector< bool > seen( n_, false );
    for ( Vertex p : perm ) {
        if ( p >= n_ || seen[ p ] )
            throw InputError( "not a permutation" );
        seen[ p ] = true;
    }
    std::vector< Edge > out;
    out.reserve( edges_.size() );
    for ( const auto& e : edges_ )
        out.push_back( { perm[ e[ 0 ] ], perm[ e[ 1 ] ], perm[ e[ 2 ] ] } );
    return Hypergraph3( n_, std::move( out ) );
}

Hypergraph3 Hypergraph3::induced( std::span< const Vertex > keep ) const
{
    constexpr Vertex kAbsent = std::numeric_limits< Vertex >::max();
    std::vector< Vertex > rename( n_, kAbsent );
    for ( std::size_t i = 0; i < keep.size(); ++i ) {
        if ( keep[ i ] >= n_ || rename[ keep[ i ] ] != kAbsent )
            throw InputError( "induced: bad vertex list" );
        rename[ keep[ i ] ] = static_cast< Vertex >( i );
    }
    std::vector< Edge > out;
    for ( const auto& e : edges_ ) {
        const Vertex a = rename[ e[ 0 ] ], b = rename[ e[ 1 ] ], c = rename[ e[ 2 ] ];
        if ( a != kAbsent && b != kAbsent && c != kAbsent )
            out.push_back( { a, b, c } );
    }
    return Hypergraph3( keep.size(), std::move( out ) );
}

LinkGraph::LinkGraph( Vertex center, std::size_t n, std::vector< Pair > edges )
    : center_( center )
    , n_( n )
    , words_( words_for( n ) )
    , edges_( std::move( edges ) )
    , adj_( n * words_for( n ), 0 )
{
    if ( center_ >= n_ )
        throw InputError( "link center out of range" );
    for ( auto& [ a, b ] : edges_ ) {
        if ( a > b )
            std::swap( a, b );
        if ( a == b || b >= n_ || a == center_ || b == center_ )
            throw InputError( "invalid link edge" );
    }
    std::sort( edges_.begin(), edges_.end() );
    if ( std::adjacent_find( edges_.begin(), edges_.end() ) != edges_.end() )
        throw InputError( "duplicate link edge" );
    for ( auto [ a, b ] : edges_ ) {
        adj_[ a * words_ + b / kWordBits ] |= word_type{ 1 } << ( b % kWordBits );
        adj_[ b * words_ + a / kWordBits ] |= word_type{ 1 } << ( a % kWordBits );
    }
}

std::size_t LinkGraph::min_degree() const noexcept
{
    std::size_t best = 0;
    bool any = false;
    for ( Vertex u = 0; u < n_; ++u ) {
        if ( u == center_ )
            continue;
        const std::size_t d = degree( u );
        if ( !any || d < best )
            best = d;
        any = true;
    }
    return best;
}

std::uint32_t DegreeProfile::codegree( Vertex u, Vertex v ) const
{
    if ( u == v || u >= n || v >= n )
        throw InputError( "profile pair out of range" );
    if ( u > v )
        std::swap( u, v );
    return codegree_table[ pair_index( n, u, v ) ];
}

namespace {

void check_vertex( const Hypergraph3& h, Vertex v )
{
    if ( v >= h.n() )
        throw InputError( "vertex " + std::to_string( v ) + " out of range (n=" + std::to_string( h.n() ) + ")" );
}

void check_pair( const Hypergraph3& h, Vertex u, Vertex v )
{
    check_vertex( h, u );
    check_vertex( h, v );
    if ( u == v )
        throw InputError( "codegree needs two distinct vertices" );
}

} // namespace

std::size_t degree( const Hypergraph3& h, Vertex v )
{
    check_vertex( h, v );
    return h.degree_unchecked( v );
}

std::size_t codegree( const Hypergraph3& h, Vertex u, Vertex v )
{
    check_pair( h, u, v );
    return h.codegree_unchecked( u, v );
}

std::vector< Vertex > neighborhood( const Hypergraph3& h, Vertex u, Vertex v )
{
    check_pair( h, u, v );
    return h.row( u, v ).to_vector();
}

LinkGraph link( const Hypergraph3& h, Vertex v )
{
    check_vertex( h, v );
    std::vector< LinkGraph::Pair > pairs;
    pairs.reserve( h.degree_unchecked( v ) );
    for ( const auto& e : h.edges() ) {
        if ( e[ 0 ] == v )
            pairs.emplace_back( e[ 1 ], e[ 2 ] );
        else if ( e[ 1 ] == v )
            pairs.emplace_back( e[ 0 ], e[ 2 ] );
        else if ( e[ 2 ] == v )
            pairs.emplace_back( e[ 0 ], e[ 1 ] );
    }
    return LinkGraph( v, h.n(), std::move( pairs ) );
}

DegreeProfile degree_profile( const Hypergraph3& h )
{
    if ( h.n() < 2 )
        throw InputError( "degree_profile needs n >= 2" );
    DegreeProfile p;
    p.n = h.n();
    p.codegree_table.reserve( h.n() * ( h.n() - 1 ) / 2 );
    p.min_degree = std::numeric_limits< std::uint32_t >::max();
    p.min_codegree = std::numeric_limits< std::uint32_t >::max();
    for ( Vertex u = 0; u < h.n(); ++u ) {
        p.min_degree = std::min( p.min_degree, h.degree_unchecked( u ) );
        for ( Vertex v = u + 1; v < h.n(); ++v ) {
            const auto c = h.codegree_unchecked( u, v );
            p.codegree_table.push_back( c );
            p.min_codegree = std::min( p.min_codegree, c );
        }
    }
    return p;
}

boost::multiprecision::cpp_int choose3( const boost::multiprecision::cpp_int& n )
{
    if ( n < 3 )
        return 0;
    return n * ( n - 1 ) * ( n - 2 ) / 6;
}

std::string to_decimal( const Rational& r, int digits )
{
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator( r );
    const cpp_int den = boost::multiprecision::denominator( r );
    const bool neg = num < 0;
    if ( neg )
        num = -num;
    cpp_int scale = 1;
    for ( int i = 0; i < digits; ++i )
        scale *= 10;
    // round half up on the scaled value
    const cpp_int scaled = ( num * scale * 2 + den ) / ( den * 2 );
    const cpp_int whole = scaled / scale;
    std::string frac = cpp_int( scaled % scale ).str();
    frac.insert( 0, static_cast< std::size_t >( digits ) - frac.size(), '0' );
    std::string out = neg ? "-" : "";
    out += whole.str();
    if ( digits > 0 )
        out += "." + frac;
    return out;
}

Density edge_density( const Hypergraph3& h )
{
    if ( h.n() < 3 )
        throw InputError( "edge_density needs n >= 3" );
    Density d;
    d.value = Rational( boost::multiprecision::cpp_int( h.edge_count() ), choose3( h.n() ) );
    d.decimal = to_decimal( d.value );
    return d;
}

} // namespace codegree
