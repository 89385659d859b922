#include "codegree/nice_picture.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "codegree/constructions.hpp"

namespace codegree {

std::string to_string( Outcome o )
{
    return o == Outcome::found ? "found" : "not-found";
}

std::string to_string( FailureReason r )
{
    switch ( r ) {
    case FailureReason::empty_set:
        return "S_k-empty";
    case FailureReason::no_collision:
        return "no-collision";
    case FailureReason::budget_exhausted:
        return "budget-exhausted";
    }
    return "unknown";
}

PairSet::PairSet( std::size_t n )
    : n_( n )
{
    if ( dense() )
        bits_ = Bitset( n * n );
}

void PairSet::insert( Vertex x, Vertex y )
{
    const std::uint64_t key = static_cast< std::uint64_t >( x ) * n_ + y;
    if ( dense() ) {
        if ( !bits_.test( key ) ) {
            bits_.set( key );
            ++size_;
        }
    } else if ( sparse_.insert( key ).second ) {
        ++size_;
    }
}

bool PairSet::contains( Vertex x, Vertex y ) const noexcept
{
    if ( x >= n_ || y >= n_ )
        return false;
    const std::uint64_t key = static_cast< std::uint64_t >( x ) * n_ + y;
    return dense() ? bits_.test( key ) : sparse_.count( key ) > 0;
}

std::vector< OrderedPair > PairSet::to_vector() const
{
    std::vector< OrderedPair > out;
    out.reserve( size_ );
    for_each( [ & ]( Vertex x, Vertex y ) { out.emplace_back( x, y ); } );
    return out;
}

namespace {

// ceil with slack for values like 5/0.1² that land a hair above an integer
std::size_t ceil_tolerant( double x )
{
    const double r = std::round( x );
    if ( std::fabs( x - r ) <= 1e-9 * std::max( 1.0, std::fabs( x ) ) )
        return static_cast< std::size_t >( r );
    return static_cast< std::size_t >( std::ceil( x ) );
}

void check_epsilon( double epsilon )
{
    if ( !( epsilon > 0.0 && epsilon < 1.0 ) )
        throw InputError( "epsilon must lie in (0, 1)" );
}

} // namespace

std::size_t picture_target( double epsilon )
{
    check_epsilon( epsilon );
    return ceil_tolerant( 5.0 / ( epsilon * epsilon ) ) + 1;
}

std::size_t initial_set_size( std::size_t n, double epsilon )
{
    check_epsilon( epsilon );
    return ceil_tolerant( epsilon * static_cast< double >( n ) / 2.0 );
}

bool below_theorem_threshold( std::size_t n, double epsilon )
{
    check_epsilon( epsilon );
    const double log_threshold = ( 5.0 / ( epsilon * epsilon ) + 2.0 ) * std::log( 2.0 / epsilon );
    return std::log( static_cast< double >( std::max< std::size_t >( n, 1 ) ) ) < log_threshold;
}

bool verify_nice_picture( const Hypergraph3& h, const NicePicture& p )
{
    const std::size_t n = h.n();
    const Vertex v = p.apex, b = p.pivot;
    if ( v >= n || b >= n || v == b )
        return false;
    if ( p.pairs.n() != n )
        return false;
    std::vector< bool > in_s( n, false );
    for ( Vertex u : p.members ) {
        if ( u >= n || u == v || u == b || in_s[ u ] )
            return false;
        in_s[ u ] = true;
        // (i): u ∈ N_{L_v}(b)
        if ( !h.has_edge( u, b, v ) )
            return false;
    }
    // (ii) splits into u-b (checked above), b-x and x-y being edges of L_v,
    // plus distinctness of u, b, x, y.
    bool ok = true;
    p.pairs.for_each( [ & ]( Vertex x, Vertex y ) {
        if ( !ok )
            return;
        if ( x == y || x == v || y == v || x == b || y == b || in_s[ x ] || in_s[ y ] )
            ok = false;
        else if ( !h.has_edge( b, x, v ) || !h.has_edge( x, y, v ) )
            ok = false;
    } );
    return ok;
}

PairSet build_pairs( const LinkGraph& link, Vertex pivot, std::span< const Vertex > members )
{
    const std::size_t n = link.n();
    if ( pivot >= n || pivot == link.center() )
        throw InputError( "build_pairs: pivot out of range or equal to the link center" );
    const BitsetView nb = link.neighbors( pivot );
    Bitset excluded( n );
    for ( Vertex u : members ) {
        if ( u >= n || !nb.test( u ) )
            throw InputError( "build_pairs: S is not contained in N_L(b)" );
        excluded.set( u );
    }
    excluded.set( pivot );

    PairSet out( n );
    Bitset xs( nb );
    xs.subtract( excluded );
    Bitset ys( n );
    xs.for_each( [ & ]( std::size_t x ) {
        ys = Bitset( link.neighbors( static_cast< Vertex >( x ) ) );
        ys.subtract( excluded );
        ys.reset( x );
        ys.for_each( [ & ]( std::size_t y ) { out.insert( static_cast< Vertex >( x ), static_cast< Vertex >( y ) ); } );
    } );
    return out;
}

NicePicture extend_picture( const Hypergraph3& h, std::span< const Vertex > prev, std::size_t k, double epsilon,
                            ApexRule rule, StageTrace* trace )
{
    check_epsilon( epsilon );
    if ( prev.empty() )
        throw InputError( "extend_picture: previous set is empty" );
    const std::size_t n = h.n();
    Bitset prev_set( n );
    for ( Vertex u : prev ) {
        if ( u >= n )
            throw InputError( "extend_picture: vertex out of range" );
        prev_set.set( u );
    }

    Vertex apex = *std::min_element( prev.begin(), prev.end() );
    if ( rule == ApexRule::max_degree ) {
        for ( Vertex u : prev )
            if ( h.degree_unchecked( u ) > h.degree_unchecked( apex )
                 || ( h.degree_unchecked( u ) == h.degree_unchecked( apex ) && u < apex ) )
                apex = u;
    }

    const LinkGraph lv = link( h, apex );
    Vertex pivot = apex == 0 ? 1 : 0;
    std::size_t best = 0;
    bool have = false;
    for ( Vertex b = 0; b < n; ++b ) {
        if ( b == apex )
            continue;
        const std::size_t c = lv.neighbors( b ).intersect_count( prev_set );
        if ( !have || c > best ) {
            best = c;
            pivot = b;
            have = true;
        }
    }
    if ( !have )
        throw InputError( "extend_picture: host needs at least two vertices" );

    NicePicture pic;
    pic.apex = apex;
    pic.pivot = pivot;
    Bitset s( lv.neighbors( pivot ) );
    s &= prev_set;
    pic.members = s.to_vector();
    pic.pairs = build_pairs( lv, pivot, pic.members );

    if ( trace ) {
        trace->k = k;
        trace->apex = apex;
        trace->pivot = pivot;
        trace->prev_size = prev.size();
        trace->size = pic.members.size();
        trace->pair_count = pic.pairs.size();
        trace->link_min_degree = lv.min_degree();
    }
    return pic;
}

std::optional< Collision > find_collision( const PictureChain& chain )
{
    // pair -> (first, second) picture index containing it
    std::map< OrderedPair, std::pair< std::size_t, std::size_t > > seen;
    for ( std::size_t j = 0; j < chain.pictures.size(); ++j ) {
        chain.pictures[ j ].pairs.for_each( [ & ]( Vertex x, Vertex y ) {
            auto [ it, fresh ] = seen.try_emplace( { x, y }, j + 1, 0 );
            if ( !fresh && it->second.second == 0 )
                it->second.second = j + 1;
        } );
    }
    std::optional< Collision > best;
    for ( const auto& [ pair, idx ] : seen ) {
        if ( idx.second == 0 )
            continue;
        const Collision c{ idx.first, idx.second, pair.first, pair.second };
        if ( !best || std::tie( c.i, c.j, c.x, c.y ) < std::tie( best->i, best->j, best->x, best->y ) )
            best = c;
    }
    return best;
}

Embedding assemble_c5( const Hypergraph3& h, const PictureChain& chain, const Collision& c )
{
    if ( !( c.i >= 1 && c.i < c.j && c.j <= chain.pictures.size() ) )
        throw InputError( "assemble_c5: need 1 <= i < j <= number of pictures" );
    const NicePicture& pi = chain.pictures[ c.i - 1 ];
    const NicePicture& pj = chain.pictures[ c.j - 1 ];
    if ( !std::binary_search( pi.members.begin(), pi.members.end(), pj.apex ) )
        throw InputError( "assemble_c5: v_j is not in S_i" );
    if ( !pi.pairs.contains( c.x, c.y ) || !pj.pairs.contains( c.x, c.y ) )
        throw InputError( "assemble_c5: (x, y) is not in P_i ∩ P_j" );

    const Vertex u = pj.apex, b = pi.pivot, v = pi.apex, x = c.x, y = c.y;
    for ( const Edge& e : { Edge{ u, b, v }, Edge{ b, v, x }, Edge{ v, x, y }, Edge{ x, y, u } } )
        if ( !h.has_edge( e ) )
            throw InternalError( "assemble_c5: collision did not yield an edge" );

    // C5⁻ is built missing {3, 4, 0}; put y u b there.
    Embedding e{ tight_cycle_minus( 5 ), h, { b, v, x, y, u } };
    if ( !verify_embedding( e ) )
        throw InternalError( "assemble_c5: assembled copy failed verification" );
    return e;
}

SearchReport find_c5_minus( const Hypergraph3& h, double epsilon, const SearchOptions& options )
{
    check_epsilon( epsilon );
    const std::size_t n = h.n();
    if ( n < 5 )
        throw InputError( "find_c5_minus needs n >= 5" );

    SearchReport rep;
    rep.epsilon = epsilon;
    rep.n = n;
    rep.seed = options.seed.value_or( 0 );
    rep.random_initial = options.seed.has_value();
    rep.min_codegree = degree_profile( h ).min_codegree;
    const double en = epsilon * static_cast< double >( n );
    rep.codegree_hypothesis = static_cast< double >( rep.min_codegree ) >= en;
    rep.below_threshold = below_theorem_threshold( n, epsilon );

    PictureChain& chain = rep.chain;
    chain.epsilon = epsilon;
    chain.target = picture_target( epsilon );

    const std::size_t s0 = std::min( initial_set_size( n, epsilon ), n );
    std::vector< Vertex > all( n );
    for ( Vertex i = 0; i < n; ++i )
        all[ i ] = i;
    if ( options.seed ) {
        // partial Fisher-Yates driven directly by the engine for portable output
        std::mt19937_64 rng( *options.seed );
        for ( std::size_t i = 0; i < s0; ++i ) {
            const std::size_t j = i + static_cast< std::size_t >( rng() % ( n - i ) );
            std::swap( all[ i ], all[ j ] );
        }
    }
    chain.initial.assign( all.begin(), all.begin() + static_cast< std::ptrdiff_t >( s0 ) );
    std::sort( chain.initial.begin(), chain.initial.end() );

    const bool pair_bound_applies = static_cast< double >( n ) >= 20.0 / epsilon;
    if ( rep.codegree_hypothesis && !pair_bound_applies )
        rep.notes.push_back( "pair-count bound not asserted: n < 20/epsilon" );

    // first picture index holding each pair; dense table for small n
    const bool dense_seen = n <= PairSet::kDenseLimit;
    std::vector< std::uint32_t > seen_table( dense_seen ? n * n : 0, 0 );
    std::unordered_map< std::uint64_t, std::uint32_t > seen_map;
    auto seen = [ & ]( Vertex x, Vertex y ) -> std::uint32_t {
        const std::uint64_t key = static_cast< std::uint64_t >( x ) * n + y;
        if ( dense_seen )
            return seen_table[ key ];
        const auto it = seen_map.find( key );
        return it == seen_map.end() ? 0 : it->second;
    };
    auto mark = [ & ]( Vertex x, Vertex y, std::uint32_t k ) {
        const std::uint64_t key = static_cast< std::uint64_t >( x ) * n + y;
        if ( dense_seen ) {
            if ( seen_table[ key ] == 0 )
                seen_table[ key ] = k;
        } else {
            seen_map.emplace( key, k );
        }
    };
    std::vector< Vertex > prev = chain.initial;
    for ( std::size_t k = 1;; ++k ) {
        if ( !options.extended && k > chain.target ) {
            rep.failure = FailureStage{ chain.target, FailureReason::no_collision };
            break;
        }
        if ( options.extended && k > options.max_pictures ) {
            rep.failure = FailureStage{ k - 1, FailureReason::budget_exhausted };
            break;
        }
        if ( prev.empty() ) {
            rep.failure = FailureStage{ k, FailureReason::empty_set };
            break;
        }

        StageTrace st;
        NicePicture pic = extend_picture( h, prev, k, epsilon, options.apex_rule, &st );
        if ( !verify_nice_picture( h, pic ) )
            throw InternalError( "extend_picture produced an invalid nice picture" );

        if ( rep.codegree_hypothesis ) {
            std::ostringstream msg;
            if ( static_cast< double >( st.link_min_degree ) < en )
                msg << "k=" << k << " link min degree " << st.link_min_degree << " < epsilon*n; ";
            if ( static_cast< double >( st.size ) + 1e-9 < epsilon * ( static_cast< double >( st.prev_size ) - 1.0 ) )
                msg << "k=" << k << " |S_k|=" << st.size << " < epsilon(|S_{k-1}|-1); ";
            if ( pair_bound_applies && static_cast< double >( st.pair_count ) < en * en / 5.0 )
                msg << "k=" << k << " |P_k|=" << st.pair_count << " < epsilon^2 n^2/5; ";
            if ( !msg.str().empty() )
                rep.notes.push_back( msg.str() );
        }

        // earliest j, then least (i, x, y)
        std::optional< Collision > hit;
        pic.pairs.for_each( [ & ]( Vertex x, Vertex y ) {
            const std::uint32_t i = seen( x, y );
            if ( i != 0 && ( !hit || i < hit->i ) )
                hit = Collision{ i, k, x, y };
        } );
        pic.pairs.for_each( [ & ]( Vertex x, Vertex y ) { mark( x, y, static_cast< std::uint32_t >( k ) ); } );

        prev = pic.members;
        chain.pictures.push_back( std::move( pic ) );
        rep.trace.push_back( st );

        if ( hit ) {
            rep.collision = hit;
            rep.witness = assemble_c5( h, chain, *hit );
            const auto& m = rep.witness->map;
            rep.cycle = { m[ 4 ], m[ 0 ], m[ 1 ], m[ 2 ], m[ 3 ] };
            rep.outcome = Outcome::found;
            break;
        }
    }
    return rep;
}

} // namespace codegree
