#include <doctest.h>

#include <random>

#include "codegree/constructions.hpp"
#include "codegree/nice_picture.hpp"
#include "oracles.hpp"

using namespace codegree;

namespace {

NicePicture picture( std::size_t n, Vertex v, Vertex b, std::vector< Vertex > s, std::vector< OrderedPair > p )
{
    NicePicture pic;
    pic.apex = v;
    pic.pivot = b;
    pic.members = std::move( s );
    pic.pairs = PairSet( n );
    for ( auto [ x, y ] : p )
        pic.pairs.insert( x, y );
    return pic;
}

// x a link neighbour of b, y a link neighbour of x, both outside S and b, x != y
std::vector< OrderedPair > pairs_bruteforce( const LinkGraph& l, Vertex b, const std::vector< Vertex >& s )
{
    std::vector< OrderedPair > out;
    const auto in_s = [ & ]( Vertex z ) { return std::find( s.begin(), s.end(), z ) != s.end(); };
    for ( Vertex x = 0; x < l.n(); ++x )
        for ( Vertex y = 0; y < l.n(); ++y ) {
            if ( in_s( x ) || in_s( y ) || x == y || x == b || y == b )
                continue;
            if ( l.has_edge( b, x ) && l.has_edge( x, y ) )
                out.emplace_back( x, y );
        }
    return out;
}

} // namespace

TEST_SUITE( "nice_picture" )
{
    TEST_CASE( "picture parameters" )
    {
        CHECK( picture_target( 0.5 ) == 21 );
        CHECK( picture_target( 0.3 ) == 57 );
        CHECK( picture_target( 0.1 ) == 501 );
        CHECK( picture_target( 0.2 ) == 126 );
        CHECK( initial_set_size( 40, 0.3 ) == 6 );
        CHECK( initial_set_size( 41, 0.3 ) == 7 );
        CHECK( initial_set_size( 20, 0.5 ) == 5 );
        CHECK( below_theorem_threshold( 1000000, 0.5 ) );
        CHECK_FALSE( below_theorem_threshold( static_cast< std::size_t >( 1e18 ), 0.9 ) );
        CHECK_THROWS_AS( picture_target( 0.0 ), InputError );
        CHECK_THROWS_AS( picture_target( 1.0 ), InputError );
    }

    TEST_CASE( "verify_nice_picture" )
    {
        const auto k6 = complete( 6 );
        CHECK( verify_nice_picture( tight_cycle( 5 ), picture( 5, 0, 1, {}, {} ) ) );
        CHECK( verify_nice_picture( k6, picture( 6, 0, 1, { 2 }, { { 3, 4 } } ) ) );
        // C5 with v=v1, b=v2, S={v3}, P={(v5, v4)}: v3-v2-v5-v4 is a path of L_{v1}
        const auto c5 = tight_cycle( 5 );
        CHECK( verify_nice_picture( c5, picture( 5, 0, 1, { 2 }, { { 4, 3 } } ) ) );
        // reversed pair: v2-v4 is not a link edge
        CHECK_FALSE( verify_nice_picture( c5, picture( 5, 0, 1, { 2 }, { { 3, 4 } } ) ) );
        // condition (i) fails: v4 is not a link neighbour of v2
        CHECK_FALSE( verify_nice_picture( c5, picture( 5, 0, 1, { 3 }, {} ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 6, 0, 0, {}, {} ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 6, 0, 1, { 2 }, { { 2, 4 } } ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 6, 0, 1, { 2 }, { { 3, 3 } } ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 6, 0, 1, { 2 }, { { 1, 3 } } ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 6, 0, 1, { 1 }, {} ) ) );
        CHECK_FALSE( verify_nice_picture( k6, picture( 7, 0, 1, {}, {} ) ) );
    }

    TEST_CASE( "build_pairs on the complete link" )
    {
        const auto l = link( complete( 6 ), 0 );
        const std::vector< Vertex > s{ 2 };
        const auto p = build_pairs( l, 1, s );
        CHECK( p.size() == 6 );
        CHECK( p.to_vector() == std::vector< OrderedPair >{ { 3, 4 }, { 3, 5 }, { 4, 3 }, { 4, 5 }, { 5, 3 }, { 5, 4 } } );
    }

    TEST_CASE( "build_pairs is empty when S exhausts N_L(b)" )
    {
        // star around b=1 in the link of 0: N(1) = {2, 3}
        const LinkGraph l( 0, 6, { { 1, 2 }, { 1, 3 }, { 3, 4 }, { 4, 5 } } );
        const std::vector< Vertex > s{ 2, 3 };
        CHECK( build_pairs( l, 1, s ).empty() );
        const std::vector< Vertex > bad{ 4 };
        CHECK_THROWS_AS( build_pairs( l, 1, bad ), InputError );
        CHECK_THROWS_AS( build_pairs( l, 0, {} ), InputError );
    }

    TEST_CASE( "build_pairs matches brute-force enumeration" )
    {
        std::mt19937_64 rng( 77 );
        for ( int t = 0; t < 40; ++t ) {
            const auto h = oracle::random_hypergraph( 8 + t % 7, 0.45, rng );
            const Vertex v = static_cast< Vertex >( rng() % h.n() );
            const auto l = link( h, v );
            const Vertex b = static_cast< Vertex >( ( v + 1 + rng() % ( h.n() - 1 ) ) % h.n() );
            std::vector< Vertex > s;
            l.neighbors( b ).for_each( [ & ]( std::size_t u ) {
                if ( rng() % 3 == 0 )
                    s.push_back( static_cast< Vertex >( u ) );
            } );
            CHECK( build_pairs( l, b, s ).to_vector() == pairs_bruteforce( l, b, s ) );
        }
    }

    TEST_CASE( "sparse pair storage above the dense limit" )
    {
        const std::size_t n = PairSet::kDenseLimit + 10;
        const Vertex far = static_cast< Vertex >( n - 1 );
        const LinkGraph l( 0, n, { { 1, 2 }, { 1, 3 }, { 3, far }, { 2, far } } );
        const std::vector< Vertex > s{ 2 };
        const auto p = build_pairs( l, 1, s );
        CHECK_FALSE( p.dense() );
        CHECK( p.to_vector() == std::vector< OrderedPair >{ { 3, far } } );
        CHECK( p.contains( 3, far ) );
        CHECK_FALSE( p.contains( far, 3 ) );
    }

    TEST_CASE( "quantitative pair bound on a dense link" )
    {
        // δ(L) >= εn with |S| <= εn/2 and n >= 20/ε
        std::mt19937_64 rng( 8 );
        const double eps = 0.4;
        const std::size_t n = 60;
        const auto h = oracle::random_with_min_codegree( n, 0.5, static_cast< unsigned >( eps * n ), rng );
        const auto l = link( h, 0 );
        REQUIRE( static_cast< double >( l.min_degree() ) >= eps * n );
        std::vector< Vertex > s;
        l.neighbors( 1 ).for_each( [ & ]( std::size_t u ) {
            if ( s.size() < eps * n / 2 )
                s.push_back( static_cast< Vertex >( u ) );
        } );
        CHECK( static_cast< double >( build_pairs( l, 1, s ).size() ) >= eps * eps * n * n / 5 );
    }

    TEST_CASE( "extend_picture on K6" )
    {
        const auto k6 = complete( 6 );
        const std::vector< Vertex > prev{ 1, 2, 3 };
        StageTrace st;
        const auto pic = extend_picture( k6, prev, 1, 0.5, ApexRule::smallest_id, &st );
        CHECK( pic.apex == 1 );
        // the apex is not a vertex of its own link, so at most |prev| - 1 survive
        CHECK( pic.pivot == 0 );
        CHECK( pic.members == std::vector< Vertex >{ 2, 3 } );
        CHECK( verify_nice_picture( k6, pic ) );
        CHECK( st.prev_size == 3 );
        CHECK( st.size == 2 );
        CHECK( st.pair_count == pic.pairs.size() );
        CHECK( st.link_min_degree == 4 );
        CHECK_THROWS_AS( extend_picture( k6, {}, 1, 0.5 ), InputError );
    }

    TEST_CASE( "extend_picture apex rules" )
    {
        // vertex 3 has the largest degree
        const Hypergraph3 h( 6, { { 0, 1, 3 }, { 1, 2, 3 }, { 2, 3, 4 }, { 3, 4, 5 }, { 0, 3, 5 } } );
        const std::vector< Vertex > prev{ 1, 2, 3 };
        CHECK( extend_picture( h, prev, 1, 0.2 ).apex == 1 );
        CHECK( extend_picture( h, prev, 1, 0.2, ApexRule::max_degree ).apex == 3 );
    }

    TEST_CASE( "pictures in the C5- free construction still verify" )
    {
        const auto mr = mubayi_rodl( 1 ).result;
        const std::vector< Vertex > prev{ 0, 1, 2, 3, 4 };
        const auto pic = extend_picture( mr, prev, 1, 0.3 );
        CHECK( verify_nice_picture( mr, pic ) );
    }

    TEST_CASE( "averaging bound |S_k| >= eps(|S_k-1| - 1)" )
    {
        std::mt19937_64 rng( 19 );
        for ( int t = 0; t < 10; ++t ) {
            const std::size_t n = 30 + t;
            const double eps = 0.3;
            const auto h = oracle::random_with_min_codegree( n, 0.2, static_cast< unsigned >( std::ceil( eps * n ) ), rng );
            std::vector< Vertex > prev;
            for ( Vertex v = 0; v < 12; ++v )
                prev.push_back( static_cast< Vertex >( ( v * 7 + t ) % n ) );
            std::sort( prev.begin(), prev.end() );
            prev.erase( std::unique( prev.begin(), prev.end() ), prev.end() );
            StageTrace st;
            const auto pic = extend_picture( h, prev, 1, eps, ApexRule::smallest_id, &st );
            CHECK( static_cast< double >( st.size ) >= eps * ( static_cast< double >( prev.size() ) - 1 ) );
            CHECK( static_cast< double >( st.link_min_degree ) >= eps * n );
            CHECK( verify_nice_picture( h, pic ) );
        }
    }

    TEST_CASE( "find_collision" )
    {
        PictureChain chain;
        chain.pictures.push_back( picture( 6, 0, 1, {}, { { 3, 4 } } ) );
        chain.pictures.push_back( picture( 6, 0, 1, {}, { { 3, 4 } } ) );
        CHECK( find_collision( chain ) == Collision{ 1, 2, 3, 4 } );

        PictureChain disjoint;
        disjoint.pictures.push_back( picture( 6, 0, 1, {}, { { 3, 4 } } ) );
        disjoint.pictures.push_back( picture( 6, 0, 1, {}, { { 4, 3 } } ) );
        disjoint.pictures.push_back( picture( 6, 0, 1, {}, { { 2, 5 } } ) );
        CHECK_FALSE( find_collision( disjoint ) );

        // least (i, j, x, y): the pair shared by P1 and P3 beats the one shared by P2 and P3
        PictureChain three;
        three.pictures.push_back( picture( 6, 0, 1, {}, { { 5, 4 } } ) );
        three.pictures.push_back( picture( 6, 0, 1, {}, { { 2, 3 } } ) );
        three.pictures.push_back( picture( 6, 0, 1, {}, { { 2, 3 }, { 5, 4 } } ) );
        CHECK( find_collision( three ) == Collision{ 1, 3, 5, 4 } );
    }

    TEST_CASE( "assemble_c5 preconditions" )
    {
        const auto k6 = complete( 6 );
        PictureChain chain;
        chain.pictures.push_back( picture( 6, 0, 1, { 2, 3 }, { { 4, 5 } } ) );
        chain.pictures.push_back( picture( 6, 2, 0, { 3 }, { { 4, 5 } } ) );
        const auto e = assemble_c5( k6, chain, { 1, 2, 4, 5 } );
        CHECK( verify_embedding( e ) );
        CHECK( e.pattern == tight_cycle_minus( 5 ) );
        // (u b v x y) = (2 1 0 4 5); C5- ids 0..4 carry b v x y u
        CHECK( e.map == std::vector< Vertex >{ 1, 0, 4, 5, 2 } );

        CHECK_THROWS_AS( assemble_c5( k6, chain, { 2, 1, 4, 5 } ), InputError );
        CHECK_THROWS_AS( assemble_c5( k6, chain, { 1, 3, 4, 5 } ), InputError );
        CHECK_THROWS_AS( assemble_c5( k6, chain, { 1, 2, 5, 4 } ), InputError );
        PictureChain outside = chain;
        outside.pictures[ 1 ].apex = 5;
        CHECK_THROWS_AS( assemble_c5( k6, outside, { 1, 2, 4, 5 } ), InputError );
        // a host missing one of the four edges
        const auto sparse = k6.without_edge( { 2, 4, 5 } );
        CHECK_THROWS_AS( assemble_c5( sparse, chain, { 1, 2, 4, 5 } ), InternalError );
    }

    TEST_CASE( "find_c5_minus on K20" )
    {
        const auto h = complete( 20 );
        const auto rep = find_c5_minus( h, 0.5 );
        REQUIRE( rep.outcome == Outcome::found );
        REQUIRE( rep.witness );
        CHECK( verify_embedding( *rep.witness ) );
        CHECK( oracle::is_copy( tight_cycle_minus( 5 ), h, { rep.witness->map.begin(), rep.witness->map.end() } ) );
        CHECK( rep.codegree_hypothesis );
        CHECK( rep.below_threshold );
        CHECK( rep.chain.target == 21 );
        CHECK( rep.chain.initial == std::vector< Vertex >{ 0, 1, 2, 3, 4 } );
        CHECK( rep.collision->i < rep.collision->j );
        const auto& [ u, b, v, x, y ] = rep.cycle;
        std::set< Vertex > distinct{ u, b, v, x, y };
        CHECK( distinct.size() == 5 );
        CHECK( h.has_edge( u, b, v ) );
        CHECK( h.has_edge( b, v, x ) );
        CHECK( h.has_edge( v, x, y ) );
        CHECK( h.has_edge( x, y, u ) );
        CHECK( find_collision( rep.chain ) == rep.collision );
    }

    TEST_CASE( "find_c5_minus on the depth-2 construction finds nothing" )
    {
        const auto h = mubayi_rodl( 2 ).result;
        for ( double eps : { 0.1, 0.3, 0.6 } ) {
            const auto rep = find_c5_minus( h, eps );
            CHECK( rep.outcome == Outcome::not_found );
            CHECK_FALSE( rep.witness );
            REQUIRE( rep.failure );
            CHECK_FALSE( rep.codegree_hypothesis );
            for ( const auto& p : rep.chain.pictures )
                CHECK( verify_nice_picture( h, p ) );
        }
        auto ext = find_c5_minus( h, 0.3, { .extended = true } );
        CHECK( ext.outcome == Outcome::not_found );
        CHECK( ext.failure->reason == FailureReason::empty_set );
    }

    TEST_CASE( "extended mode respects the picture cap" )
    {
        // edgeless pictures never collide; S_k empties immediately, so the
        // cap is only reached with a cap of zero
        const auto h = mubayi_rodl( 2 ).result;
        const auto rep = find_c5_minus( h, 0.3, { .extended = true, .max_pictures = 0 } );
        REQUIRE( rep.failure );
        CHECK( rep.failure->reason == FailureReason::budget_exhausted );
        CHECK( rep.chain.pictures.empty() );
    }

    TEST_CASE( "the chain is nested and apexes stay inside the previous set" )
    {
        std::mt19937_64 rng( 3 );
        const auto h = oracle::random_with_min_codegree( 50, 0.2, 10, rng );
        const auto rep = find_c5_minus( h, 0.2, { .seed = 99 } );
        std::vector< Vertex > prev = rep.chain.initial;
        for ( const auto& p : rep.chain.pictures ) {
            CHECK( std::binary_search( prev.begin(), prev.end(), p.apex ) );
            CHECK( std::includes( prev.begin(), prev.end(), p.members.begin(), p.members.end() ) );
            CHECK_FALSE( std::binary_search( p.members.begin(), p.members.end(), p.apex ) );
            prev = p.members;
        }
    }

    TEST_CASE( "find_c5_minus is deterministic per seed" )
    {
        std::mt19937_64 rng( 4 );
        const auto h = oracle::random_with_min_codegree( 45, 0.25, 14, rng );
        const auto a = find_c5_minus( h, 0.3, { .seed = 7 } );
        const auto b = find_c5_minus( h, 0.3, { .seed = 7 } );
        CHECK( a.chain.initial == b.chain.initial );
        CHECK( a.cycle == b.cycle );
        CHECK( a.collision == b.collision );
        CHECK( a.trace.size() == b.trace.size() );
        CHECK( a.seed == 7 );
        CHECK( a.random_initial );
        const auto c = find_c5_minus( h, 0.3, { .seed = 8 } );
        CHECK( c.chain.initial.size() == a.chain.initial.size() );
    }

    TEST_CASE( "find_c5_minus argument checks" )
    {
        CHECK_THROWS_AS( find_c5_minus( complete( 4 ), 0.5 ), InputError );
        CHECK_THROWS_AS( find_c5_minus( complete( 8 ), 1.5 ), InputError );
        CHECK_THROWS_AS( find_c5_minus( complete( 8 ), 0.0 ), InputError );
    }
}
